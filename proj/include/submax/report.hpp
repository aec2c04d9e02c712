#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/instance.hpp"

namespace submax {

/// The unit of CLI output: a JSON document carrying the achieved value(s),
/// brute-force OPT and ratio when computable, the instantiated bound, trial
/// statistics and the seeds that reproduce the run. The same report renders
/// as a CSV table (one row per candidate for solve runs, one row per trial
/// for simulate runs).
struct RunReport {
  json body;

  std::string to_json_text() const { return body.dump(2) + "\n"; }

  std::string to_csv_text() const {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += cells[i];
      }
      out += "\n";
    };
    if (body.contains("trial_values")) {
      append_row({"trial", "value"});
      int t = 0;
      for (const auto& v : body.at("trial_values"))
        append_row({std::to_string(t++), v.dump()});
      return out;
    }
    if (body.contains("candidates")) {
      append_row({"label", "value", "set"});
      for (const auto& c : body.at("candidates"))
        append_row({c.at("label").get<std::string>(), c.at("value").dump(),
                    "\"" + c.at("set").dump() + "\""});
      return out;
    }
    append_row({"key", "value"});
    for (const auto& [key, value] : body.items())
      append_row({key, "\"" + value.dump() + "\""});
    return out;
  }

  void write(const std::string& path, const std::string& format) const {
    std::ofstream out(path);
    if (!out) throw InvalidConfig("cannot open report path: " + path);
    out << (format == "csv" ? to_csv_text() : to_json_text());
  }

  bool passed() const {
    return !body.contains("pass") || body.at("pass").get<bool>();
  }
};

}  // namespace submax
