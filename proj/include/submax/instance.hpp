#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/functions.hpp"

namespace submax {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Typed instance specs. The file format is JSON:
//   { "n": <int>,
//     "function":   {"kind": "coverage" | "cut" | "coverage_minus_cost" |
//                            "cover_gadget" | "modular", ...},
//     "constraint": {"kind": "uniform" | "partition" | "graphic" |
//                            "intersection" | "knapsack", ...} }   (optional)
// Field names per kind are fixed below; parse -> serialize -> parse is the
// identity.
// ---------------------------------------------------------------------------

struct ModularSpec {
  std::vector<double> weights;
  bool operator==(const ModularSpec&) const = default;
};

struct CoverageSpec {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  std::vector<double> weights;  // optional; empty = unit weights
  bool operator==(const CoverageSpec&) const = default;
};

struct CoverageMinusCostSpec {
  int universe = 0;
  std::vector<std::vector<int>> sets;
  std::vector<double> weights;
  std::vector<double> costs;
  bool operator==(const CoverageMinusCostSpec&) const = default;
};

struct CutSpec {
  std::vector<std::tuple<int, int, double>> edges;
  bool operator==(const CutSpec&) const = default;
};

struct CoverGadgetSpec {
  std::vector<int> r;
  std::vector<int> s;
  bool operator==(const CoverGadgetSpec&) const = default;
};

using FunctionSpec = std::variant<ModularSpec, CoverageSpec,
                                  CoverageMinusCostSpec, CutSpec,
                                  CoverGadgetSpec>;

struct ConstraintSpec;

struct UniformSpec {
  int k = 0;
  bool operator==(const UniformSpec&) const = default;
};

struct PartitionSpec {
  std::vector<std::vector<int>> groups;
  bool operator==(const PartitionSpec&) const = default;
};

struct GraphicSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const GraphicSpec&) const = default;
};

struct IntersectionSpec {
  std::vector<ConstraintSpec> members;
  bool operator==(const IntersectionSpec&) const;
};

struct KnapsackSpec {
  std::vector<std::int64_t> sizes;
  std::int64_t budget = 0;
  bool operator==(const KnapsackSpec&) const = default;
};

struct ConstraintSpec {
  std::variant<UniformSpec, PartitionSpec, GraphicSpec, IntersectionSpec,
               KnapsackSpec>
      value;
  bool operator==(const ConstraintSpec&) const = default;
};

inline bool IntersectionSpec::operator==(const IntersectionSpec& other) const {
  return members == other.members;
}

struct Instance {
  int n = 0;
  FunctionSpec function;
  std::optional<ConstraintSpec> constraint;

  bool operator==(const Instance&) const = default;

  std::unique_ptr<ValueOracle> make_oracle() const;
  std::unique_ptr<IndependenceOracle> make_constraint() const;
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json serialize_function(const FunctionSpec& spec) {
  json j;
  if (const auto* m = std::get_if<ModularSpec>(&spec)) {
    j["kind"] = "modular";
    j["weights"] = m->weights;
  } else if (const auto* c = std::get_if<CoverageSpec>(&spec)) {
    j["kind"] = "coverage";
    j["universe"] = c->universe;
    j["sets"] = c->sets;
    if (!c->weights.empty()) j["weights"] = c->weights;
  } else if (const auto* c = std::get_if<CoverageMinusCostSpec>(&spec)) {
    j["kind"] = "coverage_minus_cost";
    j["universe"] = c->universe;
    j["sets"] = c->sets;
    if (!c->weights.empty()) j["weights"] = c->weights;
    j["costs"] = c->costs;
  } else if (const auto* c = std::get_if<CutSpec>(&spec)) {
    j["kind"] = "cut";
    json edges = json::array();
    for (const auto& [u, v, w] : c->edges) edges.push_back(json::array({u, v, w}));
    j["edges"] = std::move(edges);
  } else if (const auto* g = std::get_if<CoverGadgetSpec>(&spec)) {
    j["kind"] = "cover_gadget";
    j["r"] = g->r;
    j["s"] = g->s;
  }
  return j;
}

inline json serialize_constraint(const ConstraintSpec& spec) {
  json j;
  if (const auto* u = std::get_if<UniformSpec>(&spec.value)) {
    j["kind"] = "uniform";
    j["k"] = u->k;
  } else if (const auto* p = std::get_if<PartitionSpec>(&spec.value)) {
    j["kind"] = "partition";
    j["groups"] = p->groups;
  } else if (const auto* g = std::get_if<GraphicSpec>(&spec.value)) {
    j["kind"] = "graphic";
    j["vertices"] = g->vertices;
    json edges = json::array();
    for (const auto& [u, v] : g->edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
  } else if (const auto* i = std::get_if<IntersectionSpec>(&spec.value)) {
    j["kind"] = "intersection";
    json members = json::array();
    for (const auto& m : i->members) members.push_back(serialize_constraint(m));
    j["members"] = std::move(members);
  } else if (const auto* k = std::get_if<KnapsackSpec>(&spec.value)) {
    j["kind"] = "knapsack";
    j["sizes"] = k->sizes;
    j["budget"] = k->budget;
  }
  return j;
}

inline json serialize_instance(const Instance& instance) {
  json j;
  j["n"] = instance.n;
  j["function"] = serialize_function(instance.function);
  if (instance.constraint)
    j["constraint"] = serialize_constraint(*instance.constraint);
  return j;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline FunctionSpec parse_function(const json& j) {
  if (!j.contains("kind")) throw InvalidConfig("function: missing kind");
  const std::string kind = j.at("kind");
  if (kind == "modular") {
    ModularSpec m;
    m.weights = j.at("weights").get<std::vector<double>>();
    return m;
  }
  if (kind == "coverage") {
    CoverageSpec c;
    c.universe = j.at("universe").get<int>();
    c.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    if (j.contains("weights")) c.weights = j.at("weights").get<std::vector<double>>();
    return c;
  }
  if (kind == "coverage_minus_cost") {
    CoverageMinusCostSpec c;
    c.universe = j.at("universe").get<int>();
    c.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    if (j.contains("weights")) c.weights = j.at("weights").get<std::vector<double>>();
    c.costs = j.at("costs").get<std::vector<double>>();
    return c;
  }
  if (kind == "cut") {
    CutSpec c;
    for (const auto& e : j.at("edges"))
      c.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    return c;
  }
  if (kind == "cover_gadget") {
    CoverGadgetSpec g;
    g.r = j.at("r").get<std::vector<int>>();
    g.s = j.at("s").get<std::vector<int>>();
    return g;
  }
  throw InvalidConfig("function: unknown kind '" + kind + "'");
}

inline ConstraintSpec parse_constraint(const json& j) {
  if (!j.contains("kind")) throw InvalidConfig("constraint: missing kind");
  const std::string kind = j.at("kind");
  if (kind == "uniform") return {UniformSpec{j.at("k").get<int>()}};
  if (kind == "partition")
    return {PartitionSpec{j.at("groups").get<std::vector<std::vector<int>>>()}};
  if (kind == "graphic") {
    GraphicSpec g;
    g.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return {g};
  }
  if (kind == "intersection") {
    IntersectionSpec i;
    for (const auto& m : j.at("members")) i.members.push_back(parse_constraint(m));
    return {i};
  }
  if (kind == "knapsack") {
    KnapsackSpec k;
    k.sizes = j.at("sizes").get<std::vector<std::int64_t>>();
    k.budget = j.at("budget").get<std::int64_t>();
    return {k};
  }
  throw InvalidConfig("constraint: unknown kind '" + kind + "'");
}

inline Instance parse_instance(const json& j) {
  Instance instance;
  instance.n = j.at("n").get<int>();
  instance.function = parse_function(j.at("function"));
  if (j.contains("constraint"))
    instance.constraint = parse_constraint(j.at("constraint"));
  return instance;
}

inline Instance parse_instance_text(const std::string& text) {
  return parse_instance(json::parse(text));
}

// ---------------------------------------------------------------------------
// Oracle construction
// ---------------------------------------------------------------------------

inline std::unique_ptr<ValueOracle> Instance::make_oracle() const {
  std::unique_ptr<ValueOracle> oracle;
  if (const auto* m = std::get_if<ModularSpec>(&function)) {
    oracle = std::make_unique<ModularFunction>(m->weights);
  } else if (const auto* c = std::get_if<CoverageSpec>(&function)) {
    oracle = std::make_unique<CoverageFunction>(c->universe, c->sets, c->weights);
  } else if (const auto* c = std::get_if<CoverageMinusCostSpec>(&function)) {
    oracle = std::make_unique<CoverageMinusCostFunction>(c->universe, c->sets,
                                                         c->costs, c->weights);
  } else if (const auto* c = std::get_if<CutSpec>(&function)) {
    oracle = std::make_unique<CutFunction>(n, c->edges);
  } else if (const auto* g = std::get_if<CoverGadgetSpec>(&function)) {
    oracle = std::make_unique<CoverGadget>(g->r, g->s);
  }
  if (!oracle) throw InvalidConfig("instance: unsupported function spec");
  if (oracle->ground_size() != n)
    throw InvalidConfig("instance: function ground size disagrees with n");
  return oracle;
}

namespace detail {

inline std::shared_ptr<const IndependenceOracle> build_constraint(
    const ConstraintSpec& spec, int n) {
  if (const auto* u = std::get_if<UniformSpec>(&spec.value))
    return std::make_shared<UniformMatroid>(n, u->k);
  if (const auto* p = std::get_if<PartitionSpec>(&spec.value))
    return std::make_shared<PartitionMatroid>(p->groups);
  if (const auto* g = std::get_if<GraphicSpec>(&spec.value))
    return std::make_shared<GraphicMatroid>(g->vertices, g->edges);
  if (const auto* i = std::get_if<IntersectionSpec>(&spec.value)) {
    std::vector<std::shared_ptr<const IndependenceOracle>> members;
    for (const auto& m : i->members) members.push_back(build_constraint(m, n));
    return std::make_shared<IntersectionSystem>(std::move(members));
  }
  if (const auto* k = std::get_if<KnapsackSpec>(&spec.value))
    return std::make_shared<KnapsackConstraint>(k->sizes, k->budget);
  throw InvalidConfig("instance: unsupported constraint spec");
}

}  // namespace detail

inline std::unique_ptr<IndependenceOracle> Instance::make_constraint() const {
  if (!constraint) throw InvalidConfig("instance: no constraint present");
  // wrap the shared build so the caller owns a unique handle
  struct Holder : IndependenceOracle {
    std::shared_ptr<const IndependenceOracle> inner;
    explicit Holder(std::shared_ptr<const IndependenceOracle> in)
        : IndependenceOracle(in->ground_size()), inner(std::move(in)) {}
    bool indep_impl(const Subset& s) const override {
      return inner->is_independent(s);
    }
  };
  auto built = detail::build_constraint(*constraint, n);
  if (built->ground_size() != n)
    throw InvalidConfig("instance: constraint ground size disagrees with n");
  return std::make_unique<Holder>(std::move(built));
}

}  // namespace submax
