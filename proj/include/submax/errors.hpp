#pragma once

#include <stdexcept>
#include <string>

namespace submax {

/// Base class for all submax error conditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A subset argument referenced an element outside the ground set, or was
/// not in canonical (strictly ascending) form.
class InvalidSubset : public Error {
 public:
  explicit InvalidSubset(const std::string& what) : Error(what) {}
};

/// An exhaustive operation was requested above its enumeration cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// A parameter value is outside the algorithm's domain (e.g. p < 1).
class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what) : Error(what) {}
};

/// A caller broke a documented protocol contract (e.g. a stream that was
/// promised to be group-contiguous is not).
class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what) : Error(what) {}
};

/// Instance generation exhausted its rejection-sampling budget.
class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(const std::string& what) : Error(what) {}
};

/// An experiment configuration is malformed (unknown algorithm id, missing
/// fields, inconsistent constraint).
class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& what) : Error(what) {}
};

}  // namespace submax
