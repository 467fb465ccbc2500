#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kfl {

/// A named invariant that an input failed, e.g. "relator" or "not a bijection".
struct Violation {
  std::string invariant;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Thrown when input data is malformed or violates a domain invariant.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(std::vector<Violation> violations);
  InvalidInput(std::string invariant, std::string detail);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Thrown when a bounded search would exceed its configured state or work ceiling.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kfl
