#include "kfl/errors.hpp"

#include <utility>

namespace kfl {

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.invariant;
    if (!v.detail.empty()) out += ": " + v.detail;
  }
  return out.empty() ? std::string("invalid input") : out;
}

}  // namespace

InvalidInput::InvalidInput(std::vector<Violation> violations)
    : std::invalid_argument(summarize(violations)), violations_(std::move(violations)) {}

InvalidInput::InvalidInput(std::string invariant, std::string detail)
    : InvalidInput(std::vector<Violation>{{std::move(invariant), std::move(detail)}}) {}

}  // namespace kfl
