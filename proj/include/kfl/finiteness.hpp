#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kfl/equivalence.hpp"
#include "kfl/monodromy.hpp"
#include "kfl/symplectic.hpp"

namespace kfl {

/// A factor of a product map: a branched cover of the torus (geometric) or a bare H1 map (algebraic).
using Factor = std::variant<MonodromyRep, H1Map>;

/// f = f_1 + ... + f_r : S_{g_1} x ... x S_{g_r} -> Z^t, one factor per surface.
struct ProductFibration {
  int target_rank = 2;
  std::vector<Factor> factors;
};

struct FactorSummary {
  bool geometric = false;
  int genus = 0;
  /// Degree of a purely branched cover, or the block count of a canonical H1 map.
  std::optional<int> k;
  bool purely_branched = false;
  bool nontrivial = false;
  Lattice image;
  /// C(genus, k) for purely branched covers, the matrix itself for algebraic factors.
  std::optional<H1Map> h1;
};

/// Empty iff the product is well formed. Invariant names: "factor count",
/// "target_rank", "target_rank mismatch", plus any cover or H1 map violation.
std::vector<Violation> validate_product(const ProductFibration& p);

/// Throws InvalidInput for an invalid factor.
FactorSummary summarize(const Factor& f, int target_rank);

/// Factors make_kfold(g_i, 2), inducing C(g_i, 2).
ProductFibration build_phi(std::span<const int> genera);
/// Factors make_kfold(g_i, g_i), inducing C(g_i, g_i).
ProductFibration build_psi(std::span<const int> genera);

/// Sum of the factor image lattices is all of Z^t. Throws InvalidInput for an invalid product.
bool is_surjective(const ProductFibration& p);

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct FinitenessClaim {
  bool flagged = false;
  std::string citation;
  /// Names of the hypotheses that failed; empty when flagged.
  std::vector<std::string> missing;
};

struct FinitenessReport {
  std::size_t r = 0;
  int target_rank = 2;
  std::vector<FactorSummary> factors;
  bool surjective = false;
  /// The kernel is of type F_{r-1}.
  FinitenessClaim f_lower;
  /// The kernel is not of type F_r.
  FinitenessClaim f_upper;
  std::vector<Hypothesis> hypotheses;
};

inline constexpr const char* kCitationNotFr = "bhms";
inline constexpr const char* kCitationFrMinus1 = "irrational-pencil-finiteness";

/// Never throws on hypothesis failure; throws InvalidInput only for an invalid product.
FinitenessReport finiteness_report(const ProductFibration& p);

using Invariant = std::vector<std::pair<int, int>>;

struct ClassificationVerdict {
  Answer answer = Answer::Unknown;
  /// Sorted multiset {(g_i, k_i)}, present when the side meets the hypotheses.
  std::optional<Invariant> left, right;
  std::vector<std::string> reasons;
  std::string provenance;
};

/// Isomorphism of ker p and ker q for products of purely branched covers with r, s >= 3
/// and t = 2: YES iff the invariants agree. Other inputs get UNKNOWN with the failing
/// hypotheses named. Throws InvalidInput only for an invalid product.
ClassificationVerdict classify_products(const ProductFibration& p, const ProductFibration& q);

}  // namespace kfl
