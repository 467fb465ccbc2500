#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kfl/execution.hpp"
#include "kfl/matrix.hpp"
#include "kfl/symplectic.hpp"

namespace kfl {

// Two H1 maps M, N : H1(S_g) -> Z^t are equivalent when M * A = B * N for some
// A in Sp^{+-}(2g, Z) and B in GL(t, Z).

enum class Answer { Yes, No, Unknown };
enum class Certificate { OracleKMismatch, RankObstruction, ExhaustedBound };

std::string to_string(Answer a);
std::string to_string(Certificate c);

struct Witness {
  SpElement a;
  IntMatrix b;
  /// Generator names of the word evaluating to a (empty for the identity).
  std::vector<std::string> word;
};

struct SearchOptions {
  int depth = 6;
  /// States whose largest |entry| exceeds this are discarded.
  Integer entry_cap = 4;
  /// B ranges over GL(t, Z) with entries in [-b_bound, b_bound].
  int b_bound = 2;
  /// Ceiling on distinct states kept by the search (KFL_MAX_STATES on the command line).
  std::size_t max_states = 2'000'000;
};

struct SearchStats {
  std::size_t states_visited = 0;
  int depth_reached = 0;
  std::size_t b_candidates = 0;
};

struct EquivalenceVerdict {
  Answer answer = Answer::Unknown;
  std::optional<Witness> witness;
  std::optional<Certificate> certificate;
  std::optional<SearchOptions> bounds;
  SearchStats stats;
  /// Which argument produced the verdict: "classification-oracle" or "bounded-word-search".
  std::string provenance;
  std::string note;
};

/// Closed-form decision for canonical forms C(gL, kL) vs C(gR, kR).
/// Throws InvalidInput unless 1 <= kL <= gL and 1 <= kR <= gR.
EquivalenceVerdict decide_canonical(int gL, int kL, int gR, int kR);

/// All B in GL(t, Z) with entries in [-bound, bound], in lexicographic entry order.
std::vector<IntMatrix> unimodular_matrices(int t, int bound);

/// The search alphabet: sp_generators(g) followed by inverses of the non-involutions.
std::vector<NamedElement> search_alphabet(int g);

/// Breadth-first word search for A with M * A = B * N. Returns YES with the first
/// witness in BFS order (generator order, then lexicographic B), else UNKNOWN.
/// Never returns NO. Throws InvalidInput on shape mismatch and
/// ResourceLimitExceeded when more than options.max_states states are kept.
EquivalenceVerdict search_witness(const H1Map& m, const H1Map& n, const SearchOptions& options = {},
                                  Execution exec = Execution::Parallel);

/// Checks M * A == B * N exactly.
bool verify_witness(const H1Map& m, const H1Map& n, const IntMatrix& a, const IntMatrix& b);

struct FalsifyOptions {
  int g = 2;
  int k_left = 1;
  int k_right = 2;
  int entry_bound = 2;
  /// Defaults to entry_bound + 1 when unset.
  std::optional<int> b_bound;
  /// Ceiling on the estimated number of column candidate checks.
  double work_ceiling = 2e10;
  /// How many solutions to keep verbatim in the report.
  std::size_t keep_solutions = 4;
};

struct FalsifyReport {
  FalsifyOptions options;
  int b_bound = 0;
  std::uint64_t symplectic_candidates = 0;  ///< A in the slice with A^t J A = +-J
  std::uint64_t b_candidates = 0;
  std::uint64_t pairs_tested = 0;
  std::uint64_t solutions = 0;
  std::uint64_t nodes_visited = 0;  ///< partial column assignments explored
  double work_estimate = 0;
  std::vector<std::pair<IntMatrix, IntMatrix>> sample_solutions;
};

/// Estimated candidate checks of the pruned column search for (g, entry_bound).
double falsify_work_estimate(int g, int entry_bound);

/// Exhaustive enumeration of C(g,kL) * A = B * C(g,kR) over the bounded slice.
/// Throws ResourceLimitExceeded when the estimate exceeds options.work_ceiling.
FalsifyReport falsify_bounded(const FalsifyOptions& options, Execution exec = Execution::Parallel);

struct ProofDecomposition {
  IntMatrix e;  ///< Gamma^t J_{2k} Gamma, Gamma = first 2k rows of A
  IntMatrix f;  ///< Alpha^t J_{2(g-k)} Alpha, Alpha = remaining rows
  std::size_t rank_e = 0;
  std::size_t rank_f = 0;
};

/// Splits A^t J A = E + F along the first 2k rows. Requires 1 <= k < g.
ProofDecomposition proof_decomposition(const SpElement& a, int k);

struct RefinedRankOptions {
  double tolerance = 1e-9;
  /// Sign s in F = s J - E; the symplectic sign of a hypothetical A.
  int sign = 1;
};

struct RefinedRankReport {
  int det_b = 1;
  /// Max residual of the four block identities for E = [M N]^t J [M N].
  double residual_mm = 0, residual_mn = 0, residual_nm = 0, residual_nn = 0;
  bool identities_hold = false;
  std::size_t rank_s = 0;           ///< numerical rank of S = [M' N']^t J_{2k-2} [M' N']
  std::size_t rank_implied_f = 0;   ///< exact rank of s J - E
  std::size_t rank_actual_f = 0;    ///< exact rank of Alpha^t J Alpha
  bool r_invertible = false;        ///< exact, via build_r
  bool rank_ambiguous = false;      ///< a singular value sits near the rank threshold
  /// R invertible and rank(s J - E) >= 2(g-k)+2 > 2(g-k) >= rank(F): A cannot be in Sp^{+-}.
  bool contradiction = false;
};

/// Numerical check of the block identities used in the rank argument.
/// A is 2g x 2g and must satisfy sum_{i<=k} A_ij = B (j <= l), 0 (j > l) on its
/// first 2k rows. Throws InvalidInput for k = 1 (the 1/(sqrt(k)-1) factor is singular),
/// a violated block constraint, or |det B| != 1.
RefinedRankReport refined_rank_check(const IntMatrix& a, const IntMatrix& b, int k, int l,
                                     const RefinedRankOptions& options = {});

}  // namespace kfl
