#pragma once

#include <string>
#include <vector>

#include "kfl/errors.hpp"
#include "kfl/lattice.hpp"
#include "kfl/permutation.hpp"

namespace kfl {

struct BranchPoint {
  std::string label;
  Permutation perm;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// Monodromy of a degree-d branched cover of the torus E.
///
/// pi_1(E \ B) = <alpha, beta, gamma_1..gamma_l | [alpha, beta] gamma_1 ... gamma_l>
/// acts on the d sheets; alpha and beta are the torus generators and each
/// gamma_i is a small loop around branch point i. A rep is valid when the
/// relator evaluates to the identity (left-to-right composition), no branch
/// permutation is the identity and the total ramification is even.
struct MonodromyRep {
  int degree = 1;
  Permutation alpha = Permutation::identity(1);
  Permutation beta = Permutation::identity(1);
  std::vector<BranchPoint> branches;

  friend bool operator==(const MonodromyRep&, const MonodromyRep&) = default;
};

/// Empty iff every invariant holds. Invariant names: "degree", "degree mismatch",
/// "identity branch", "relator", "ramification parity".
std::vector<Violation> validate(const MonodromyRep& rep);

/// Transitivity of <alpha, beta, gamma_i> on the sheets. Requires consistent degrees.
bool is_connected(const MonodromyRep& rep);

/// Riemann-Hurwitz over a genus-1 base: g = 1 + sum_i (d - cycles(gamma_i)) / 2.
/// Throws InvalidInput for invalid or disconnected reps.
int genus(const MonodromyRep& rep);

/// Every lift of alpha and beta closes up, i.e. both monodromies are trivial.
bool is_purely_branched(const MonodromyRep& rep);

/// Image of pi_1 of the cover in pi_1(E) = Z^2: the span of the (alpha, beta)
/// exponent sums of the Schreier generators of the stabilizer of sheet 0.
/// Throws InvalidInput for invalid or disconnected reps.
Lattice image_lattice(const MonodromyRep& rep);

/// Same as image_lattice without the validity checks (the rep must be valid and connected).
Lattice image_lattice_unchecked(const MonodromyRep& rep);

/// h-fold normal cover: branch monodromies (0 1 ... h-1) and its inverse. Genus h.
MonodromyRep make_cyclic(int h);

/// k-fold purely branched cover of genus g with only simple (transposition) branching:
/// two copies of (0 i) for 1 <= i <= k-2 and 2(g-k+1) copies of (0 k-1).
MonodromyRep make_kfold(int g, int k);

/// The Morse-type h-fold cover, make_kfold(h, h).
MonodromyRep make_morse(int h);

}  // namespace kfl
