#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kfl/lattice.hpp"
#include "kfl/matrix.hpp"
#include "kfl/monodromy.hpp"

namespace kfl {

// Homology conventions: basis (a_1, b_1, ..., a_g, b_g); J_{2g} is block
// diagonal with blocks [[0, 1], [-1, 0]]. Maps act on column vectors, so an
// H1 map M is t x 2g and a change of source basis A acts as M * A.

/// J_{2g}. Throws std::invalid_argument for g < 1.
IntMatrix j_matrix(int g);

/// +1 if A^t J A = J, -1 if A^t J A = -J, nullopt otherwise.
/// Throws std::invalid_argument unless A is square of even size.
std::optional<int> symplectic_sign(const IntMatrix& a);

/// An element of Sp^{+-}(2g, Z): an integer matrix with A^t J A = sign * J.
class SpElement {
 public:
  static std::optional<SpElement> from_matrix(IntMatrix m);
  static SpElement identity(int g);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  int sign() const noexcept { return sign_; }
  int genus() const noexcept { return static_cast<int>(matrix_.rows() / 2); }

  /// Exact inverse -sign * J A^t J; has the same sign.
  SpElement inverse() const;

  friend SpElement operator*(const SpElement& a, const SpElement& b);
  friend bool operator==(const SpElement&, const SpElement&) = default;

 private:
  SpElement(IntMatrix m, int sign) : matrix_(std::move(m)), sign_(sign) {}

  IntMatrix matrix_;
  int sign_ = 1;
};

struct NamedElement {
  std::string name;
  SpElement element;
};

/// Generating set of Sp^{+-}(2g, Z), in this order:
///   U<i>  = [[1,1],[0,1]] on pair i          (transvection along a_i)
///   L<i>  = [[1,0],[1,1]] on pair i          (inverse transvection along b_i)
///   Ta<i> = transvection along a_i - a_{i+1}
///   Tb<i> = transvection along b_i - b_{i+1}
///   P<i>  = swap of symplectic pairs i and i+1
///   R     = diag(1, -1) on every pair         (sign -1)
/// Pairs are numbered from 1. The transvection along v is x -> x + (v^t J x) v.
std::vector<NamedElement> sp_generators(int g);

/// Symplectic transvection x -> x + (v^t J x) v.
IntMatrix transvection(const std::vector<Integer>& v);

/// Permutation of symplectic pairs: pair i of the source goes to pair perm[i].
IntMatrix block_permutation(std::span<const int> perm);

/// Induced map H1(S_g; Z) -> Z^t, column 2i (2i+1) is the image of a_{i+1} (b_{i+1}).
struct H1Map {
  int genus = 1;
  int target_rank = 2;
  IntMatrix matrix;

  /// Throws InvalidInput unless matrix is target_rank x 2*genus.
  static H1Map make(int genus, int target_rank, IntMatrix matrix);

  bool is_trivial() const { return matrix.is_zero(); }
  /// Sublattice of Z^t spanned by the columns.
  Lattice image() const;

  friend bool operator==(const H1Map&, const H1Map&) = default;
};

/// C(g, k) = (I ... I 0 ... 0) with k leading 2x2 identity blocks.
H1Map canonical_form(int g, int k);

/// k if map == C(g, k) for some 1 <= k <= g.
std::optional<int> canonical_block_count(const H1Map& map);

struct NotCanonical {
  Lattice image;
};
using InducedH1 = std::variant<H1Map, NotCanonical>;

/// Purely branched covers induce C(genus, degree); others report their image lattice.
/// Throws InvalidInput for invalid or disconnected reps.
InducedH1 induced_h1(const MonodromyRep& rep);

}  // namespace kfl
