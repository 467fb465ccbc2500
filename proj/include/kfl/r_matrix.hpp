#pragma once

#include "kfl/integer.hpp"
#include "kfl/matrix.hpp"

namespace kfl {

/// Signs of the two terms in the diagonal blocks (unit * 1 + frac * 1/k) J and
/// of the off-diagonal blocks frac * (1/k) J.
struct RSigns {
  int unit = 1;
  int frac = 1;
};

/// The 2l x 2l block matrix with diagonal blocks (unit + frac/k) J and
/// off-diagonal blocks (frac/k) J, over exact rationals.
struct RMatrix {
  int l = 1;
  Rational k = 1;
  RSigns signs;
  RationalMatrix matrix;
};

/// Throws InvalidInput for l < 1, k == 0 or signs outside {+1, -1}.
RMatrix build_r(int l, const Rational& k, RSigns signs);

/// Exact determinant test.
bool is_invertible(const RMatrix& r);

/// True iff build_r(l, k, s) is invertible for all four sign choices.
bool r_invertible_all_signs(int l, const Rational& k);

}  // namespace kfl
