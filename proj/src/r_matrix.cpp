#include "kfl/r_matrix.hpp"

#include "kfl/errors.hpp"

namespace kfl {

RMatrix build_r(int l, const Rational& k, RSigns signs) {
  if (l < 1) throw InvalidInput("range", "R needs l >= 1");
  if (k == 0) throw InvalidInput("range", "R needs k != 0");
  auto unit_sign = [](int s) { return s == 1 || s == -1; };
  if (!unit_sign(signs.unit) || !unit_sign(signs.frac)) throw InvalidInput("range", "R signs must be +1 or -1");

  const Rational off = Rational(signs.frac) / k;
  const Rational diag = Rational(signs.unit) + off;
  const auto n = static_cast<std::size_t>(l);
  RMatrix r{l, k, signs, RationalMatrix(2 * n, 2 * n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = (i == j) ? diag : off;
      r.matrix(2 * i, 2 * j + 1) = c;
      r.matrix(2 * i + 1, 2 * j) = -c;
    }
  return r;
}

bool is_invertible(const RMatrix& r) { return determinant(r.matrix) != 0; }

bool r_invertible_all_signs(int l, const Rational& k) {
  for (int unit : {1, -1})
    for (int frac : {1, -1})
      if (!is_invertible(build_r(l, k, {unit, frac}))) return false;
  return true;
}

}  // namespace kfl
