// Numerical check of the E = S + (det B / k)(J ... J) decomposition behind the
// rank obstruction. M' and N' carry 1/sqrt(k) factors, so they are built in
// double precision; every quantity that is integral is also checked exactly.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "kfl/equivalence.hpp"
#include "kfl/r_matrix.hpp"

namespace kfl {

namespace {

using Dense = Eigen::MatrixXd;

Dense to_dense(const IntMatrix& m) {
  Dense d(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).convert_to<double>();
  return d;
}

Dense j_dense(int pairs) {
  Dense j = Dense::Zero(2 * pairs, 2 * pairs);
  for (int p = 0; p < pairs; ++p) {
    j(2 * p, 2 * p + 1) = 1;
    j(2 * p + 1, 2 * p) = -1;
  }
  return j;
}

// max |lhs - rhs| relative to max(1, max |lhs|).
double residual(const Dense& lhs, const Dense& rhs) {
  if (lhs.size() == 0) return 0;
  const double scale = std::max(1.0, lhs.cwiseAbs().maxCoeff());
  return (lhs - rhs).cwiseAbs().maxCoeff() / scale;
}

struct NumericRank {
  std::size_t rank = 0;
  bool ambiguous = false;
};

NumericRank numeric_rank(const Dense& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<Dense> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv(0));
  const double threshold = 1e-8 * scale;
  NumericRank out;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++out.rank;
    // Singular values of these matrices are either round-off or O(1/k); anything in
    // between means the rank decision is not trustworthy.
    if (sv(i) > 1e-11 * scale && sv(i) < 1e-5 * scale) out.ambiguous = true;
  }
  return out;
}

}  // namespace

RefinedRankReport refined_rank_check(const IntMatrix& a, const IntMatrix& b, int k, int l,
                                     const RefinedRankOptions& options) {
  if (k == 1) throw InvalidInput("singular factor", "k = 1 makes 1/(sqrt(k) - 1) singular");
  if (!a.is_square() || a.rows() % 2 != 0 || a.rows() < 4)
    throw InvalidInput("shape", "A must be 2g x 2g with g >= 2");
  const int g = static_cast<int>(a.rows() / 2);
  if (k < 2 || k > g || l < 1 || l > g) throw InvalidInput("range", "need 2 <= k <= g and 1 <= l <= g");
  if (b.rows() != 2 || b.cols() != 2) throw InvalidInput("shape", "B must be 2x2");
  if (options.sign != 1 && options.sign != -1) throw InvalidInput("range", "sign must be +1 or -1");
  const Integer det_b = determinant(b);
  if (det_b != 1 && det_b != -1) throw InvalidInput("unimodular", "|det B| must be 1");

  const auto gu = static_cast<std::size_t>(g), ku = static_cast<std::size_t>(k), lu = static_cast<std::size_t>(l);
  for (std::size_t j = 0; j < gu; ++j) {
    IntMatrix sum(2, 2);
    for (std::size_t i = 0; i < ku; ++i) sum += a.block(2 * i, 2 * j, 2, 2);
    if (sum != (j < lu ? b : IntMatrix(2, 2)))
      throw InvalidInput("block constraint", "sum of the first k row blocks of column block " + std::to_string(j + 1) +
                                                 " must be " + (j < lu ? "B" : "0"));
  }

  RefinedRankReport report;
  report.det_b = static_cast<int>(det_b);
  const double d = report.det_b;
  const int s = options.sign;

  // Exact pieces: E from the first 2k rows, F from the rest.
  const IntMatrix gamma = a.block(0, 0, 2 * ku, 2 * gu);
  const IntMatrix alpha = a.block(2 * ku, 0, 2 * (gu - ku), 2 * gu);
  const IntMatrix e_exact = gamma.transpose() * j_matrix(k) * gamma;
  IntMatrix implied_f = j_matrix(g);
  implied_f *= Integer(s);
  implied_f -= e_exact;
  report.rank_implied_f = rank(implied_f);
  report.rank_actual_f = (k < g) ? rank(IntMatrix(alpha.transpose() * j_matrix(g - k) * alpha)) : 0;

  // Numerical M', N'.
  const Dense bd = to_dense(b);
  const Dense b_inv = bd.inverse();
  auto block = [&](std::size_t i, std::size_t j) -> Dense {
    return b_inv * to_dense(a.block(2 * i, 2 * j, 2, 2));
  };
  const double root = std::sqrt(static_cast<double>(k));
  const double c = 1.0 / (root - 1.0);
  const Eigen::Index rows_p = 2 * (k - 1);
  Dense m_prime(rows_p, 2 * l), n_prime(rows_p, 2 * (g - l));
  for (std::size_t j = 0; j < gu; ++j) {
    Dense column_sum = Dense::Zero(2, 2);
    for (std::size_t r = 0; r + 1 < ku; ++r) column_sum += block(r, j);
    for (std::size_t i = 0; i + 1 < ku; ++i) {
      Dense entry = block(i, j) - c * column_sum;
      if (j < lu) entry += Dense::Identity(2, 2) / root;
      entry *= d;
      const auto ri = static_cast<Eigen::Index>(2 * i);
      if (j < lu)
        m_prime.block(ri, static_cast<Eigen::Index>(2 * j), 2, 2) = entry;
      else
        n_prime.block(ri, static_cast<Eigen::Index>(2 * (j - lu)), 2, 2) = entry;
    }
  }

  const Dense gamma_d = to_dense(gamma);
  const Dense m = gamma_d.leftCols(2 * l);
  const Dense n = gamma_d.rightCols(2 * (g - l));
  const Dense jk = j_dense(k), jk1 = j_dense(k - 1);
  Dense jj(2 * l, 2 * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) jj.block(2 * i, 2 * j, 2, 2) = j_dense(1);

  // E's blocks equal det B times ((1/k)(J..J) (+) 0 + S).
  report.residual_mm = residual(m.transpose() * jk * m, d * (jj / k + m_prime.transpose() * jk1 * m_prime));
  report.residual_mn = residual(m.transpose() * jk * n, d * (m_prime.transpose() * jk1 * n_prime));
  report.residual_nm = residual(n.transpose() * jk * m, d * (n_prime.transpose() * jk1 * m_prime));
  report.residual_nn = residual(n.transpose() * jk * n, d * (n_prime.transpose() * jk1 * n_prime));
  const double worst = std::max({report.residual_mm, report.residual_mn, report.residual_nm, report.residual_nn});
  report.identities_hold = worst <= options.tolerance;

  Dense mn_prime(rows_p, 2 * g);
  mn_prime << m_prime, n_prime;
  const Dense s_matrix = mn_prime.transpose() * jk1 * mn_prime;
  const NumericRank rs = numeric_rank(s_matrix);
  report.rank_s = rs.rank;
  report.rank_ambiguous = rs.ambiguous;

  // s J - E = R (+) s J_{2(g-l)} - det B * S, with R's signs (unit, frac) = (s, -det B).
  const RMatrix r = build_r(l, Rational(k), {s, -report.det_b});
  report.r_invertible = is_invertible(r);

  report.contradiction = report.r_invertible && report.rank_s <= static_cast<std::size_t>(2 * k - 2) &&
                         report.rank_implied_f >= static_cast<std::size_t>(2 * (g - k) + 2) &&
                         report.rank_actual_f <= static_cast<std::size_t>(2 * (g - k));
  return report;
}

}  // namespace kfl
