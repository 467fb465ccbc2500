#include "kfl/equivalence.hpp"

#include <stdexcept>

namespace kfl {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "YES";
    case Answer::No: return "NO";
    case Answer::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::OracleKMismatch: return "oracle-k-mismatch";
    case Certificate::RankObstruction: return "rank-obstruction";
    case Certificate::ExhaustedBound: return "exhausted-bound";
  }
  return "exhausted-bound";
}

EquivalenceVerdict decide_canonical(int gL, int kL, int gR, int kR) {
  if (gL < 1 || kL < 1 || kL > gL || gR < 1 || kR < 1 || kR > gR)
    throw InvalidInput("range", "canonical forms need 1 <= k <= g on both sides");
  EquivalenceVerdict v;
  v.provenance = "classification-oracle";
  if (gL != gR) {
    v.answer = Answer::No;
    v.certificate = Certificate::RankObstruction;
    v.note = "source genera differ (H1 ranks " + std::to_string(2 * gL) + " vs " + std::to_string(2 * gR) +
             "); factor genera are isomorphism invariants";
  } else if (kL != kR) {
    v.answer = Answer::No;
    v.certificate = Certificate::OracleKMismatch;
    v.note = "no A in Sp(2g,R)^+- and B in GL(2,Z) carry C(g," + std::to_string(kL) + ") to C(g," +
             std::to_string(kR) + "): the block count is an invariant";
  } else {
    v.answer = Answer::Yes;
    v.witness = Witness{SpElement::identity(gL), IntMatrix::identity(2), {}};
    v.note = "identical canonical forms";
  }
  return v;
}

std::vector<IntMatrix> unimodular_matrices(int t, int bound) {
  if (t < 1 || bound < 0) throw std::invalid_argument("unimodular_matrices needs t >= 1 and bound >= 0");
  const auto cells = static_cast<std::size_t>(t * t);
  const long long span = 2LL * bound + 1;
  long long total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    total *= span;
    if (total > 50'000'000) throw ResourceLimitExceeded("GL(t,Z) enumeration too large for t=" + std::to_string(t));
  }
  std::vector<IntMatrix> out;
  std::vector<long long> digits(cells, -bound);
  for (long long n = 0; n < total; ++n) {
    IntMatrix m(static_cast<std::size_t>(t), static_cast<std::size_t>(t));
    for (std::size_t c = 0; c < cells; ++c) m(c / static_cast<std::size_t>(t), c % static_cast<std::size_t>(t)) = digits[c];
    Integer d = determinant(m);
    if (d == 1 || d == -1) out.push_back(std::move(m));
    for (std::size_t c = cells; c-- > 0;) {
      if (++digits[c] <= bound) break;
      digits[c] = -bound;
    }
  }
  return out;
}

std::vector<NamedElement> search_alphabet(int g) {
  auto gens = sp_generators(g);
  std::vector<NamedElement> out = gens;
  for (const auto& gen : gens) {
    SpElement inv = gen.element.inverse();
    if (inv == gen.element) continue;
    out.push_back({gen.name + "^-1", std::move(inv)});
  }
  return out;
}

bool verify_witness(const H1Map& m, const H1Map& n, const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != m.matrix.cols() || a.cols() != n.matrix.cols() || b.cols() != n.matrix.rows() ||
      b.rows() != m.matrix.rows())
    return false;
  return m.matrix * a == b * n.matrix;
}

ProofDecomposition proof_decomposition(const SpElement& a, int k) {
  const int g = a.genus();
  if (k < 1 || k >= g) throw InvalidInput("range", "proof decomposition needs 1 <= k < g");
  const auto n = static_cast<std::size_t>(2 * g);
  const auto top = static_cast<std::size_t>(2 * k);
  IntMatrix gamma = a.matrix().block(0, 0, top, n);
  IntMatrix alpha = a.matrix().block(top, 0, n - top, n);
  ProofDecomposition out;
  out.e = gamma.transpose() * j_matrix(k) * gamma;
  out.f = alpha.transpose() * j_matrix(g - k) * alpha;
  out.rank_e = rank(out.e);
  out.rank_f = rank(out.f);
  return out;
}

}  // namespace kfl
