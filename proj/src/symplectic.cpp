#include "kfl/symplectic.hpp"

#include <stdexcept>

namespace kfl {

namespace {

// omega(x, y) = x^t J y for columns i, j of a.
Integer omega_columns(const IntMatrix& a, std::size_t i, std::size_t j) {
  Integer s = 0;
  for (std::size_t p = 0; p + 1 < a.rows(); p += 2) s += a(p, i) * a(p + 1, j) - a(p + 1, i) * a(p, j);
  return s;
}

}  // namespace

IntMatrix j_matrix(int g) {
  if (g < 1) throw std::invalid_argument("j_matrix needs g >= 1");
  const auto n = static_cast<std::size_t>(2 * g);
  IntMatrix j(n, n);
  for (std::size_t p = 0; p < n; p += 2) {
    j(p, p + 1) = 1;
    j(p + 1, p) = -1;
  }
  return j;
}

std::optional<int> symplectic_sign(const IntMatrix& a) {
  if (!a.is_square() || a.rows() % 2 != 0 || a.rows() == 0)
    throw std::invalid_argument("symplectic_sign needs a square matrix of even size, got " + a.shape());
  const std::size_t n = a.rows();
  // The sign is read off the (0, 1) entry of A^t J A; every other entry must follow it.
  Integer s = omega_columns(a, 0, 1);
  if (s != 1 && s != -1) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer expected = (i % 2 == 0 && j == i + 1) ? s : Integer(0);
      if (omega_columns(a, i, j) != expected) return std::nullopt;
    }
  return static_cast<int>(s);
}

std::optional<SpElement> SpElement::from_matrix(IntMatrix m) {
  auto s = symplectic_sign(m);
  if (!s) return std::nullopt;
  return SpElement(std::move(m), *s);
}

SpElement SpElement::identity(int g) { return SpElement(IntMatrix::identity(static_cast<std::size_t>(2 * g)), 1); }

SpElement SpElement::inverse() const {
  const IntMatrix j = j_matrix(genus());
  IntMatrix inv = j * matrix_.transpose() * j;
  inv *= Integer(-sign_);
  return SpElement(std::move(inv), sign_);
}

SpElement operator*(const SpElement& a, const SpElement& b) {
  return SpElement(a.matrix_ * b.matrix_, a.sign_ * b.sign_);
}

IntMatrix transvection(const std::vector<Integer>& v) {
  const std::size_t n = v.size();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("transvection needs an even-dimensional vector");
  std::vector<Integer> vj(n);  // v^t J
  for (std::size_t p = 0; p < n; p += 2) {
    vj[p] = -v[p + 1];
    vj[p + 1] = v[p];
  }
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) += v[i] * vj[j];
  return t;
}

IntMatrix block_permutation(std::span<const int> perm) {
  const std::size_t g = perm.size();
  IntMatrix p(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    auto target = static_cast<std::size_t>(perm[i]);
    if (target >= g) throw std::invalid_argument("block permutation index out of range");
    p(2 * target, 2 * i) = 1;
    p(2 * target + 1, 2 * i + 1) = 1;
  }
  return p;
}

std::vector<NamedElement> sp_generators(int g) {
  if (g < 1) throw std::invalid_argument("sp_generators needs g >= 1");
  const auto n = static_cast<std::size_t>(2 * g);
  std::vector<NamedElement> out;
  auto add = [&out](std::string name, IntMatrix m) {
    auto e = SpElement::from_matrix(std::move(m));
    if (!e) throw std::logic_error("generator " + name + " is not symplectic");
    out.push_back({std::move(name), std::move(*e)});
  };
  for (int i = 0; i < g; ++i) {
    IntMatrix u = IntMatrix::identity(n);
    u(2 * static_cast<std::size_t>(i), 2 * static_cast<std::size_t>(i) + 1) = 1;
    add("U" + std::to_string(i + 1), std::move(u));
  }
  for (int i = 0; i < g; ++i) {
    IntMatrix l = IntMatrix::identity(n);
    l(2 * static_cast<std::size_t>(i) + 1, 2 * static_cast<std::size_t>(i)) = 1;
    add("L" + std::to_string(i + 1), std::move(l));
  }
  for (int i = 0; i + 1 < g; ++i) {
    std::vector<Integer> v(n, 0);
    v[2 * static_cast<std::size_t>(i)] = 1;
    v[2 * static_cast<std::size_t>(i) + 2] = -1;
    add("Ta" + std::to_string(i + 1), transvection(v));
  }
  for (int i = 0; i + 1 < g; ++i) {
    std::vector<Integer> v(n, 0);
    v[2 * static_cast<std::size_t>(i) + 1] = 1;
    v[2 * static_cast<std::size_t>(i) + 3] = -1;
    add("Tb" + std::to_string(i + 1), transvection(v));
  }
  for (int i = 0; i + 1 < g; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(g));
    for (int j = 0; j < g; ++j) perm[static_cast<std::size_t>(j)] = j;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    add("P" + std::to_string(i + 1), block_permutation(perm));
  }
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t p = 1; p < n; p += 2) r(p, p) = -1;
  add("R", std::move(r));
  return out;
}

H1Map H1Map::make(int genus, int target_rank, IntMatrix matrix) {
  if (genus < 1) throw InvalidInput("genus", "H1 map needs genus >= 1");
  if (target_rank < 1) throw InvalidInput("target_rank", "target rank must be positive");
  if (matrix.rows() != static_cast<std::size_t>(target_rank) || matrix.cols() != static_cast<std::size_t>(2 * genus))
    throw InvalidInput("shape", "H1 map matrix must be " + std::to_string(target_rank) + "x" +
                                    std::to_string(2 * genus) + ", got " + matrix.shape());
  return H1Map{genus, target_rank, std::move(matrix)};
}

Lattice H1Map::image() const {
  std::vector<Lattice::Vector> cols;
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    Lattice::Vector v(matrix.rows());
    for (std::size_t i = 0; i < matrix.rows(); ++i) v[i] = matrix(i, j);
    cols.push_back(std::move(v));
  }
  return Lattice::from_generators(static_cast<std::size_t>(target_rank), std::span<const Lattice::Vector>(cols));
}

H1Map canonical_form(int g, int k) {
  if (g < 1 || k < 1 || k > g) throw InvalidInput("range", "canonical form needs 1 <= k <= g");
  IntMatrix m(2, static_cast<std::size_t>(2 * g));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    m(0, 2 * i) = 1;
    m(1, 2 * i + 1) = 1;
  }
  return H1Map{g, 2, std::move(m)};
}

std::optional<int> canonical_block_count(const H1Map& map) {
  if (map.target_rank != 2) return std::nullopt;
  for (int k = 1; k <= map.genus; ++k)
    if (canonical_form(map.genus, k).matrix == map.matrix) return k;
  return std::nullopt;
}

InducedH1 induced_h1(const MonodromyRep& rep) {
  const int g = genus(rep);  // validates
  if (is_purely_branched(rep)) return canonical_form(g, rep.degree);
  return NotCanonical{image_lattice(rep)};
}

}  // namespace kfl
