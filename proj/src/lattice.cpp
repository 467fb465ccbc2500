#include "kfl/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kfl {

namespace {

template <typename T>
T floor_div(const T& a, const T& b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename T>
T magnitude(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Row Hermite normal form of the lattice spanned by rows.
template <typename T>
std::vector<std::vector<T>> hermite_rows(std::size_t dim, std::vector<std::vector<T>> rows) {
  std::vector<std::vector<T>> basis;
  for (std::size_t col = 0; col < dim; ++col) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (pivot == rows.size() || magnitude(rows[i][col]) < magnitude(rows[pivot][col])) pivot = i;
      }
      if (pivot == rows.size()) break;
      bool reduced = true;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot || rows[i][col] == 0) continue;
        T q = rows[i][col] / rows[pivot][col];
        for (std::size_t j = col; j < dim; ++j) rows[i][j] -= q * rows[pivot][j];
        if (rows[i][col] != 0) reduced = false;
      }
      if (!reduced) continue;
      std::vector<T> p = std::move(rows[pivot]);
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
      if (p[col] < 0)
        for (auto& x : p) x = -x;
      for (auto& b : basis) {
        T q = floor_div(b[col], p[col]);
        if (q != 0)
          for (std::size_t j = col; j < dim; ++j) b[j] -= q * p[j];
      }
      basis.push_back(std::move(p));
      break;
    }
    // drop rows that became zero
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<T>& r) {
                                return std::all_of(r.begin(), r.end(), [](const T& x) { return x == 0; });
                              }),
               rows.end());
  }
  return basis;
}

}  // namespace

Lattice Lattice::zero(std::size_t dim) {
  Lattice l;
  l.dim_ = dim;
  return l;
}

Lattice Lattice::full(std::size_t dim) {
  Lattice l;
  l.dim_ = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector v(dim, 0);
    v[i] = 1;
    l.basis_.push_back(std::move(v));
  }
  return l;
}

Lattice Lattice::from_generators(std::size_t dim, std::span<const Vector> generators) {
  std::vector<Vector> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("lattice generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x != 0; })) rows.push_back(g);
  }
  Lattice l;
  l.dim_ = dim;
  l.basis_ = hermite_rows<Integer>(dim, std::move(rows));
  return l;
}

Lattice Lattice::from_generators(std::size_t dim, std::span<const std::vector<std::int64_t>> generators) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("lattice generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x != 0; })) rows.push_back(g);
  }
  Lattice l;
  l.dim_ = dim;
  for (auto& row : hermite_rows<std::int64_t>(dim, std::move(rows))) {
    Vector v;
    v.reserve(dim);
    for (auto x : row) v.emplace_back(x);
    l.basis_.push_back(std::move(v));
  }
  return l;
}

bool Lattice::is_full() const {
  if (basis_.size() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if (basis_[i][i] != 1) return false;
  return true;
}

Integer Lattice::index() const {
  if (basis_.size() != dim_) return 0;
  Integer p = 1;
  for (std::size_t i = 0; i < dim_; ++i) p *= basis_[i][i];
  return p;
}

bool Lattice::contains(const Vector& v) const {
  if (v.size() != dim_) return false;
  std::vector<Vector> gens = basis_;
  gens.push_back(v);
  return from_generators(dim_, std::span<const Vector>(gens)) == *this;
}

Lattice operator+(const Lattice& a, const Lattice& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("adding lattices of different dimension");
  std::vector<Lattice::Vector> gens = a.basis_;
  gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
  return Lattice::from_generators(a.dim_, std::span<const Lattice::Vector>(gens));
}

std::string Lattice::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out += ",";
      out += basis_[i][j].str();
    }
    out += ")";
  }
  return out + ">";
}

}  // namespace kfl
