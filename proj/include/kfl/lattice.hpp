#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kfl/integer.hpp"

namespace kfl {

/// Sublattice of Z^n stored by its row Hermite normal form.
///
/// Basis rows are in echelon form with positive pivots, and entries above
/// each pivot are reduced into [0, pivot). Two lattices are equal exactly
/// when their stored bases are equal.
class Lattice {
 public:
  using Vector = std::vector<Integer>;

  Lattice() = default;

  static Lattice zero(std::size_t dim);
  static Lattice full(std::size_t dim);
  static Lattice from_generators(std::size_t dim, std::span<const Vector> generators);
  /// Fast path for small integer generators (e.g. exponent sums of Schreier generators).
  static Lattice from_generators(std::size_t dim, std::span<const std::vector<std::int64_t>> generators);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }

  /// Full rank with unit pivots, i.e. the whole of Z^n.
  bool is_full() const;
  bool contains(const Vector& v) const;
  /// Index in Z^n (product of pivots); zero when rank < dim.
  Integer index() const;

  friend Lattice operator+(const Lattice& a, const Lattice& b);
  friend bool operator==(const Lattice&, const Lattice&) = default;

  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vector> basis_;
};

}  // namespace kfl
