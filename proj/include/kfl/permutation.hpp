#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kfl {

/// Permutation of {0, ..., d-1} in one-line notation: images()[i] is the image of i.
///
/// Composition reads left to right: compose(p, q) applies p first, then q,
/// so compose(p, q)(x) == q(p(x)). Every product in this library, including
/// the monodromy relator, uses this convention.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidInput("not a bijection") unless images is a bijection on {0..d-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parses cycle notation such as "(0 1 2)(3 4)", "(0,1)" or "id".
  static Permutation from_cycles(int degree, std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  /// Number of cycles, fixed points included.
  int cycle_count() const;
  Permutation inverse() const;

  /// Canonical cycle notation: cycles start at their least point, ordered by it; "id" for identity.
  std::string to_cycle_string() const;

  friend Permutation compose(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// p then q.
Permutation compose(const Permutation& p, const Permutation& q);

/// The word a b a^-1 b^-1, evaluated left to right.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace kfl
