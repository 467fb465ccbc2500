#include "kfl/permutation.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "kfl/errors.hpp"

namespace kfl {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[static_cast<std::size_t>(x)])
      throw InvalidInput("not a bijection", "image " + std::to_string(x) + " out of range or repeated");
    hit[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw InvalidInput("degree", "negative degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  std::vector<int> images = identity(degree).images_;
  std::vector<bool> used(images.size(), false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "id" || pos == text.size()) return Permutation(std::move(images));

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw InvalidInput("invalid permutation", "expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos == text.size()) throw InvalidInput("invalid permutation", "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidInput("invalid permutation", "unexpected character in \"" + std::string(text) + "\"");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw InvalidInput("invalid permutation", "point too large");
        ++pos;
      }
      if (value >= degree) throw InvalidInput("not a bijection", "point " + std::to_string(value) + " >= degree");
      if (used[static_cast<std::size_t>(value)])
        throw InvalidInput("not a bijection", "point " + std::to_string(value) + " repeated");
      used[static_cast<std::size_t>(value)] = true;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) images[static_cast<std::size_t>(cycle[i])] = cycle[i + 1];
    if (!cycle.empty()) images[static_cast<std::size_t>(cycle.back())] = cycle.front();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
  }
  return cycles;
}

Permutation Permutation::inverse() const {
  Permutation inv = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return inv;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? std::string("id") : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("composing permutations of different degree");
  Permutation out;
  out.images_.resize(p.images_.size());
  for (std::size_t i = 0; i < p.images_.size(); ++i) out.images_[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
  return out;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(compose(a, b), a.inverse()), b.inverse());
}

}  // namespace kfl
