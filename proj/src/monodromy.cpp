#include "kfl/monodromy.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>

namespace kfl {

namespace {

bool degrees_consistent(const MonodromyRep& rep) {
  if (rep.alpha.degree() != rep.degree || rep.beta.degree() != rep.degree) return false;
  for (const auto& b : rep.branches)
    if (b.perm.degree() != rep.degree) return false;
  return true;
}

int ramification(const MonodromyRep& rep) {
  int total = 0;
  for (const auto& b : rep.branches) total += rep.degree - b.perm.cycle_count();
  return total;
}

void require_valid_connected(const MonodromyRep& rep) {
  auto violations = validate(rep);
  if (!violations.empty()) throw InvalidInput(std::move(violations));
  if (!is_connected(rep)) throw InvalidInput("disconnected", "monodromy group is not transitive on the sheets");
}

}  // namespace

std::vector<Violation> validate(const MonodromyRep& rep) {
  std::vector<Violation> out;
  if (rep.degree < 1) {
    out.push_back({"degree", "degree must be positive"});
    return out;
  }
  if (!degrees_consistent(rep)) {
    out.push_back({"degree mismatch", "every permutation must have degree " + std::to_string(rep.degree)});
    return out;
  }
  for (const auto& b : rep.branches)
    if (b.perm.is_identity()) out.push_back({"identity branch", "branch point '" + b.label + "' has trivial monodromy"});

  Permutation product = commutator(rep.alpha, rep.beta);
  for (const auto& b : rep.branches) product = compose(product, b.perm);
  if (!product.is_identity())
    out.push_back({"relator", "[alpha,beta] gamma_1...gamma_l evaluates to " + product.to_cycle_string()});

  if (ramification(rep) % 2 != 0)
    out.push_back({"ramification parity", "total ramification " + std::to_string(ramification(rep)) + " is odd"});
  return out;
}

bool is_connected(const MonodromyRep& rep) {
  if (!degrees_consistent(rep) || rep.degree < 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(rep.degree), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  auto visit = [&](const Permutation& p, int x) {
    int y = p(x);
    if (!seen[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = true;
      ++reached;
      stack.push_back(y);
    }
  };
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    visit(rep.alpha, x);
    visit(rep.beta, x);
    for (const auto& b : rep.branches) visit(b.perm, x);
  }
  return reached == rep.degree;
}

int genus(const MonodromyRep& rep) {
  require_valid_connected(rep);
  return 1 + ramification(rep) / 2;
}

bool is_purely_branched(const MonodromyRep& rep) { return rep.alpha.is_identity() && rep.beta.is_identity(); }

Lattice image_lattice(const MonodromyRep& rep) {
  require_valid_connected(rep);
  return image_lattice_unchecked(rep);
}

Lattice image_lattice_unchecked(const MonodromyRep& rep) {
  // Generators in fixed order alpha, beta, gamma_1..gamma_l; gamma_i maps to 0 in Z^2.
  const std::size_t gen_count = 2 + rep.branches.size();
  auto gen = [&](std::size_t s) -> const std::vector<int>& {
    if (s == 0) return rep.alpha.images();
    if (s == 1) return rep.beta.images();
    return rep.branches[s - 2].perm.images();
  };
  auto weight = [](std::size_t s) -> std::array<std::int64_t, 2> {
    if (s == 0) return {1, 0};
    if (s == 1) return {0, 1};
    return {0, 0};
  };

  // Breadth-first transversal: shortlex-least positive words from sheet 0.
  // potential[x] is the exponent vector of the transversal word of x.
  const auto d = static_cast<std::size_t>(rep.degree);
  std::vector<std::array<std::int64_t, 2>> potential(d);
  std::vector<int> queue;
  std::vector<char> seen(d, 0);
  queue.reserve(d);
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = static_cast<std::size_t>(queue[head]);
    for (std::size_t s = 0; s < gen_count; ++s) {
      const auto y = static_cast<std::size_t>(gen(s)[x]);
      if (seen[y]) continue;
      seen[y] = 1;
      const auto w = weight(s);
      potential[y] = {potential[x][0] + w[0], potential[x][1] + w[1]};
      queue.push_back(static_cast<int>(y));
    }
  }

  // Schreier generator t_x s t_{x.s}^-1 has exponent vector pot[x] + w(s) - pot[x.s].
  // These are folded into a 2x2 Hermite basis (a, b; 0, c) as they are produced.
  std::int64_t a = 0, b = 0, c = 0;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t s = 0; s < gen_count; ++s) {
      const auto y = static_cast<std::size_t>(gen(s)[x]);
      const auto w = weight(s);
      std::int64_t vx = potential[x][0] + w[0] - potential[y][0];
      std::int64_t vy = potential[x][1] + w[1] - potential[y][1];
      if (vx < 0) {
        vx = -vx;
        vy = -vy;
      }
      if (vx == 0) {
        c = std::gcd(c, vy);
      } else if (a == 0) {
        // (a, b) was empty: (vx, vy) becomes the first row.
        a = vx;
        b = vy;
      } else {
        // Extended gcd of a and vx.
        std::int64_t r0 = a, r1 = vx, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
        while (r1 != 0) {
          const std::int64_t q = r0 / r1;
          r0 = std::exchange(r1, r0 - q * r1);
          u0 = std::exchange(u1, u0 - q * u1);
          v0 = std::exchange(v1, v0 - q * v1);
        }
        const std::int64_t g = r0;
        c = std::gcd(c, (a * vy - vx * b) / g);
        b = u0 * b + v0 * vy;
        a = g;
      }
      if (c != 0) b = ((b % c) + c) % c;
    }
  }
  std::vector<std::vector<std::int64_t>> rows;
  if (a != 0) rows.push_back({a, b});
  if (c != 0) rows.push_back({0, c});
  return Lattice::from_generators(2, std::span<const std::vector<std::int64_t>>(rows));
}

MonodromyRep make_cyclic(int h) {
  if (h < 2) throw InvalidInput("range", "cyclic cover needs h >= 2");
  std::vector<int> shift(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % h;
  Permutation cycle(std::move(shift));
  MonodromyRep rep;
  rep.degree = h;
  rep.alpha = rep.beta = Permutation::identity(h);
  rep.branches = {{"b1", cycle}, {"b2", cycle.inverse()}};
  return rep;
}

MonodromyRep make_kfold(int g, int k) {
  if (k < 2 || k > g) throw InvalidInput("range", "kfold cover needs 2 <= k <= g");
  MonodromyRep rep;
  rep.degree = k;
  rep.alpha = rep.beta = Permutation::identity(k);
  auto transposition = [k](int i) {
    std::vector<int> images(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) images[static_cast<std::size_t>(j)] = j;
    std::swap(images[0], images[static_cast<std::size_t>(i)]);
    return Permutation(std::move(images));
  };
  int label = 1;
  auto add = [&](int i) { rep.branches.push_back({"b" + std::to_string(label++), transposition(i)}); };
  for (int i = 1; i <= k - 2; ++i) {
    add(i);
    add(i);
  }
  for (int n = 0; n < 2 * (g - 1) - 2 * (k - 2); ++n) add(k - 1);
  return rep;
}

MonodromyRep make_morse(int h) { return make_kfold(h, h); }

}  // namespace kfl
