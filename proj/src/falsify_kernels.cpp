// Exhaustive search of C(g,kL) * A = B * C(g,kR) over a bounded slice of Sp^{+-}(2g, Z).
//
// A is built column by column. Column j must satisfy omega(c_i, c_j) = s * J_ij
// against every earlier column, where s = +-1 is fixed by the first pair. The
// slice entries are small, so the kernel works in 64-bit integers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "kfl/equivalence.hpp"
#include "parallel.hpp"

namespace kfl {

namespace {

using Column = std::vector<std::int64_t>;

struct SmallB {
  std::int64_t e[4];
};

struct Slice {
  int g = 0;
  int dim = 0;
  int k_left = 0;
  int k_right = 0;
  std::vector<Column> columns;  // nonzero vectors of [-b, b]^{2g}, lexicographic
  std::vector<SmallB> bs;       // GL(2, Z) with entries in [-b', b'], lexicographic
};

struct Partial {
  std::uint64_t symplectic = 0;
  std::uint64_t pairs = 0;
  std::uint64_t solutions = 0;
  std::uint64_t nodes = 0;
  std::vector<std::pair<std::vector<int>, std::size_t>> samples;  // column indices, B index
};

std::int64_t omega(const Column& u, const Column& v) {
  std::int64_t s = 0;
  for (std::size_t p = 0; p < u.size(); p += 2) s += u[p] * v[p + 1] - u[p + 1] * v[p];
  return s;
}

// Required omega(c_i, c_j) for i < j, given sign s.
std::int64_t required(int i, int j, std::int64_t s) { return (i % 2 == 0 && j == i + 1) ? s : 0; }

void test_leaf(const Slice& slice, const std::vector<int>& chosen, Partial& out, std::size_t keep) {
  ++out.symplectic;
  // L = C(g, kL) * A: row r is the sum over the first kL pairs of rows 2p + r.
  const int n = slice.dim;
  std::vector<std::int64_t> left(static_cast<std::size_t>(2 * n), 0);
  for (int c = 0; c < n; ++c) {
    const Column& col = slice.columns[static_cast<std::size_t>(chosen[static_cast<std::size_t>(c)])];
    for (int p = 0; p < slice.k_left; ++p) {
      left[static_cast<std::size_t>(c)] += col[static_cast<std::size_t>(2 * p)];
      left[static_cast<std::size_t>(n + c)] += col[static_cast<std::size_t>(2 * p + 1)];
    }
  }
  // B * C(g, kR) = (B ... B 0 ... 0).
  for (std::size_t bi = 0; bi < slice.bs.size(); ++bi) {
    ++out.pairs;
    const auto& b = slice.bs[bi].e;
    bool equal = true;
    for (int q = 0; q < slice.g && equal; ++q) {
      const bool active = q < slice.k_right;
      const auto c0 = static_cast<std::size_t>(2 * q), c1 = c0 + 1;
      const auto n0 = static_cast<std::size_t>(n);
      equal = left[c0] == (active ? b[0] : 0) && left[c1] == (active ? b[1] : 0) &&
              left[n0 + c0] == (active ? b[2] : 0) && left[n0 + c1] == (active ? b[3] : 0);
    }
    if (!equal) continue;
    ++out.solutions;
    if (out.samples.size() < keep) out.samples.emplace_back(chosen, bi);
  }
}

void extend(const Slice& slice, std::vector<int>& chosen, std::int64_t sign, Partial& out, std::size_t keep) {
  const int j = static_cast<int>(chosen.size());
  for (std::size_t ci = 0; ci < slice.columns.size(); ++ci) {
    const Column& c = slice.columns[ci];
    std::int64_t s = sign;
    bool ok = true;
    for (int i = 0; i < j && ok; ++i) {
      const std::int64_t w = omega(slice.columns[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])], c);
      if (j == 1) {
        ok = (w == 1 || w == -1);
        s = w;
      } else {
        ok = (w == required(i, j, s));
      }
    }
    if (!ok) continue;
    ++out.nodes;
    chosen.push_back(static_cast<int>(ci));
    if (j + 1 == slice.dim)
      test_leaf(slice, chosen, out, keep);
    else
      extend(slice, chosen, s, out, keep);
    chosen.pop_back();
  }
}

std::vector<Column> slice_columns(int dim, int bound) {
  std::vector<Column> out;
  Column digits(static_cast<std::size_t>(dim), -bound);
  while (true) {
    if (std::any_of(digits.begin(), digits.end(), [](std::int64_t x) { return x != 0; })) out.push_back(digits);
    int pos = dim - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == bound) digits[static_cast<std::size_t>(pos--)] = -bound;
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return out;
}

// Distribution of omega(u, v) for u, v uniform on [-b, b]^{2g}.
std::map<std::int64_t, double> omega_distribution(int g, int bound) {
  std::map<std::int64_t, double> det2;
  const double cell = 1.0 / std::pow(2.0 * bound + 1, 4);
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) det2[a * d - b * c] += cell;
  std::map<std::int64_t, double> dist{{0, 1.0}};
  for (int p = 0; p < g; ++p) {
    std::map<std::int64_t, double> next;
    for (const auto& [x, px] : dist)
      for (const auto& [y, py] : det2) next[x + y] += px * py;
    dist = std::move(next);
  }
  return dist;
}

}  // namespace

double falsify_work_estimate(int g, int entry_bound) {
  if (g < 1 || entry_bound < 0) throw InvalidInput("range", "falsify needs g >= 1 and entry_bound >= 0");
  const int dim = 2 * g;
  const double n = std::pow(2.0 * entry_bound + 1, dim) - 1;
  const auto dist = omega_distribution(g, entry_bound);
  auto prob = [&](std::int64_t v) {
    auto it = dist.find(v);
    return it == dist.end() ? 0.0 : it->second;
  };
  const double p0 = prob(0), p1 = prob(1), ppm = prob(1) + prob(-1);
  double level = n, checks = 0;
  for (int j = 1; j < dim; ++j) {
    checks += level * n;
    double p = 1;
    for (int i = 0; i < j; ++i) p *= (j == 1) ? ppm : ((i % 2 == 0 && j == i + 1) ? p1 : p0);
    level *= n * p;
  }
  return checks + level * 400;  // leaves times a typical GL(2,Z) slice size
}

FalsifyReport falsify_bounded(const FalsifyOptions& options, Execution exec) {
  const int g = options.g;
  if (g < 1 || options.entry_bound < 0) throw InvalidInput("range", "falsify needs g >= 1 and entry_bound >= 0");
  if (options.k_left < 1 || options.k_left > g || options.k_right < 1 || options.k_right > g)
    throw InvalidInput("range", "falsify needs 1 <= kL, kR <= g");
  if (options.entry_bound > 1000) throw InvalidInput("range", "entry_bound too large for the 64-bit kernel");

  FalsifyReport report;
  report.options = options;
  report.b_bound = options.b_bound.value_or(options.entry_bound + 1);
  report.work_estimate = falsify_work_estimate(g, options.entry_bound);
  if (report.work_estimate > options.work_ceiling)
    throw ResourceLimitExceeded("falsification slice too large: estimated " + std::to_string(report.work_estimate) +
                                " checks exceeds ceiling " + std::to_string(options.work_ceiling));

  Slice slice;
  slice.g = g;
  slice.dim = 2 * g;
  slice.k_left = options.k_left;
  slice.k_right = options.k_right;
  slice.columns = slice_columns(slice.dim, options.entry_bound);
  for (const auto& b : unimodular_matrices(2, report.b_bound))
    slice.bs.push_back({{static_cast<std::int64_t>(b(0, 0)), static_cast<std::int64_t>(b(0, 1)),
                         static_cast<std::int64_t>(b(1, 0)), static_cast<std::int64_t>(b(1, 1))}});
  report.b_candidates = slice.bs.size();

  // One independent subtree per first column; reduced in column order.
  std::vector<Partial> partials(slice.columns.size());
  detail::for_each_index(slice.columns.size(), exec, [&](std::size_t c0) {
    std::vector<int> chosen{static_cast<int>(c0)};
    partials[c0].nodes = 1;
    extend(slice, chosen, 0, partials[c0], options.keep_solutions);
  });

  for (const auto& p : partials) {
    report.symplectic_candidates += p.symplectic;
    report.pairs_tested += p.pairs;
    report.solutions += p.solutions;
    report.nodes_visited += p.nodes;
    for (const auto& [cols, bi] : p.samples) {
      if (report.sample_solutions.size() >= options.keep_solutions) break;
      IntMatrix a(static_cast<std::size_t>(slice.dim), static_cast<std::size_t>(slice.dim));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols.size(); ++r) a(r, c) = slice.columns[static_cast<std::size_t>(cols[c])][r];
      const auto& e = slice.bs[bi].e;
      report.sample_solutions.emplace_back(std::move(a), IntMatrix::from_rows({{e[0], e[1]}, {e[2], e[3]}}));
    }
  }
  return report;
}

}  // namespace kfl
