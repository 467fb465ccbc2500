// Breadth-first word search in Sp^{+-}(2g, Z) for H1-map equivalence witnesses.

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "kfl/equivalence.hpp"
#include "parallel.hpp"

namespace kfl {

namespace {

struct MatrixHash {
  std::size_t operator()(const IntMatrix& m) const {
    std::size_t h = m.rows() * 31 + m.cols();
    for (const auto& x : m.data()) h = h * 1'000'003u ^ std::hash<Integer>{}(x);
    return h;
  }
};

struct Node {
  SpElement a;
  std::size_t parent;
  std::size_t letter;
};

constexpr std::size_t kNoMatch = static_cast<std::size_t>(-1);
constexpr std::size_t kChunk = 2048;

std::vector<std::string> reconstruct_word(const std::vector<Node>& nodes, std::size_t index,
                                          const std::vector<NamedElement>& alphabet) {
  std::vector<std::string> word;
  while (index != 0) {
    word.push_back(alphabet[nodes[index].letter].name);
    index = nodes[index].parent;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

EquivalenceVerdict search_witness(const H1Map& m, const H1Map& n, const SearchOptions& options, Execution exec) {
  if (m.genus != n.genus || m.target_rank != n.target_rank)
    throw InvalidInput("shape mismatch", "maps must share genus and target rank");
  if (options.depth < 0) throw InvalidInput("range", "search depth must be non-negative");

  const int g = m.genus;
  const auto alphabet = search_alphabet(g);
  const auto bs = unimodular_matrices(m.target_rank, options.b_bound);

  // B * N -> least B index producing it.
  std::map<IntMatrix, std::size_t> targets;
  for (std::size_t i = 0; i < bs.size(); ++i) targets.emplace(bs[i] * n.matrix, i);

  EquivalenceVerdict verdict;
  verdict.provenance = "bounded-word-search";
  verdict.bounds = options;
  verdict.stats.b_candidates = bs.size();

  std::vector<Node> nodes{{SpElement::identity(g), 0, 0}};
  std::unordered_set<IntMatrix, MatrixHash> seen{nodes[0].a.matrix()};
  std::size_t level_begin = 0, level_end = 1;

  for (int depth = 0;; ++depth) {
    verdict.stats.depth_reached = depth;

    // Match the level in BFS order; the first matching state wins.
    const std::size_t level_size = level_end - level_begin;
    std::vector<std::size_t> match(level_size, kNoMatch);
    detail::for_each_index(level_size, exec, [&](std::size_t i) {
      auto it = targets.find(m.matrix * nodes[level_begin + i].a.matrix());
      if (it != targets.end()) match[i] = it->second;
    });
    for (std::size_t i = 0; i < level_size; ++i) {
      if (match[i] == kNoMatch) continue;
      const std::size_t index = level_begin + i;
      verdict.answer = Answer::Yes;
      verdict.witness = Witness{nodes[index].a, bs[match[i]], reconstruct_word(nodes, index, alphabet)};
      verdict.stats.states_visited = nodes.size();
      verdict.note = "witness verified exactly: M*A = B*N";
      return verdict;
    }
    if (depth == options.depth) break;

    // Expand in chunks; children are merged serially in (parent, letter) order.
    for (std::size_t chunk = level_begin; chunk < level_end; chunk += kChunk) {
      const std::size_t count = std::min(kChunk, level_end - chunk);
      std::vector<std::vector<std::optional<SpElement>>> children(count);
      detail::for_each_index(count, exec, [&](std::size_t i) {
        auto& out = children[i];
        out.resize(alphabet.size());
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
          SpElement child = nodes[chunk + i].a * alphabet[s].element;
          if (max_abs_entry(child.matrix()) <= options.entry_cap) out[s] = std::move(child);
        }
      });
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t s = 0; s < alphabet.size(); ++s) {
          auto& child = children[i][s];
          if (!child || !seen.insert(child->matrix()).second) continue;
          nodes.push_back({std::move(*child), chunk + i, s});
          if (nodes.size() > options.max_states)
            throw ResourceLimitExceeded("word search exceeded " + std::to_string(options.max_states) + " states");
        }
      }
    }
    level_begin = level_end;
    level_end = nodes.size();
    if (level_begin == level_end) break;
  }

  verdict.answer = Answer::Unknown;
  verdict.certificate = Certificate::ExhaustedBound;
  verdict.stats.states_visited = nodes.size();
  verdict.note = "no witness within the search bounds; absence of a witness is not a proof of inequivalence";
  return verdict;
}

}  // namespace kfl
