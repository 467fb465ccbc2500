#include "kfl/finiteness.hpp"

#include <algorithm>

namespace kfl {

namespace {

std::vector<Violation> validate_factor(const Factor& f, int target_rank, std::size_t index) {
  const std::string where = "factor " + std::to_string(index + 1) + ": ";
  std::vector<Violation> out;
  if (const auto* rep = std::get_if<MonodromyRep>(&f)) {
    if (target_rank != 2)
      out.push_back({"target_rank mismatch", where + "branched covers of the torus map to Z^2, product has t = " +
                                                 std::to_string(target_rank)});
    for (auto v : validate(*rep)) {
      v.detail = where + v.detail;
      out.push_back(std::move(v));
    }
    if (out.empty() && !is_connected(*rep)) out.push_back({"disconnected", where + "monodromy is not transitive"});
    return out;
  }
  const auto& h = std::get<H1Map>(f);
  if (h.genus < 1) out.push_back({"genus", where + "genus must be at least 1"});
  if (h.target_rank != target_rank)
    out.push_back({"target_rank mismatch", where + "factor has t = " + std::to_string(h.target_rank) +
                                               ", product has t = " + std::to_string(target_rank)});
  if (h.matrix.rows() != static_cast<std::size_t>(h.target_rank) ||
      h.matrix.cols() != 2 * static_cast<std::size_t>(std::max(h.genus, 0)))
    out.push_back({"shape", where + "matrix is " + h.matrix.shape() + ", expected " + std::to_string(h.target_rank) +
                                "x" + std::to_string(2 * h.genus)});
  return out;
}

void require_valid(const ProductFibration& p) {
  auto v = validate_product(p);
  if (!v.empty()) throw InvalidInput(std::move(v));
}

ProductFibration build(std::span<const int> genera, bool psi) {
  if (genera.empty()) throw InvalidInput("factor count", "at least one factor is required");
  ProductFibration p;
  p.target_rank = 2;
  for (int g : genera) {
    if (g < 2) throw InvalidInput("range", "factor genus must be at least 2, got " + std::to_string(g));
    p.factors.emplace_back(make_kfold(g, psi ? g : 2));
  }
  return p;
}

}  // namespace

std::vector<Violation> validate_product(const ProductFibration& p) {
  std::vector<Violation> out;
  if (p.target_rank < 1) out.push_back({"target_rank", "target rank must be at least 1"});
  if (p.factors.empty()) out.push_back({"factor count", "at least one factor is required"});
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    auto v = validate_factor(p.factors[i], p.target_rank, i);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

FactorSummary summarize(const Factor& f, int target_rank) {
  auto v = validate_factor(f, target_rank, 0);
  if (!v.empty()) throw InvalidInput(std::move(v));
  FactorSummary s;
  if (const auto* rep = std::get_if<MonodromyRep>(&f)) {
    s.geometric = true;
    s.genus = genus(*rep);
    s.purely_branched = is_purely_branched(*rep);
    s.image = image_lattice(*rep);
    if (s.purely_branched) {
      s.k = rep->degree;
      s.h1 = canonical_form(s.genus, rep->degree);
    }
  } else {
    const auto& h = std::get<H1Map>(f);
    s.genus = h.genus;
    s.k = canonical_block_count(h);
    s.image = h.image();
    s.h1 = h;
  }
  s.nontrivial = s.image.rank() > 0;
  return s;
}

ProductFibration build_phi(std::span<const int> genera) { return build(genera, false); }
ProductFibration build_psi(std::span<const int> genera) { return build(genera, true); }

bool is_surjective(const ProductFibration& p) {
  require_valid(p);
  Lattice sum = Lattice::zero(static_cast<std::size_t>(p.target_rank));
  for (const auto& f : p.factors) sum = sum + summarize(f, p.target_rank).image;
  return sum.is_full();
}

FinitenessReport finiteness_report(const ProductFibration& p) {
  require_valid(p);
  FinitenessReport rep;
  rep.r = p.factors.size();
  rep.target_rank = p.target_rank;
  Lattice sum = Lattice::zero(static_cast<std::size_t>(p.target_rank));
  for (const auto& f : p.factors) {
    rep.factors.push_back(summarize(f, p.target_rank));
    sum = sum + rep.factors.back().image;
  }
  rep.surjective = sum.is_full();

  auto list = [&](auto pred) {
    std::string s;
    for (std::size_t i = 0; i < rep.factors.size(); ++i)
      if (pred(rep.factors[i])) s += (s.empty() ? "" : ", ") + std::to_string(i + 1);
    return s;
  };
  const std::string trivial = list([](const FactorSummary& f) { return !f.nontrivial; });
  const std::string low_genus = list([](const FactorSummary& f) { return f.genus < 2; });
  const std::string algebraic = list([](const FactorSummary& f) { return !f.geometric; });

  rep.hypotheses = {
      {"r >= 3", rep.r >= 3, "r = " + std::to_string(rep.r)},
      {"non-trivial homomorphisms", trivial.empty(),
       trivial.empty() ? "every factor map is non-zero" : "zero factor map(s): " + trivial},
      {"genus >= 2", low_genus.empty(),
       low_genus.empty() ? "every factor surface has genus at least 2" : "genus below 2 in factor(s): " + low_genus},
      {"geometric factors", algebraic.empty(),
       algebraic.empty() ? "every factor is a branched cover" : "algebraic factor(s): " + algebraic},
      {"surjective", rep.surjective, "sum of image lattices is " + sum.to_string()},
  };

  auto claim = [&](std::initializer_list<std::size_t> needed, const char* citation) {
    FinitenessClaim c;
    c.citation = citation;
    for (std::size_t i : needed)
      if (!rep.hypotheses[i].holds) c.missing.push_back(rep.hypotheses[i].name);
    c.flagged = c.missing.empty();
    return c;
  };
  rep.f_upper = claim({0, 1, 2}, kCitationNotFr);
  rep.f_lower = claim({0, 1, 2, 3, 4}, kCitationFrMinus1);
  return rep;
}

ClassificationVerdict classify_products(const ProductFibration& p, const ProductFibration& q) {
  require_valid(p);
  require_valid(q);
  ClassificationVerdict v;
  v.provenance = "classification-oracle";

  auto side = [&](const ProductFibration& x, const char* name) -> std::optional<Invariant> {
    const std::size_t before = v.reasons.size();
    const std::string prefix = std::string(name) + ": ";
    if (x.target_rank != 2) v.reasons.push_back(prefix + "target rank " + std::to_string(x.target_rank) + " is not 2");
    if (x.factors.size() < 3)
      v.reasons.push_back(prefix + "r = " + std::to_string(x.factors.size()) + " is below 3");
    Invariant inv;
    for (std::size_t i = 0; i < x.factors.size(); ++i) {
      const std::string where = prefix + "factor " + std::to_string(i + 1);
      if (!std::holds_alternative<MonodromyRep>(x.factors[i])) {
        v.reasons.push_back(where + " is algebraic; compare it per factor with the bounded word search");
        continue;
      }
      const auto s = summarize(x.factors[i], x.target_rank);
      if (!s.purely_branched) {
        v.reasons.push_back(where + " is not purely branched; compare it per factor with the bounded word search");
        continue;
      }
      inv.emplace_back(s.genus, *s.k);
    }
    if (v.reasons.size() != before) return std::nullopt;
    std::sort(inv.begin(), inv.end());
    return inv;
  };
  v.left = side(p, "left");
  v.right = side(q, "right");
  if (!v.left || !v.right) {
    v.answer = Answer::Unknown;
    return v;
  }
  v.answer = (*v.left == *v.right) ? Answer::Yes : Answer::No;
  v.reasons.push_back(v.answer == Answer::Yes ? "invariants {(g_i, k_i)} agree" : "invariants {(g_i, k_i)} differ");
  return v;
}

}  // namespace kfl
