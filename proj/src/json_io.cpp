#include "kfl/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace kfl {

namespace {

void schema(std::vector<Violation>& out, std::string detail) { out.push_back({"schema", std::move(detail)}); }

void throw_if(std::vector<Violation> v) {
  if (!v.empty()) throw InvalidInput(std::move(v));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("io", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses one permutation field, recording violations instead of throwing.
std::optional<Permutation> read_perm(const Json& j, int degree, const std::string& where,
                                     std::vector<Violation>& out) {
  try {
    return permutation_from_json(j, degree);
  } catch (const InvalidInput& e) {
    for (auto v : e.violations()) {
      v.detail = where + ": " + v.detail;
      out.push_back(std::move(v));
    }
  }
  return std::nullopt;
}

Json claim_json(const FinitenessClaim& c, const std::string& statement) {
  return {{"flagged", c.flagged}, {"statement", statement}, {"citation", c.citation}, {"missing", c.missing}};
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  throw InvalidInput("schema", "expected an integer, got " + j.dump());
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("schema", "matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InvalidInput("schema", "matrix rows must be arrays");
    std::vector<Integer> row;
    for (const auto& x : r) row.push_back(integer_from_json(x));
    if (!rows.empty() && row.size() != rows.front().size()) throw InvalidInput("schema", "ragged matrix rows");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

Permutation permutation_from_json(const Json& j, int degree) {
  if (j.is_string()) return Permutation::from_cycles(degree, j.get<std::string>());
  if (!j.is_array()) throw InvalidInput("schema", "permutation must be an array or a cycle string");
  std::vector<int> images;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("schema", "permutation entries must be integers");
    const auto v = x.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
      throw InvalidInput("not a bijection", "entry " + std::to_string(v) + " out of range");
    images.push_back(static_cast<int>(v));
  }
  if (static_cast<int>(images.size()) != degree)
    throw InvalidInput("degree mismatch",
                       "permutation has " + std::to_string(images.size()) + " entries, degree is " + std::to_string(degree));
  return Permutation(std::move(images));
}

Json cover_to_json(const MonodromyRep& rep) {
  Json branches = Json::array();
  for (const auto& b : rep.branches) branches.push_back({{"label", b.label}, {"perm", b.perm.images()}});
  return {{"degree", rep.degree}, {"alpha", rep.alpha.images()}, {"beta", rep.beta.images()}, {"branches", branches}};
}

MonodromyRep cover_from_json(const Json& j) {
  std::vector<Violation> out;
  if (!j.is_object()) throw InvalidInput("schema", "cover must be a JSON object");
  for (const char* key : {"degree", "alpha", "beta", "branches"})
    if (!j.contains(key)) schema(out, std::string("missing field \"") + key + "\"");
  throw_if(out);
  if (!j["degree"].is_number_integer() || j["degree"].get<std::int64_t>() < 1 ||
      j["degree"].get<std::int64_t>() > 1'000'000)
    throw InvalidInput("degree", "degree must be a positive integer");
  if (!j["branches"].is_array()) throw InvalidInput("schema", "\"branches\" must be an array");

  MonodromyRep rep;
  rep.degree = j["degree"].get<int>();
  auto alpha = read_perm(j["alpha"], rep.degree, "alpha", out);
  auto beta = read_perm(j["beta"], rep.degree, "beta", out);
  std::size_t index = 0;
  for (const auto& b : j["branches"]) {
    ++index;
    const std::string where = "branch " + std::to_string(index);
    if (!b.is_object() || !b.contains("perm")) {
      schema(out, where + ": expected {\"label\": ..., \"perm\": ...}");
      continue;
    }
    std::string label = "b" + std::to_string(index);
    if (b.contains("label")) {
      if (!b["label"].is_string()) {
        schema(out, where + ": label must be a string");
        continue;
      }
      label = b["label"].get<std::string>();
    }
    if (auto p = read_perm(b["perm"], rep.degree, where, out)) rep.branches.push_back({label, std::move(*p)});
  }
  throw_if(out);
  rep.alpha = std::move(*alpha);
  rep.beta = std::move(*beta);
  throw_if(validate(rep));
  return rep;
}

Json h1_to_json(const H1Map& m) {
  return {{"g", m.genus}, {"target_rank", m.target_rank}, {"matrix", matrix_to_json(m.matrix)}};
}

H1Map h1_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("schema", "H1 map must be a JSON object");
  for (const char* key : {"g", "target_rank", "matrix"})
    if (!j.contains(key)) throw InvalidInput("schema", std::string("missing field \"") + key + "\"");
  if (!j["g"].is_number_integer() || !j["target_rank"].is_number_integer())
    throw InvalidInput("schema", "\"g\" and \"target_rank\" must be integers");
  const auto g = j["g"].get<std::int64_t>(), t = j["target_rank"].get<std::int64_t>();
  if (g < 1 || g > 100'000 || t < 1 || t > 100'000) throw InvalidInput("range", "g and target_rank must be positive");
  IntMatrix m = matrix_from_json(j["matrix"]);
  return H1Map::make(static_cast<int>(g), static_cast<int>(t), std::move(m));
}

Json product_to_json(const ProductFibration& p) {
  Json factors = Json::array();
  for (const auto& f : p.factors) {
    if (const auto* rep = std::get_if<MonodromyRep>(&f))
      factors.push_back(cover_to_json(*rep));
    else
      factors.push_back({{"h1", h1_to_json(std::get<H1Map>(f))}});
  }
  return {{"target_rank", p.target_rank}, {"factors", factors}};
}

ProductFibration product_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("target_rank") || !j.contains("factors"))
    throw InvalidInput("schema", "product must be {\"target_rank\": t, \"factors\": [...]}");
  if (!j["target_rank"].is_number_integer() || !j["factors"].is_array())
    throw InvalidInput("schema", "\"target_rank\" must be an integer and \"factors\" an array");
  ProductFibration p;
  const auto t = j["target_rank"].get<std::int64_t>();
  if (t < 1 || t > 100'000) throw InvalidInput("target_rank", "target rank must be positive");
  p.target_rank = static_cast<int>(t);

  std::vector<Violation> out;
  std::size_t index = 0;
  for (const auto& f : j["factors"]) {
    ++index;
    const std::string where = "factor " + std::to_string(index) + ": ";
    try {
      if (f.is_string())
        p.factors.emplace_back(parse_cover(base_dir / f.get<std::string>()));
      else if (f.is_object() && f.contains("h1"))
        p.factors.emplace_back(h1_from_json(f["h1"]));
      else
        p.factors.emplace_back(cover_from_json(f));
    } catch (const InvalidInput& e) {
      for (auto v : e.violations()) {
        v.detail = where + v.detail;
        out.push_back(std::move(v));
      }
    }
  }
  throw_if(out);
  throw_if(validate_product(p));
  return p;
}

Json parse_json_text(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("malformed json", "input is not valid JSON");
  return j;
}

MonodromyRep parse_cover(const std::filesystem::path& path) { return cover_from_json(parse_json_text(read_file(path))); }

ProductFibration parse_product(const std::filesystem::path& path) {
  return product_from_json(parse_json_text(read_file(path)), path.parent_path());
}

std::string serialize_cover(const MonodromyRep& rep) { return cover_to_json(rep).dump(); }
std::string serialize_product(const ProductFibration& p) { return product_to_json(p).dump(); }

Json to_json(const Lattice& l) {
  Json basis = Json::array();
  for (const auto& row : l.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer_to_json(x));
    basis.push_back(std::move(r));
  }
  return {{"basis", basis}, {"rank", l.rank()}, {"full", l.is_full()}, {"index", integer_to_json(l.index())}};
}

Json to_json(const FactorSummary& s) {
  return {{"geometric", s.geometric},
          {"genus", s.genus},
          {"k", s.k ? Json(*s.k) : Json(nullptr)},
          {"purely_branched", s.purely_branched},
          {"nontrivial", s.nontrivial},
          {"image", to_json(s.image)},
          {"h1", s.h1 ? matrix_to_json(s.h1->matrix) : Json(nullptr)}};
}

Json to_json(const FinitenessReport& r) {
  Json factors = Json::array(), hypotheses = Json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(f));
  for (const auto& h : r.hypotheses) hypotheses.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  const std::string rs = std::to_string(r.r);
  const std::string rm1 = std::to_string(r.r == 0 ? 0 : r.r - 1);
  return {{"r", r.r},
          {"target_rank", r.target_rank},
          {"factors", factors},
          {"surjective", r.surjective},
          {"f_lower", claim_json(r.f_lower, "kernel is of type F_" + rm1)},
          {"f_upper", claim_json(r.f_upper, "kernel is not of type F_" + rs)},
          {"hypotheses", hypotheses}};
}

Json to_json(const ClassificationVerdict& v) {
  auto inv = [](const std::optional<Invariant>& x) -> Json {
    if (!x) return nullptr;
    Json out = Json::array();
    for (const auto& [g, k] : *x) out.push_back({g, k});
    return out;
  };
  return {{"answer", to_string(v.answer)},
          {"left_invariant", inv(v.left)},
          {"right_invariant", inv(v.right)},
          {"reasons", v.reasons},
          {"provenance", v.provenance}};
}

Json to_json(const SearchOptions& o) {
  return {{"depth", o.depth}, {"entry_cap", integer_to_json(o.entry_cap)}, {"b_bound", o.b_bound},
          {"max_states", o.max_states}};
}

Json to_json(const EquivalenceVerdict& v) {
  Json j = {{"answer", to_string(v.answer)},
            {"provenance", v.provenance},
            {"note", v.note},
            {"stats",
             {{"states_visited", v.stats.states_visited},
              {"depth_reached", v.stats.depth_reached},
              {"b_candidates", v.stats.b_candidates}}}};
  if (v.certificate) j["certificate"] = to_string(*v.certificate);
  if (v.witness)
    j["witness"] = {{"a", matrix_to_json(v.witness->a.matrix())},
                    {"sign", v.witness->a.sign()},
                    {"b", matrix_to_json(v.witness->b)},
                    {"word", v.witness->word}};
  if (v.bounds) j["bounds"] = to_json(*v.bounds);
  return j;
}

Json to_json(const FalsifyReport& r) {
  Json samples = Json::array();
  for (const auto& [a, b] : r.sample_solutions) samples.push_back({{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}});
  return {{"g", r.options.g},
          {"kl", r.options.k_left},
          {"kr", r.options.k_right},
          {"entry_bound", r.options.entry_bound},
          {"b_bound", r.b_bound},
          {"symplectic_candidates", r.symplectic_candidates},
          {"b_candidates", r.b_candidates},
          {"pairs_tested", r.pairs_tested},
          {"solutions", r.solutions},
          {"nodes_visited", r.nodes_visited},
          {"work_estimate", r.work_estimate},
          {"sample_solutions", samples}};
}

Json to_json(const RefinedRankReport& r) {
  return {{"det_b", r.det_b},
          {"residuals", {{"mm", r.residual_mm}, {"mn", r.residual_mn}, {"nm", r.residual_nm}, {"nn", r.residual_nn}}},
          {"identities_hold", r.identities_hold},
          {"rank_s", r.rank_s},
          {"rank_implied_f", r.rank_implied_f},
          {"rank_actual_f", r.rank_actual_f},
          {"r_invertible", r.r_invertible},
          {"rank_ambiguous", r.rank_ambiguous},
          {"contradiction", r.contradiction}};
}

}  // namespace kfl
