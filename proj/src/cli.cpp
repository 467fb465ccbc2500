#include "kfl/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "kfl/equivalence.hpp"
#include "kfl/finiteness.hpp"
#include "kfl/json_io.hpp"
#include "kfl/r_matrix.hpp"

namespace kfl::cli {

namespace {

struct Globals {
  bool json = false;
  bool timing = false;
  bool serial = false;
  Execution exec() const { return serial ? Execution::Serial : Execution::Parallel; }
};

// A command either produces a report payload or a raw document (a cover or product file).
struct Output {
  Json payload;
  bool document = false;
  std::string human;  // set for documents

  Output() = default;
  Output(Json p) : payload(std::move(p)) {}
  Output(Json p, bool doc, std::string text) : payload(std::move(p)), document(doc), human(std::move(text)) {}
};

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool flat(const Json& j) {
  if (j.is_primitive()) return true;
  if (j.is_object()) return false;
  for (const auto& x : j)
    if (!flat(x) || x.is_object()) return false;
  return true;
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (flat(value)) {
      out << pad << key << ": " << scalar_text(value) << '\n';
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render(value, out, indent + 2);
    } else {
      out << pad << key << ":\n";
      std::size_t i = 0;
      for (const auto& item : value) {
        if (flat(item)) {
          out << pad << "  - " << scalar_text(item) << '\n';
        } else {
          out << pad << "  [" << ++i << "]\n";
          render(item, out, indent + 4);
        }
      }
    }
  }
}

std::string describe_cover(const MonodromyRep& rep) {
  std::ostringstream s;
  s << "degree: " << rep.degree << '\n'
    << "alpha: " << rep.alpha.to_cycle_string() << '\n'
    << "beta: " << rep.beta.to_cycle_string() << '\n'
    << "branches:\n";
  for (const auto& b : rep.branches) s << "  " << b.label << ": " << b.perm.to_cycle_string() << '\n';
  return s.str();
}

std::optional<std::pair<int, int>> parse_canonical(const std::string& text) {
  static const std::regex re(R"(^\s*C\(\s*(\d{1,6})\s*,\s*(\d{1,6})\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  return std::pair{std::stoi(m[1]), std::stoi(m[2])};
}

// Either side of `equiv decide`: C(g,k), an H1 map file or a purely branched cover file.
H1Map parse_map_argument(const std::string& text) {
  if (auto ck = parse_canonical(text)) return canonical_form(ck->first, ck->second);
  std::ifstream in(text);
  if (!in) throw InvalidInput("io", "cannot open " + text + " (expected C(g,k) or a file)");
  std::ostringstream ss;
  ss << in.rdbuf();
  const Json j = parse_json_text(ss.str());
  if (j.is_object() && j.contains("matrix")) return h1_from_json(j);
  const auto induced = induced_h1(cover_from_json(j));
  if (const auto* m = std::get_if<H1Map>(&induced)) return *m;
  throw InvalidInput("not purely branched",
                     text + ": the cover has image lattice " + std::get<NotCanonical>(induced).image.to_string() +
                         " and no canonical H1 map");
}

std::size_t max_states_from_env(std::size_t fallback) {
  const char* raw = std::getenv("KFL_MAX_STATES");
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
    throw InvalidInput("KFL_MAX_STATES", "must be a positive integer, got \"" + s + "\"");
  const auto v = std::stoull(s);
  if (v == 0) throw InvalidInput("KFL_MAX_STATES", "must be positive");
  return static_cast<std::size_t>(v);
}

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d{1,12})(?:\s*/\s*(\d{1,12}))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidInput("range", "k must be an integer or a fraction p/q, got " + text);
  const Integer num(m[1].str());
  const Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw InvalidInput("range", "zero denominator in " + text);
  return Rational(num, den);
}

std::vector<int> parse_genera(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 6 || item.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("range", "--genera expects a comma separated list of integers, got " + text);
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw InvalidInput("factor count", "--genera must list at least one genus");
  return out;
}

std::string rational_text(const Rational& q) {
  const Integer n = numerator(q), d = denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

Json cover_info(const MonodromyRep& rep) {
  Json j;
  j["degree"] = rep.degree;
  j["branch_points"] = rep.branches.size();
  j["connected"] = is_connected(rep);
  j["purely_branched"] = is_purely_branched(rep);
  if (!j["connected"].get<bool>()) {
    j["genus"] = nullptr;
    j["image_lattice"] = nullptr;
    j["induced_h1"] = nullptr;
    return j;
  }
  j["genus"] = genus(rep);
  j["image_lattice"] = to_json(image_lattice(rep));
  const auto induced = induced_h1(rep);
  if (const auto* m = std::get_if<H1Map>(&induced)) {
    j["induced_h1"] = matrix_to_json(m->matrix);
    j["canonical_form"] = "C(" + std::to_string(m->genus) + "," + std::to_string(rep.degree) + ")";
  } else {
    j["induced_h1"] = nullptr;
    j["canonical_form"] = nullptr;
  }
  return j;
}

Output document(const MonodromyRep& rep) { return {cover_to_json(rep), true, describe_cover(rep)}; }

Output document(const ProductFibration& p) {
  std::ostringstream s;
  s << "target_rank: " << p.target_rank << "\nfactors: " << p.factors.size() << '\n';
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    const auto sum = summarize(p.factors[i], p.target_rank);
    s << "  [" << i + 1 << "] genus " << sum.genus << ", degree " << std::get<MonodromyRep>(p.factors[i]).degree
      << ", induces " << (sum.h1 ? matrix_to_json(sum.h1->matrix).dump() : "-") << '\n';
  }
  return {product_to_json(p), true, s.str()};
}

struct FalsifyArgs {
  int g = 2, kl = 1, kr = 2, bound = 2;
  int b_bound = -1;
  double ceiling = FalsifyOptions{}.work_ceiling;
};

Output run_falsify(const FalsifyArgs& a, const Globals& globals) {
  FalsifyOptions o;
  o.g = a.g;
  o.k_left = a.kl;
  o.k_right = a.kr;
  o.entry_bound = a.bound;
  if (a.b_bound >= 0) o.b_bound = a.b_bound;
  o.work_ceiling = a.ceiling;
  const auto report = falsify_bounded(o, globals.exec());
  Json j = to_json(report);
  j["provenance"] = "bounded-enumeration";
  j["note"] = "every A with entries in [-" + std::to_string(a.bound) + "," + std::to_string(a.bound) +
              "] and A^t J A = +-J was tested against every B in GL(2,Z) with entries in [-" +
              std::to_string(report.b_bound) + "," + std::to_string(report.b_bound) + "]";
  return {std::move(j)};
}

void add_file(CLI::App* app, std::string& target, const char* what) {
  app->add_option("file", target, what)->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branched covers of the torus, symplectic equivalence of their H1 maps and finiteness of product kernels",
               "kfl"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_flag("--json", globals.json, "Print the result as JSON");
  app.add_flag("--timing", globals.timing, "Include wall-clock time in the result");
  app.add_flag("--serial", globals.serial, "Run kernels on one thread");

  std::function<Output()> action;

  // cover
  auto* cover = app.add_subcommand("cover", "Monodromy models of branched covers")->require_subcommand(1);
  std::string cover_file;
  auto* validate_cmd = cover->add_subcommand("validate", "Check the monodromy invariants of a cover file");
  add_file(validate_cmd, cover_file, "Cover JSON file");
  validate_cmd->callback([&] {
    action = [&] {
      const auto rep = parse_cover(cover_file);
      return Output{{{"valid", true}, {"connected", is_connected(rep)}, {"degree", rep.degree},
                     {"branch_points", rep.branches.size()}}};
    };
  });
  auto* genus_cmd = cover->add_subcommand("genus", "Genus of the covering surface");
  add_file(genus_cmd, cover_file, "Cover JSON file");
  genus_cmd->callback([&] {
    action = [&] { return Output{{{"genus", genus(parse_cover(cover_file))}}}; };
  });
  auto* info_cmd = cover->add_subcommand("info", "Degree, genus, connectivity, image lattice and induced H1 map");
  add_file(info_cmd, cover_file, "Cover JSON file");
  info_cmd->callback([&] {
    action = [&] { return Output{cover_info(parse_cover(cover_file))}; };
  });

  auto* make = cover->add_subcommand("make", "Build a cover file")->require_subcommand(1);
  int h = 0, g = 0, k = 0, degree = 0;
  std::string alpha = "id", beta = "id";
  std::vector<std::string> perms;
  std::string output_path;
  auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", output_path, "Also write the cover file here"); };
  auto* cyclic = make->add_subcommand("cyclic", "h-fold cover branched over two points with inverse h-cycles");
  cyclic->set_help_flag("--help", "Print this help message and exit");
  cyclic->add_option("--h", h, "Number of sheets (>= 2)")->required();
  add_output(cyclic);
  cyclic->callback([&] { action = [&] { return document(make_cyclic(h)); }; });
  auto* morse = make->add_subcommand("morse", "h-fold cover with simple branching, genus h");
  morse->set_help_flag("--help", "Print this help message and exit");
  morse->add_option("--h", h, "Number of sheets (>= 2)")->required();
  add_output(morse);
  morse->callback([&] { action = [&] { return document(make_morse(h)); }; });
  auto* kfold = make->add_subcommand("kfold", "k-fold purely branched cover of genus g");
  kfold->add_option("--g", g, "Genus")->required();
  kfold->add_option("--k", k, "Degree, 2 <= k <= g")->required();
  add_output(kfold);
  kfold->callback([&] { action = [&] { return document(make_kfold(g, k)); }; });
  auto* custom = make->add_subcommand("custom", "Cover from permutations in cycle notation");
  custom->add_option("--degree", degree, "Number of sheets")->required();
  custom->add_option("--alpha", alpha, "Monodromy of alpha, e.g. \"(0 1)\" or id");
  custom->add_option("--beta", beta, "Monodromy of beta");
  custom->add_option("--perm", perms, "Branch monodromy, repeat once per branch point")->take_all();
  add_output(custom);
  custom->callback([&] {
    action = [&] {
      if (degree < 1) throw InvalidInput("degree", "degree must be positive");
      MonodromyRep rep;
      rep.degree = degree;
      rep.alpha = Permutation::from_cycles(degree, alpha);
      rep.beta = Permutation::from_cycles(degree, beta);
      for (std::size_t i = 0; i < perms.size(); ++i)
        rep.branches.push_back({"b" + std::to_string(i + 1), Permutation::from_cycles(degree, perms[i])});
      auto v = validate(rep);
      if (!v.empty()) throw InvalidInput(std::move(v));
      return document(rep);
    };
  });

  // product
  auto* product = app.add_subcommand("product", "Product maps S_g1 x ... x S_gr -> Z^t")->require_subcommand(1);
  auto* pmake = product->add_subcommand("make", "Build a product file")->require_subcommand(1);
  std::string genera_text;
  for (const char* which : {"phi", "psi"}) {
    const bool psi = std::string(which) == "psi";
    auto* c = pmake->add_subcommand(which, psi ? "Factors make_kfold(g_i, g_i)" : "Factors make_kfold(g_i, 2)");
    c->add_option("--genera", genera_text, "Comma separated factor genera, e.g. 2,3,4")->required();
    add_output(c);
    c->callback([&, psi] {
      action = [&, psi] {
        const auto genera = parse_genera(genera_text);
        return document(psi ? build_psi(genera) : build_phi(genera));
      };
    });
  }
  std::string product_file, product_file_b;
  auto* fin = product->add_subcommand("finiteness", "Finiteness type of the kernel of a product map");
  add_file(fin, product_file, "Product JSON file");
  fin->callback([&] {
    action = [&] {
      Json j = to_json(finiteness_report(parse_product(product_file)));
      return Output{std::move(j)};
    };
  });
  auto* classify = product->add_subcommand("classify", "Decide isomorphism of two product kernels");
  classify->add_option("left", product_file, "First product file")->required();
  classify->add_option("right", product_file_b, "Second product file")->required();
  classify->callback([&] {
    action = [&] {
      return Output{to_json(classify_products(parse_product(product_file), parse_product(product_file_b)))};
    };
  });

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Equivalence of H1 maps under Sp(2g,Z)^+- x GL(2,Z)")->require_subcommand(1);
  std::string left, right;
  SearchOptions search;
  long long entry_cap = 4;
  auto* decide = equiv->add_subcommand("decide", "Decide M A = B N; canonical forms use the classification");
  decide->add_option("--left", left, "C(g,k), an H1 map file or a purely branched cover file")->required();
  decide->add_option("--right", right, "C(g,k), an H1 map file or a purely branched cover file")->required();
  decide->add_option("--depth", search.depth, "Word length bound for the search")->capture_default_str();
  decide->add_option("--entry-cap", entry_cap, "Discard states with a larger |entry|")->capture_default_str();
  decide->add_option("--b-bound", search.b_bound, "Entry bound for B")->capture_default_str();
  decide->callback([&] {
    action = [&] {
      const H1Map m = parse_map_argument(left), n = parse_map_argument(right);
      const auto km = canonical_block_count(m), kn = canonical_block_count(n);
      if (km && kn) return Output{to_json(decide_canonical(m.genus, *km, n.genus, *kn))};
      if (search.depth < 0 || entry_cap < 0 || search.b_bound < 0)
        throw InvalidInput("range", "search bounds must be non-negative");
      search.entry_cap = entry_cap;
      search.max_states = max_states_from_env(search.max_states);
      return Output{to_json(search_witness(m, n, search, globals.exec()))};
    };
  });

  FalsifyArgs fa;
  auto* falsify = equiv->add_subcommand("falsify", "Exhaustive search for C(g,kl) A = B C(g,kr) in a bounded slice");
  falsify->add_option("--g", fa.g, "Genus")->required();
  falsify->add_option("--kl", fa.kl, "Left block count")->required();
  falsify->add_option("--kr", fa.kr, "Right block count")->required();
  falsify->add_option("--bound", fa.bound, "Entry bound for A")->required();
  falsify->add_option("--b-bound", fa.b_bound, "Entry bound for B (default bound + 1)");
  falsify->add_option("--ceiling", fa.ceiling, "Refuse slices whose estimated work exceeds this")->capture_default_str();
  falsify->callback([&] { action = [&] { return run_falsify(fa, globals); }; });

  // lemma-r
  int r_l = 1;
  std::string r_k;
  auto* lemma = app.add_subcommand("lemma-r", "Invertibility of the block matrix R(l, k) for all sign choices");
  lemma->add_option("--l", r_l, "Number of blocks")->required();
  lemma->add_option("--k", r_k, "Integer or fraction p/q")->required();
  lemma->callback([&] {
    action = [&] {
      const Rational kq = parse_rational(r_k);
      Json signs = Json::array();
      bool all = true;
      for (int unit : {1, -1})
        for (int frac : {1, -1}) {
          const RMatrix r = build_r(r_l, kq, {unit, frac});
          const Rational det = determinant(r.matrix);
          all = all && det != 0;
          signs.push_back({{"unit", unit}, {"frac", frac}, {"det", rational_text(det)}, {"invertible", det != 0}});
        }
      return Output{{{"l", r_l},
                     {"k", rational_text(kq)},
                     {"invertible_all_signs", all},
                     {"l_equals_plus_minus_k", kq == r_l || kq == -r_l},
                     {"signs", signs}}};
    };
  });

  // verify prop
  FalsifyArgs prop;
  auto* verify = app.add_subcommand("verify", "Bounded checks of the structural claims")->require_subcommand(1);
  auto* vprop = verify->add_subcommand("prop", "equiv falsify with g=2, kl=1, kr=2, bound=2 unless overridden");
  vprop->add_option("--g", prop.g)->capture_default_str();
  vprop->add_option("--kl", prop.kl)->capture_default_str();
  vprop->add_option("--kr", prop.kr)->capture_default_str();
  vprop->add_option("--bound", prop.bound)->capture_default_str();
  vprop->add_option("--b-bound", prop.b_bound);
  vprop->add_option("--ceiling", prop.ceiling)->capture_default_str();
  vprop->callback([&] { action = [&] { return run_falsify(prop, globals); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Output result;
  try {
    result = action();
  } catch (const InvalidInput& e) {
    Json violations = Json::array();
    for (const auto& v : e.violations()) violations.push_back({{"invariant", v.invariant}, {"detail", v.detail}});
    if (globals.json)
      err << Json{{"error", "invalid input"}, {"violations", violations}}.dump() << '\n';
    else
      for (const auto& v : e.violations()) err << "invalid input: " << v.invariant << ": " << v.detail << '\n';
    return kExitInvalidInput;
  } catch (const ResourceLimitExceeded& e) {
    if (globals.json)
      err << Json{{"error", "resource limit"}, {"detail", e.what()}}.dump() << '\n';
    else
      err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (result.document) {
    const std::string text = result.payload.dump();
    if (!output_path.empty()) {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) {
        err << "invalid input: io: cannot write " << output_path << '\n';
        return kExitInvalidInput;
      }
      file << text << '\n';
    }
    if (globals.json)
      out << text << '\n';
    else
      out << result.human;
    return kExitOk;
  }

  Json& payload = result.payload;
  payload["command"] = join(args);
  if (globals.timing) payload["timing_ms"] = elapsed_ms;
  if (globals.json)
    out << payload.dump() << '\n';
  else
    render(payload, out, 0);
  return kExitOk;
}

}  // namespace kfl::cli
