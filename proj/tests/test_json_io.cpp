#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <random>

#include "kfl/json_io.hpp"

using namespace kfl;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("kfl_json_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

std::vector<std::string> violation_names(const std::function<void()>& f) {
  try {
    f();
  } catch (const InvalidInput& e) {
    std::vector<std::string> out;
    for (const auto& v : e.violations()) out.push_back(v.invariant);
    return out;
  }
  return {};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("cover files") {
  TempDir dir;
  SUBCASE("cycle strings are normalized") {
    const auto p = dir.write("c4.json",
                             R"j({"degree":4,"alpha":"id","beta":[0,1,2,3],)j"
                             R"j("branches":[{"label":"p","perm":"(0 1 2 3)"},{"perm":"(0 3 2 1)"}]})j");
    const auto rep = parse_cover(p);
    CHECK(genus(rep) == 4);
    CHECK(rep.branches[0].perm.images() == std::vector<int>{1, 2, 3, 0});
    CHECK(rep.branches[1].label == "b2");
    CHECK(serialize_cover(rep) ==
          R"j({"alpha":[0,1,2,3],"beta":[0,1,2,3],"branches":[{"label":"p","perm":[1,2,3,0]},)j"
          R"j({"label":"b2","perm":[3,0,1,2]}],"degree":4})j");
  }
  SUBCASE("round trip is byte-identical on canonical text") {
    for (const auto& rep : {make_cyclic(3), make_kfold(5, 3), make_cyclic(7)}) {
      const std::string text = serialize_cover(rep);
      const auto p = dir.write("r.json", text);
      CHECK(serialize_cover(parse_cover(p)) == text);
      CHECK(parse_cover(p) == rep);
    }
  }
  SUBCASE("violations") {
    auto names = violation_names([&] {
      cover_from_json(parse_json_text(R"j({"degree":3,"alpha":[0,0,1],"beta":"id","branches":[]})j"));
    });
    CHECK(contains(names, "not a bijection"));
    names = violation_names([&] {
      cover_from_json(parse_json_text(R"j({"degree":3,"alpha":[0,1],"beta":"id","branches":[]})j"));
    });
    CHECK(contains(names, "degree mismatch"));
    names = violation_names([&] {
      cover_from_json(parse_json_text(R"j({"degree":2,"alpha":"id","beta":"id","branches":[{"perm":"(0 1)"}]})j"));
    });
    CHECK(contains(names, "relator"));
    CHECK(contains(names, "ramification parity"));
    CHECK(contains(violation_names([&] { parse_json_text("{\"degree\": 2,"); }), "malformed json"));
    CHECK(contains(violation_names([&] { parse_cover(dir.path / "missing.json"); }), "io"));
    CHECK(contains(violation_names([&] { cover_from_json(parse_json_text(R"j({"degree":2})j")); }), "schema"));
  }
}

TEST_CASE("product files") {
  TempDir dir;
  dir.write("c2.json", serialize_cover(make_cyclic(2)));
  SUBCASE("paths, inline covers and algebraic factors") {
    const auto p = dir.write("p.json",
                             R"j({"target_rank":2,"factors":["c2.json",)j" + serialize_cover(make_kfold(3, 2)) +
                                 R"j(,{"h1":{"g":2,"target_rank":2,"matrix":[[1,0,0,0],[0,1,0,0]]}}]})j");
    const auto prod = parse_product(p);
    REQUIRE(prod.factors.size() == 3);
    CHECK(std::get<MonodromyRep>(prod.factors[0]) == make_cyclic(2));
    CHECK(std::get<MonodromyRep>(prod.factors[1]) == make_kfold(3, 2));
    CHECK(std::get<H1Map>(prod.factors[2]) == canonical_form(2, 1));
    // Serialization inlines everything; that text then round-trips.
    const std::string text = serialize_product(prod);
    CHECK(serialize_product(parse_product(dir.write("q.json", text))) == text);
  }
  SUBCASE("mixed target ranks") {
    const auto p = dir.write("m.json", R"j({"target_rank":2,"factors":[{"h1":{"g":2,"target_rank":2,)j"
                                       R"j("matrix":[[1,0,1,0],[0,1,0,1]]}},{"h1":{"g":2,"target_rank":3,)j"
                                       R"j("matrix":[[1,0,0,0],[0,1,0,0],[0,0,1,0]]}}]})j");
    CHECK(contains(violation_names([&] { parse_product(p); }), "target_rank mismatch"));
  }
  SUBCASE("missing cover file") {
    const auto p = dir.write("x.json", R"j({"target_rank":2,"factors":["nope.json"]})j");
    CHECK_THROWS_AS(parse_product(p), InvalidInput);
  }
}

TEST_CASE("integers and matrices") {
  const Integer big("-98765432109876543210987654321");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_to_json(Integer(42)) == Json(42));
  CHECK(integer_from_json(Json("17")) == 17);
  CHECK_THROWS_AS(integer_from_json(Json("1x")), InvalidInput);
  IntMatrix m = IntMatrix::from_rows({{1, -2}, {3, 4}});
  m(1, 1) = big;
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("[[1,2],[3]]")), InvalidInput);
  CHECK(h1_from_json(h1_to_json(canonical_form(3, 2))) == canonical_form(3, 2));
  CHECK_THROWS_AS(h1_from_json(parse_json_text(R"j({"g":2,"target_rank":2,"matrix":[[1,0],[0,1]]})j")), InvalidInput);
}
