#include <doctest.h>

#include <random>

#include "kfl/monodromy.hpp"
#include "oracles.hpp"

using namespace kfl;

namespace {

Permutation cyc(int d, const char* text) { return Permutation::from_cycles(d, text); }

MonodromyRep rep(int d, const char* alpha, const char* beta, std::initializer_list<const char*> branches) {
  MonodromyRep r;
  r.degree = d;
  r.alpha = cyc(d, alpha);
  r.beta = cyc(d, beta);
  int i = 0;
  for (const char* b : branches) r.branches.push_back({"b" + std::to_string(++i), cyc(d, b)});
  return r;
}

bool has(const std::vector<Violation>& v, const std::string& name) {
  for (const auto& x : v)
    if (x.invariant == name) return true;
  return false;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto p = cyc(4, "(0 1 2)");
  const auto q = cyc(4, "(1 3)");
  CHECK(p.images() == std::vector<int>{1, 2, 0, 3});
  CHECK(compose(p, q)(0) == q(p(0)));
  CHECK(compose(p, q).images() == std::vector<int>{3, 2, 0, 1});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p, q).inverse() == compose(q.inverse(), p.inverse()));
  CHECK(Permutation::identity(5).cycle_count() == 5);
  CHECK(p.cycle_count() == 2);
  CHECK(cyc(5, "(3 4)(0 2 1)").to_cycle_string() == "(0 2 1)(3 4)");
  CHECK(Permutation::identity(3).to_cycle_string() == "id");
  CHECK(cyc(3, "(0,1)") == cyc(3, "(0 1)"));
  CHECK(cyc(3, "") .is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(cyc(3, "(0 3)"), InvalidInput);
  CHECK_THROWS_AS(cyc(3, "(0 1"), InvalidInput);
  CHECK_THROWS_AS(cyc(3, "(0 1)(1 2)"), InvalidInput);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(7);
  std::vector<int> base{0, 1, 2, 3, 4, 5};
  for (int trial = 0; trial < 50; ++trial) {
    auto a = base, b = base, c = base;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::shuffle(c.begin(), c.end(), rng);
    Permutation p(a), q(b), r(c);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }
}

TEST_CASE("commutator reads left to right") {
  const auto a = cyc(3, "(0 1)"), b = cyc(3, "(1 2)");
  // a b a^-1 b^-1 applied to 0: 0 -> 1 -> 2 -> 2 -> 1
  CHECK(commutator(a, b)(0) == 1);
}

TEST_CASE("validate") {
  CHECK(validate(rep(2, "id", "id", {"(0 1)", "(0 1)"})).empty());
  CHECK(validate(rep(3, "id", "id", {"(0 1 2)", "(0 2 1)"})).empty());
  const auto bad = validate(rep(2, "id", "id", {"(0 1)"}));
  CHECK(has(bad, "relator"));
  CHECK(has(bad, "ramification parity"));
  CHECK(has(validate(rep(2, "id", "id", {"id"})), "identity branch"));

  MonodromyRep mismatch = rep(3, "id", "id", {});
  mismatch.branches.push_back({"x", cyc(2, "(0 1)")});
  CHECK(has(validate(mismatch), "degree mismatch"));

  MonodromyRep zero;
  zero.degree = 0;
  CHECK(has(validate(zero), "degree"));

  // A non-trivial commutator closed off by a branch point.
  const auto a = cyc(3, "(0 1)"), b = cyc(3, "(1 2)");
  MonodromyRep r;
  r.degree = 3;
  r.alpha = a;
  r.beta = b;
  r.branches.push_back({"c", commutator(a, b).inverse()});
  CHECK(validate(r).empty());
}

TEST_CASE("genus") {
  CHECK(genus(rep(1, "id", "id", {})) == 1);
  CHECK(genus(rep(3, "id", "id", {"(0 1 2)", "(0 2 1)"})) == 3);
  CHECK(genus(rep(2, "id", "id", {"(0 1)", "(0 1)", "(0 1)", "(0 1)"})) == 3);
  CHECK_THROWS_AS(genus(rep(2, "id", "id", {"(0 1)"})), InvalidInput);
  try {
    genus(rep(2, "id", "id", {}));
    FAIL("disconnected cover accepted");
  } catch (const InvalidInput& e) {
    CHECK(e.violations().front().invariant == "disconnected");
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(rep(3, "id", "id", {"(0 1)", "(0 1)", "(1 2)", "(1 2)"})));
  CHECK_FALSE(is_connected(rep(2, "id", "id", {})));
  CHECK(is_connected(rep(1, "id", "id", {})));
  CHECK(is_connected(rep(2, "(0 1)", "id", {})));
}

TEST_CASE("is_purely_branched") {
  CHECK(is_purely_branched(make_cyclic(4)));
  CHECK_FALSE(is_purely_branched(rep(2, "(0 1)", "id", {"(0 1)", "(0 1)"})));
  CHECK(is_purely_branched(rep(1, "id", "id", {})));
}

TEST_CASE("image_lattice") {
  SUBCASE("purely branched covers give Z^2") {
    CHECK(image_lattice(make_cyclic(3)).is_full());
    CHECK(image_lattice(make_kfold(5, 3)).is_full());
    CHECK(image_lattice(rep(1, "id", "id", {})).is_full());
  }
  SUBCASE("alpha swaps the sheets with the branch points on the same pair") {
    // gamma_1 alpha^-1 lifts to a closed loop at sheet 0 and maps to (-1, 0),
    // so this cover still surjects.
    const auto r = rep(2, "(0 1)", "id", {"(0 1)", "(0 1)"});
    REQUIRE(validate(r).empty());
    CHECK(image_lattice(r).is_full());
  }
  SUBCASE("unbranched double cover along alpha") {
    const auto r = rep(2, "(0 1)", "id", {});
    CHECK(image_lattice(r).basis() == std::vector<Lattice::Vector>{{2, 0}, {0, 1}});
  }
  SUBCASE("branching on a different pair of sheets") {
    const auto r = rep(4, "(0 2)(1 3)", "id", {"(0 1)", "(0 1)"});
    REQUIRE(validate(r).empty());
    REQUIRE(is_connected(r));
    CHECK(image_lattice(r).basis() == std::vector<Lattice::Vector>{{2, 0}, {0, 1}});
  }
  SUBCASE("index 3 along beta, sheared") {
    const auto r = rep(3, "(0 1 2)", "(0 2 1)", {});
    const auto l = image_lattice(r);
    CHECK(l.index() == 3);
    CHECK(l.contains({1, 1}));
    CHECK_FALSE(l.contains({1, 0}));
  }
  CHECK_THROWS_AS(image_lattice(rep(2, "id", "id", {})), InvalidInput);
}

TEST_CASE("constructions") {
  CHECK(make_cyclic(2).branches.size() == 2);
  CHECK(make_cyclic(2).branches[0].perm == cyc(2, "(0 1)"));
  CHECK(make_cyclic(3).branches[0].perm == cyc(3, "(0 1 2)"));
  CHECK(make_cyclic(3).branches[1].perm == cyc(3, "(0 2 1)"));
  CHECK(genus(make_cyclic(5)) == 5);
  for (const auto& b : make_cyclic(5).branches) CHECK(b.perm.cycle_count() == 1);
  CHECK_THROWS_AS(make_cyclic(1), InvalidInput);

  auto perms = [](const MonodromyRep& r) {
    std::vector<std::string> out;
    for (const auto& b : r.branches) out.push_back(b.perm.to_cycle_string());
    return out;
  };
  using V = std::vector<std::string>;
  CHECK(perms(make_kfold(3, 2)) == V{"(0 1)", "(0 1)", "(0 1)", "(0 1)"});
  CHECK(perms(make_kfold(3, 3)) == V{"(0 1)", "(0 1)", "(0 2)", "(0 2)"});
  CHECK(perms(make_kfold(5, 3)) == V{"(0 1)", "(0 1)", "(0 2)", "(0 2)", "(0 2)", "(0 2)", "(0 2)", "(0 2)"});
  CHECK(genus(make_kfold(5, 3)) == 5);
  CHECK(make_morse(4) == make_kfold(4, 4));
  CHECK_THROWS_AS(make_kfold(3, 4), InvalidInput);
  CHECK_THROWS_AS(make_kfold(3, 1), InvalidInput);

  for (int g = 2; g <= 8; ++g)
    for (int k = 2; k <= g; ++k) {
      const auto r = make_kfold(g, k);
      CHECK(validate(r).empty());
      CHECK(is_connected(r));
      CHECK(is_purely_branched(r));
      CHECK(r.branches.size() == static_cast<std::size_t>(2 * (g - 1)));
    }
}

TEST_CASE("image lattice matches the Schreier word oracle on random covers") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 400; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    auto random_perm = [&] {
      std::vector<int> v(static_cast<std::size_t>(d));
      std::iota(v.begin(), v.end(), 0);
      std::shuffle(v.begin(), v.end(), rng);
      return Permutation(v);
    };
    MonodromyRep r;
    r.degree = d;
    r.alpha = random_perm();
    r.beta = random_perm();
    Permutation acc = commutator(r.alpha, r.beta);
    const int l = static_cast<int>(rng() % 4);
    for (int i = 0; i < l; ++i) {
      auto p = random_perm();
      r.branches.push_back({"b", p});
      acc = compose(acc, p);
    }
    r.branches.push_back({"last", acc.inverse()});
    if (!validate(r).empty() || !is_connected(r)) continue;
    ++checked;
    CHECK(testing::lattice_matches(image_lattice(r), testing::schreier_oracle(r)));
  }
  CHECK(checked >= 400);
}
