#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "cvkit/barbell.hpp"
#include "cvkit/fixtures.hpp"

using namespace cvkit;

namespace {

std::vector<std::int64_t> degrees(const std::vector<BarbellTree>& ts) {
  std::vector<std::int64_t> d;
  for (const auto& t : ts) d.push_back(t.degree);
  std::sort(d.begin(), d.end());
  return d;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("generator counts and degrees") {
  CHECK(degrees(enumerate_barbell_trees(fixtures::ex11())) == std::vector<std::int64_t>{2, 2, 2});
  CHECK(degrees(enumerate_barbell_trees(fixtures::n4ex())) == std::vector<std::int64_t>{3, 3, 3, 3, 4, 4, 4});
  CHECK(degrees(enumerate_barbell_trees(fixtures::n4ex2())) ==
        std::vector<std::int64_t>{2, 2, 4, 4, 4, 4, 6, 6});
  CHECK(enumerate_barbell_trees(flower(5)).size() == 15);
}

TEST_CASE("simple barbell trees") {
  const auto ex = enumerate_barbell_trees(fixtures::ex11());
  CHECK(std::all_of(ex.begin(), ex.end(), [](const BarbellTree& t) { return t.simple && t.bells == 1; }));
  const auto n42 = enumerate_barbell_trees(fixtures::n4ex2());
  CHECK(enumerate_simple(fixtures::n4ex2()).size() == 8);
  int with_two = 0;
  for (const auto& t : n42)
    if (std::count(t.colors.begin(), t.colors.end(), 2) > 0) ++with_two;
  CHECK(with_two == 2);
}

TEST_CASE("flower count law") {
  for (int n = 4; n <= 7; ++n) {
    const auto t = flower(n);
    CHECK(static_cast<long>(enumerate_barbell_trees(t).size()) == (1L << (n - 1)) - 1);
    CHECK(static_cast<long>(enumerate_simple(t).size()) == binom(n, 2));
  }
}

TEST_CASE("results are ordered by degree then coloring") {
  for (const auto& t : {fixtures::n4ex2(), flower(5)}) {
    const auto ts = enumerate_barbell_trees(t);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
      CHECK(std::make_pair(ts[i].degree, ts[i].coloring.v) < std::make_pair(ts[i + 1].degree, ts[i + 1].coloring.v));
  }
}

TEST_CASE("non-trivalent graphs are rejected") {
  DualGraph g;
  g.vertex_count = 2;
  g.edges = {{0, 1}, {0, 1}};
  g.incident = {{0, 1}, {0, 1}};
  try {
    enumerate_barbell_trees(g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTrivalent);
  }
}

TEST_CASE("brute-force indecomposability") {
  const auto t = fixtures::ex11();
  for (const auto& g : enumerate_barbell_trees(t)) CHECK(is_indecomposable(t, g.coloring));
  CHECK_FALSE(is_indecomposable(t, make_coloring(t, {2, 2, 2})));
  try {
    is_indecomposable(t, zero_coloring(t));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroColoring);
  }
  // Sum of the three degree-4 generators of n4ex decomposes.
  const auto n4 = fixtures::n4ex();
  Coloring s = zero_coloring(n4);
  for (const auto& g : enumerate_barbell_trees(n4))
    if (g.degree == 4) s = add(n4, s, g.coloring);
  CHECK_FALSE(is_indecomposable(n4, s));
}

TEST_CASE("indecomposables are exactly the barbell colorings up to degree 10") {
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex(), fixtures::n4ex2(), flower(4)}) {
    std::set<std::vector<std::int64_t>> listed;
    for (const auto& g : enumerate_barbell_trees(t)) listed.insert(g.coloring.v);
    for (const auto& c : enumerate_admissible(t, 10)) {
      if (c.is_zero()) continue;
      CHECK(is_indecomposable(t, c) == (listed.count(c.v) > 0));
    }
  }
}

TEST_CASE("monoid generation") {
  const auto t = fixtures::ex11();
  std::vector<Coloring> gens;
  for (const auto& g : enumerate_barbell_trees(t)) gens.push_back(g.coloring);
  for (const auto& c : enumerate_admissible(t, 12)) CHECK(monoid_generates(t, gens, c));
  CHECK(monoid_generates(t, gens, zero_coloring(t)));

  const auto f = flower(5);
  std::vector<Coloring> fg;
  for (const auto& g : enumerate_barbell_trees(f)) fg.push_back(g.coloring);
  CHECK(monoid_generates(f, fg, peripheral_colorings(f)[4]));
}

TEST_CASE("simple generators span the rational cone") {
  for (const auto& t : {fixtures::n4ex2(), flower(5)}) {
    std::vector<Coloring> rays;
    for (const auto& g : enumerate_simple(t)) rays.push_back(g.coloring);
    for (const auto& g : enumerate_barbell_trees(t)) CHECK(in_rational_cone(rays, g.coloring));
  }
  // (1,0,0) is not a nonnegative combination of the ex11 generators.
  const auto t = fixtures::ex11();
  std::vector<Coloring> rays;
  for (const auto& g : enumerate_simple(t)) rays.push_back(g.coloring);
  CHECK_FALSE(in_rational_cone(rays, Coloring{t.fingerprint(), {1, 0, 0}}));
}
