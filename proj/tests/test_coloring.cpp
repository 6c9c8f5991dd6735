#include <algorithm>

#include "catch_amalgamated.hpp"
#include "cvkit/barbell.hpp"
#include "cvkit/coloring.hpp"
#include "cvkit/fixtures.hpp"

using namespace cvkit;

namespace {

// Admissibility straight from the per-triangle rule: even perimeter and triangle inequalities.
bool admissible_oracle(const Triangulation& t, const std::vector<std::int64_t>& v) {
  for (int i = 0; i < t.triangle_count(); ++i) {
    std::int64_t a = v[t.side_edge(i, 0)], b = v[t.side_edge(i, 1)], c = v[t.side_edge(i, 2)];
    if ((a + b + c) % 2 != 0) return false;
    if (a > b + c || b > a + c || c > a + b) return false;
  }
  return true;
}

std::vector<Triangulation> all_fixtures() {
  return {fixtures::ex11(), fixtures::sphere3(), fixtures::n4ex(), fixtures::n4ex2(), flower(4), flower(5)};
}

}  // namespace

TEST_CASE("admissibility") {
  for (const auto& t : all_fixtures()) {
    CHECK(is_admissible(t, make_coloring(t, std::vector<std::int64_t>(t.edge_count(), 2))));
    CHECK(is_admissible(t, zero_coloring(t)));
  }
  // A single 1 breaks parity on a non-folded adjacent triangle.
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex(), fixtures::n4ex2()})
    for (int e = 0; e < t.edge_count(); ++e) {
      std::vector<std::int64_t> v(t.edge_count(), 0);
      v[e] = 1;
      CHECK_FALSE(is_admissible(t, make_coloring(t, v)));
    }
}

TEST_CASE("admissibility agrees with the triangle rule on small vectors") {
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex2(), flower(4)}) {
    const int m = t.edge_count();
    std::vector<std::int64_t> v(m, 0);
    long total = 0, agree = 0;
    // All vectors with entries in 0..2.
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        ++total;
        agree += is_admissible(t, make_coloring(t, v)) == admissible_oracle(t, v);
        return;
      }
      for (int x = 0; x <= 2; ++x) {
        v[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
    CHECK(agree == total);
  }
}

TEST_CASE("input validation") {
  const auto t = fixtures::ex11();
  try {
    make_coloring(t, {1, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
  try {
    make_coloring(t, {1, -1, 0});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeEntry);
  }
  const auto other = fixtures::sphere3();
  try {
    degree(t, make_coloring(other, {2, 2, 2}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TriangulationMismatch);
  }
}

TEST_CASE("corner coordinates") {
  SECTION("triangle colored (4,2,2)") {
    // In ex11 side s of each triangle carries edge s.
    const auto t = fixtures::ex11();
    const auto u = corner_coords(t, make_coloring(t, {4, 2, 2}));
    CHECK(u[0] == 0);
    CHECK(u[1] == 2);
    CHECK(u[2] == 2);
  }
  SECTION("zero") {
    const auto t = fixtures::n4ex();
    const auto u = corner_coords(t, zero_coloring(t));
    CHECK(std::all_of(u.begin(), u.end(), [](std::int64_t x) { return x == 0; }));
    CHECK(from_corners(t, u).is_zero());
  }
  SECTION("folded triangle with alpha 1 and beta 0") {
    const auto t = flower(5);
    const auto a = peripheral_colorings(t);
    for (int i = 0; i < 4; ++i) {
      const auto u = corner_coords(t, a[i]);
      // Petal i: sides 1 and 2 are the doubled alpha, corner 0 is the tip between them.
      CHECK(u[3 * i + 0] == 1);
      CHECK(u[3 * i + 1] == 0);
      CHECK(u[3 * i + 2] == 0);
    }
  }
  SECTION("round trip on every admissible coloring of degree at most 8") {
    for (const auto& t : all_fixtures())
      for (const auto& c : enumerate_admissible(t, 8)) CHECK(from_corners(t, corner_coords(t, c)).v == c.v);
  }
  SECTION("unbalanced corners") {
    const auto t = fixtures::n4ex();
    std::vector<std::int64_t> u(t.corner_count(), 0);
    u[0] = 1;
    try {
      from_corners(t, u);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EdgeBalanceViolated);
    }
  }
}

TEST_CASE("interior points") {
  for (const auto& t : all_fixtures()) {
    CHECK(is_interior(t, make_coloring(t, std::vector<std::int64_t>(t.edge_count(), 2))));
    CHECK_FALSE(is_interior(t, zero_coloring(t)));
    for (const auto& g : enumerate_simple(t)) CHECK_FALSE(is_interior(t, g.coloring));
  }
}

TEST_CASE("peripheral colorings") {
  CHECK(peripheral_colorings(fixtures::ex11())[0].v == std::vector<std::int64_t>{2, 2, 2});
  for (const auto& t : all_fixtures()) {
    const auto a = peripheral_colorings(t);
    REQUIRE(static_cast<int>(a.size()) == t.puncture_count());
    std::vector<std::int64_t> sum(t.edge_count(), 0);
    for (const auto& c : a) {
      CHECK(is_admissible(t, c));
      for (int e = 0; e < t.edge_count(); ++e) sum[e] += c[e];
    }
    CHECK(sum == std::vector<std::int64_t>(t.edge_count(), 2));
  }
  const auto f = flower(5);
  const auto a = peripheral_colorings(f);
  for (int i = 0; i < 4; ++i) {
    CHECK(degree(f, a[i]) == 1);
    // Supported on the doubled side of petal i.
    const int alpha = f.side_edge(i, 1);
    for (int e = 0; e < f.edge_count(); ++e) CHECK(a[i][e] == (e == alpha ? 1 : 0));
  }
}

TEST_CASE("degrees of the four-punctured sphere fixtures") {
  const auto t = fixtures::n4ex();
  for (const auto& c : peripheral_colorings(t)) CHECK(degree(t, c) == 3);
  int fours = 0;
  for (const auto& g : enumerate_barbell_trees(t)) fours += g.degree == 4;
  CHECK(fours == 3);

  const auto t2 = fixtures::n4ex2();
  const auto a = peripheral_colorings(t2);
  CHECK(degree(t2, a[0]) == 4);
  CHECK(degree(t2, a[1]) == 2);
  CHECK(degree(t2, a[2]) == 2);
  CHECK(degree(t2, a[3]) == 4);
  CHECK(degree(t2, zero_coloring(t2)) == 0);
}
