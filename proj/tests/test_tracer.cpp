#include "catch_amalgamated.hpp"
#include "cvkit/barbell.hpp"
#include "cvkit/fixtures.hpp"
#include "cvkit/tracer.hpp"

using namespace cvkit;

TEST_CASE("tracing peripheral colorings") {
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex(), fixtures::n4ex2(), flower(4), flower(5)}) {
    const auto a = peripheral_colorings(t);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      const auto comps = trace_components(t, a[i]);
      REQUIRE(comps.size() == 1);
      REQUIRE(comps[0].puncture.has_value());
      CHECK(*comps[0].puncture == i);
      CHECK(comps[0].coloring.v == a[i].v);
    }
  }
}

TEST_CASE("zero coloring has no components") {
  const auto t = fixtures::n4ex();
  CHECK(trace_components(t, zero_coloring(t)).empty());
}

TEST_CASE("components partition the crossings") {
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex2(), flower(5)})
    for (const auto& c : enumerate_admissible(t, 8)) {
      std::vector<std::int64_t> sum(t.edge_count(), 0);
      std::int64_t length = 0;
      for (const auto& comp : trace_components(t, c)) {
        CHECK(is_admissible(t, comp.coloring));
        CHECK_FALSE(comp.coloring.is_zero());
        for (int e = 0; e < t.edge_count(); ++e) sum[e] += comp.coloring[e];
        length += static_cast<std::int64_t>(comp.strand.size());
      }
      CHECK(sum == c.v);
      CHECK(length == degree(t, c));
    }
}

TEST_CASE("barbell generators trace to one non-peripheral curve") {
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex(), fixtures::n4ex2(), flower(5)}) {
    const auto per = peripheral_colorings(t);
    for (const auto& g : enumerate_barbell_trees(t)) {
      const auto comps = trace_components(t, g.coloring);
      CHECK(comps.size() == 1);
      const bool peripheral = std::find_if(per.begin(), per.end(), [&](const Coloring& a) {
                                return a.v == g.coloring.v;
                              }) != per.end();
      CHECK(comps[0].puncture.has_value() == peripheral);
    }
  }
}

TEST_CASE("stripping peripheral curves") {
  const auto t = flower(5);
  const auto a = peripheral_colorings(t);
  auto s1 = strip_peripheral(t, a[0]);
  CHECK(s1.reduced.is_zero());
  CHECK(s1.counts[0] == 1);
  auto s2 = strip_peripheral(t, scale(t, a[0], 2));
  CHECK(s2.reduced.is_zero());
  CHECK(s2.counts[0] == 2);
  CHECK(relative_degree(t, a[0]) == 0);

  const auto n4 = fixtures::n4ex();
  const auto per = peripheral_colorings(n4);
  for (const auto& g : enumerate_barbell_trees(n4)) {
    if (g.degree != 4) continue;
    auto s = strip_peripheral(n4, g.coloring);
    CHECK(s.reduced.v == g.coloring.v);
    CHECK(std::all_of(s.counts.begin(), s.counts.end(), [](std::int64_t x) { return x == 0; }));
    CHECK(relative_degree(n4, g.coloring) == g.degree);
    CHECK(relative_degree(n4, add(n4, per[0], g.coloring)) == g.degree);
  }
}

TEST_CASE("geometric sum on the once-punctured torus") {
  const auto t = fixtures::ex11();
  const auto x = make_coloring(t, {1, 1, 0}), y = make_coloring(t, {1, 0, 1}), z = make_coloring(t, {0, 1, 1});
  const auto s = geometric_sum(t, geometric_sum(t, x, y), z);
  CHECK(s.v == std::vector<std::int64_t>{2, 2, 2});
  CHECK(geometric_sum(t, x, y).v == geometric_sum(t, y, x).v);
  CHECK(geometric_sum(t, x, zero_coloring(t)).v == x.v);
  const auto comps = trace_components(t, s);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].puncture == 0);
}
