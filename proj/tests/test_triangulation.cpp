#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "cvkit/fixtures.hpp"
#include "cvkit/triangulation.hpp"

using namespace cvkit;

namespace {

void check_counts(const Triangulation& t, int g, int n) {
  const int k = 2 * g + n - 2;
  CHECK(t.genus() == g);
  CHECK(t.puncture_count() == n);
  CHECK(t.edge_count() == 3 * k);
  CHECK(t.triangle_count() == 2 * k);
  CHECK(t.corner_count() == 6 * k);
  CHECK(t.puncture_count() - t.edge_count() + t.triangle_count() == 2 - 2 * g);
}

// Relabel triangles by a permutation and rotate each triangle's sides.
Triangulation relabel(const Triangulation& t, std::mt19937& rng) {
  std::vector<int> perm(t.triangle_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> rot(t.triangle_count());
  for (auto& r : rot) r = static_cast<int>(rng() % 3);
  std::vector<std::pair<Slot, Slot>> g;
  for (auto [a, b] : t.gluing())
    g.push_back({{perm[a.tri], (a.side + rot[a.tri]) % 3}, {perm[b.tri], (b.side + rot[b.tri]) % 3}});
  return build(t.triangle_count(), g, "relabelled");
}

// Multiset of dual-graph edge multiplicities, as an isomorphism invariant.
std::vector<int> dual_profile(const Triangulation& t) {
  std::map<std::pair<int, int>, int> mult;
  const auto d = dual_graph(t);
  for (auto [a, b] : d.edges) ++mult[{std::min(a, b), std::max(a, b)}];
  std::vector<int> out;
  for (auto& [k, m] : mult) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("fixture counts") {
  check_counts(fixtures::ex11(), 1, 1);
  check_counts(fixtures::sphere3(), 0, 3);
  check_counts(fixtures::n4ex(), 0, 4);
  check_counts(fixtures::n4ex2(), 0, 4);
  check_counts(fixtures::flower3(), 0, 3);
}

TEST_CASE("gluing validation") {
  SECTION("slot glued to itself") {
    try {
      build(2, {{{0, 0}, {0, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SlotGluedToItself);
    }
  }
  SECTION("slot used twice") {
    try {
      build(2, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}, {{0, 2}, {1, 2}}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GluingNotInvolution);
    }
  }
  SECTION("unpaired slot") {
    try {
      build(2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GluingNotInvolution);
    }
  }
  SECTION("disconnected union of two tori") {
    try {
      build(4, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, {{0, 2}, {1, 2}},
                {{2, 0}, {3, 0}}, {{2, 1}, {3, 1}}, {{2, 2}, {3, 2}}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EulerCharacteristicInvalid);
    }
  }
}

TEST_CASE("dual graphs of the fixtures") {
  const auto d11 = dual_graph(fixtures::ex11());
  CHECK(d11.vertex_count == 2);
  CHECK(d11.edges.size() == 3);
  for (int e = 0; e < 3; ++e) CHECK_FALSE(d11.is_loop(e));
  CHECK(dual_profile(fixtures::ex11()) == std::vector<int>{3});

  const auto d4 = dual_graph(fixtures::n4ex());
  CHECK(d4.vertex_count == 4);
  CHECK(dual_profile(fixtures::n4ex()) == std::vector<int>(6, 1));

  // Three loops on the leaves of a star whose centre is the inner triangle.
  const auto t = flower(4);
  const auto df = dual_graph(t);
  int loops = 0;
  std::map<int, int> non_loop_degree;
  for (int e = 0; e < t.edge_count(); ++e) {
    if (df.is_loop(e)) {
      ++loops;
      continue;
    }
    ++non_loop_degree[df.edges[e][0]];
    ++non_loop_degree[df.edges[e][1]];
  }
  CHECK(loops == 3);
  std::vector<int> degs;
  for (auto& [v, d] : non_loop_degree) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("every dual graph is trivalent") {
  for (const auto& t : {fixtures::ex11(), fixtures::sphere3(), fixtures::n4ex(), fixtures::n4ex2(), flower(4),
                        flower(5), flower(6), flower(7)})
    CHECK(dual_graph(t).is_trivalent());
}

TEST_CASE("flower triangulations") {
  for (int n = 4; n <= 8; ++n) {
    const auto t = flower(n);
    check_counts(t, 0, n);
    int folded = 0, loops = 0;
    for (int i = 0; i < t.triangle_count(); ++i) folded += t.is_folded(i);
    const auto d = dual_graph(t);
    for (int e = 0; e < t.edge_count(); ++e) loops += d.is_loop(e);
    CHECK(folded == n - 1);
    CHECK(loops == n - 1);
  }
  CHECK(flower(5).edge_count() == 9);
  CHECK(flower(5).triangle_count() == 6);
  try {
    flower(3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FlowerRequiresNAtLeast4);
  }
}

TEST_CASE("isomorphism is invariant under relabelling") {
  std::mt19937 rng(11);
  for (const auto& t : {fixtures::ex11(), fixtures::n4ex(), fixtures::n4ex2(), flower(5), flower(6)})
    for (int k = 0; k < 5; ++k) CHECK(isomorphic(t, relabel(t, rng)));
  CHECK(dual_profile(fixtures::n4ex()) != dual_profile(fixtures::n4ex2()));
  CHECK_FALSE(isomorphic(fixtures::n4ex(), fixtures::n4ex2()));
}

TEST_CASE("flip") {
  SECTION("preserves the topology and is an involution up to isomorphism") {
    for (const auto& t : {fixtures::ex11(), fixtures::n4ex(), fixtures::n4ex2(), flower(5)})
      for (int e = 0; e < t.edge_count(); ++e) {
        if (t.is_folded_edge(e)) continue;
        const auto f = flip(t, e);
        CHECK(f.genus() == t.genus());
        CHECK(f.puncture_count() == t.puncture_count());
        CHECK(f.edge_count() == t.edge_count());
        CHECK(f.triangle_count() == t.triangle_count());
        CHECK(dual_graph(f).is_trivalent());
        CHECK(isomorphic(flip(f, e), t));
      }
  }
  SECTION("the diagonal flip of n4ex gives n4ex2") {
    CHECK(isomorphic(flip(fixtures::n4ex(), 0), fixtures::n4ex2()));
  }
  SECTION("folded edges are rejected") {
    const auto t = flower(4);
    int folded_edge = -1;
    for (int e = 0; e < t.edge_count(); ++e)
      if (t.is_folded_edge(e)) folded_edge = e;
    REQUIRE(folded_edge >= 0);
    try {
      flip(t, folded_edge);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FlipOnFoldedEdge);
      CHECK(is_illegal_operation(e.code()));
    }
  }
}

TEST_CASE("canonical edge order is lexicographic on slot pairs") {
  for (const auto& t : {fixtures::n4ex(), flower(6)}) {
    for (int e = 0; e + 1 < t.edge_count(); ++e) CHECK(t.edge_slots(e) < t.edge_slots(e + 1));
    for (int e = 0; e < t.edge_count(); ++e) {
      CHECK(t.edge_slots(e)[0] < t.edge_slots(e)[1]);
      CHECK(t.partner(t.edge_slots(e)[0]) == t.edge_slots(e)[1]);
    }
  }
}
