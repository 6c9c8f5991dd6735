#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"
#include "cvkit/barbell.hpp"
#include "cvkit/fixtures.hpp"
#include "cvkit/polytope.hpp"

using namespace cvkit;

namespace {

// Simplicial complex from its facets, with every face listed as a cell.
PolytopeComplex simplicial(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> faces;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const int k = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::vector<Cell> cells;
  for (const auto& s : faces) cells.push_back({static_cast<int>(s.size()) - 1, s, {}});
  return make_complex(cells);
}

}  // namespace

TEST_CASE("homology of standard complexes") {
  SECTION("boundary of the tetrahedron") {
    const auto h = homology(simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
    CHECK(h.betti == std::vector<long>{1, 0, 1});
    CHECK(h.euler == 2);
  }
  SECTION("seven-vertex torus") {
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 7; ++i) {
      f.push_back({i, (i + 1) % 7, (i + 3) % 7});
      f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    const auto h = homology(simplicial(f));
    CHECK(h.betti == std::vector<long>{1, 2, 1});
    CHECK(h.euler == 0);
  }
  SECTION("six-vertex projective plane") {
    const auto h = homology(simplicial({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}}));
    CHECK(h.betti == std::vector<long>{1, 0, 0});
    REQUIRE(h.torsion.size() >= 2);
    CHECK(h.torsion[1] == std::vector<BigInt>{2});
  }
  SECTION("square as a single polygonal cell") {
    std::vector<Cell> cells{{0, {0}, {}}, {0, {1}, {}}, {0, {2}, {}}, {0, {3}, {}},
                            {1, {0, 1}, {}}, {1, {1, 2}, {}}, {1, {2, 3}, {}}, {1, {0, 3}, {}},
                            {2, {0, 1, 2, 3}, {}}};
    const auto h = homology(make_complex(cells));
    CHECK(h.betti == std::vector<long>{1, 0, 0});
  }
}

TEST_CASE("cone face lattice") {
  const auto L = cone_face_lattice(fixtures::ex11());
  CHECK(L.rays.size() == 3);
  std::map<int, int> by_dim;
  for (const auto& f : L.faces) ++by_dim[f.dim];
  CHECK(by_dim[3] == 1);
  CHECK(by_dim[2] == 3);
  CHECK(by_dim[1] == 3);
  for (const auto& f : L.faces)
    if (f.dim == 2) CHECK(f.rays.count() == 2);
  int top = 0;
  for (const auto& f : cone_face_lattice(fixtures::n4ex()).faces) top = std::max(top, f.dim);
  CHECK(top == 6);
}

TEST_CASE("relative complexes") {
  struct Case {
    Triangulation t;
    std::vector<int> f;
  };
  for (const auto& c : {Case{fixtures::ex11(), {3, 3}}, Case{fixtures::n4ex(), {3, 3}},
                        Case{fixtures::n4ex2(), {4, 4}}, Case{flower(4), {3, 3}}}) {
    const auto pc = relative_complex(c.t);
    CHECK(f_vector(pc) == c.f);
    CHECK(homology(pc).betti == std::vector<long>{1, 1});
    const auto cert = sphere_certificate(pc, 1);
    CHECK(cert.granted);
  }
}

TEST_CASE("five-punctured sphere complex") {
  const auto pc = relative_complex(flower(5));
  const auto f = f_vector(pc);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == 6);
  CHECK(f[3] == 6);
  std::multiset<std::size_t> top_sizes;
  for (const auto& c : pc.cells)
    if (c.dim == 3) top_sizes.insert(c.vertices.size());
  CHECK(top_sizes == std::multiset<std::size_t>{4, 4, 4, 4, 5, 5});
  const auto h = homology(pc);
  CHECK(h.betti == std::vector<long>{1, 0, 0, 1});
  CHECK(h.euler == 0);
  const auto cert = sphere_certificate(pc, 3);
  CHECK(cert.connected);
  CHECK(cert.pseudomanifold);
  CHECK(cert.homology_sphere);
  CHECK(cert.granted);
  CHECK_FALSE(cert.note.empty());
}

TEST_CASE("empty relative complexes") {
  for (const auto& t : {fixtures::flower3(), fixtures::sphere3()}) {
    try {
      relative_complex(t);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyRelativeComplex);
    }
  }
  try {
    homology(PolytopeComplex{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyComplex);
  }
  CHECK(f_vector(PolytopeComplex{}).empty());
}

TEST_CASE("certificate rejects a dangling edge") {
  // A triangle boundary plus an extra edge hanging off vertex 0.
  const auto pc = simplicial({{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  const auto cert = sphere_certificate(pc, 1);
  CHECK_FALSE(cert.pseudomanifold);
  CHECK_FALSE(cert.granted);
}

TEST_CASE("mutation transfer") {
  const auto t = fixtures::n4ex();
  const auto a = peripheral_colorings(t);
  const auto flipped = flip(t, 0);
  const auto a_new = peripheral_colorings(flipped);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto r = mutation_transfer(t, 0, a[i]);
    CHECK(r.coloring.v == a_new[i].v);
    CHECK(mutation_transfer(r.flipped, 0, r.coloring).coloring.v == a[i].v);
  }
  CHECK(degree(flipped, mutation_transfer(t, 0, a[0]).coloring) == 4);

  // Involutive and injective on every admissible coloring up to degree 8.
  std::set<std::vector<std::int64_t>> images;
  const auto all = enumerate_admissible(t, 8);
  for (const auto& c : all) {
    const auto r = mutation_transfer(t, 0, c);
    CHECK(is_admissible(r.flipped, r.coloring));
    CHECK(mutation_transfer(r.flipped, 0, r.coloring).coloring.v == c.v);
    images.insert(r.coloring.v);
  }
  CHECK(images.size() == all.size());

  // Symmetric square: all sides and the diagonal colored 2.
  const auto e11 = fixtures::ex11();
  CHECK(mutation_transfer(e11, 0, make_coloring(e11, {2, 2, 2})).coloring[0] == 2);
}

TEST_CASE("relative Betti numbers agree across flips") {
  for (const auto& t : {fixtures::n4ex(), fixtures::n4ex2(), fixtures::ex11()})
    for (int e = 0; e < t.edge_count(); ++e) {
      if (t.is_folded_edge(e)) continue;
      CHECK(homology(relative_complex(flip(t, e))).betti == homology(relative_complex(t)).betti);
    }
}

TEST_CASE("illegal mutation") {
  const auto t = flower(4);
  for (int e = 0; e < t.edge_count(); ++e) {
    if (!t.is_folded_edge(e)) continue;
    try {
      mutation_transfer(t, e, zero_coloring(t));
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::FlipIllegal);
    }
  }
}
