#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cvkit/barbell.hpp"
#include "cvkit/coloring.hpp"
#include "cvkit/linalg.hpp"
#include "cvkit/triangulation.hpp"

namespace cvkit {

struct ConeFace {
  boost::dynamic_bitset<> rays;
  std::vector<int> zero_corners;  // maximal set of corners vanishing on the face
  int dim = 0;                    // dimension of the cone face
};

struct ConeFaceLattice {
  std::vector<Coloring> rays;
  std::vector<std::vector<std::int64_t>> ray_corners;
  std::vector<ConeFace> faces;  // ordered by (dim, ray list)
  int ambient_dim = 0;

  // Is the vector with corner coordinates u inside the face?
  bool contains(const ConeFace& f, const std::vector<std::int64_t>& u) const {
    for (int th : f.zero_corners)
      if (u[th] != 0) return false;
    return true;
  }
};

namespace detail {

inline std::vector<int> bits_to_list(const boost::dynamic_bitset<>& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace detail

// Faces of the cone spanned by the simple barbell colorings, cut out by corner
// functionals: closure under intersection of the zero sets {u_theta = 0}.
inline ConeFaceLattice cone_face_lattice(const Triangulation& tri) {
  ConeFaceLattice L;
  L.ambient_dim = tri.edge_count();
  for (auto& t : enumerate_simple(tri)) L.rays.push_back(t.coloring);
  const int R = static_cast<int>(L.rays.size());
  if (R == 0) return L;
  for (const auto& r : L.rays) L.ray_corners.push_back(corner_coords(tri, r));

  std::set<boost::dynamic_bitset<>> family;
  boost::dynamic_bitset<> full(R);
  full.set();
  family.insert(full);
  std::set<boost::dynamic_bitset<>> zero_sets;
  for (int th = 0; th < tri.corner_count(); ++th) {
    boost::dynamic_bitset<> z(R);
    for (int r = 0; r < R; ++r)
      if (L.ray_corners[r][th] == 0) z.set(r);
    zero_sets.insert(z);
  }
  for (const auto& z : zero_sets) {
    std::vector<boost::dynamic_bitset<>> add;
    for (const auto& f : family) add.push_back(f & z);
    family.insert(add.begin(), add.end());
  }

  for (const auto& f : family) {
    ConeFace face;
    face.rays = f;
    std::vector<std::vector<std::int64_t>> vecs;
    for (int r : detail::bits_to_list(f)) vecs.push_back(L.rays[r].v);
    face.dim = exact_rank(vecs);
    for (int th = 0; th < tri.corner_count(); ++th) {
      bool zero = true;
      for (int r : detail::bits_to_list(f))
        if (L.ray_corners[r][th] != 0) {
          zero = false;
          break;
        }
      if (zero) face.zero_corners.push_back(th);
    }
    L.faces.push_back(std::move(face));
  }
  std::sort(L.faces.begin(), L.faces.end(), [](const ConeFace& a, const ConeFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return detail::bits_to_list(a.rays) < detail::bits_to_list(b.rays);
  });
  return L;
}

struct Cell {
  int dim = 0;
  std::vector<int> vertices;  // sorted vertex indices
  std::vector<int> facets;    // indices of codimension-one cells
};

struct PolytopeComplex {
  std::vector<Cell> cells;          // ordered by (dim, vertices)
  std::vector<Coloring> vertex_rays;  // ray of each vertex, when built from a cone
  std::vector<std::string> vertex_labels;

  int dimension() const {
    int d = -1;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
  }
  int vertex_count() const {
    std::set<int> vs;
    for (const auto& c : cells) vs.insert(c.vertices.begin(), c.vertices.end());
    return static_cast<int>(vs.size());
  }
};

// Sorts cells and fills in facet lists by vertex-set inclusion.
inline PolytopeComplex make_complex(std::vector<Cell> cells) {
  for (auto& c : cells) std::sort(c.vertices.begin(), c.vertices.end());
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].facets.clear();
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[j].dim == cells[i].dim - 1 &&
          std::includes(cells[i].vertices.begin(), cells[i].vertices.end(), cells[j].vertices.begin(),
                        cells[j].vertices.end()))
        cells[i].facets.push_back(static_cast<int>(j));
  }
  PolytopeComplex pc;
  pc.cells = std::move(cells);
  return pc;
}

// Slice complex of faces containing no peripheral vector.
inline PolytopeComplex relative_complex(const Triangulation& tri) {
  if (tri.genus() == 0 && tri.puncture_count() == 3)
    fail(ErrorCode::EmptyRelativeComplex, "relative complex of the thrice-punctured sphere is empty");
  const auto L = cone_face_lattice(tri);
  std::vector<std::vector<std::int64_t>> periph_u;
  for (const auto& a : peripheral_colorings(tri)) periph_u.push_back(corner_coords(tri, a));

  std::vector<Cell> cells;
  std::set<int> used;
  for (const auto& f : L.faces) {
    if (f.rays.none()) continue;
    bool avoids = true;
    for (const auto& u : periph_u)
      if (L.contains(f, u)) {
        avoids = false;
        break;
      }
    if (!avoids) continue;
    Cell c;
    c.dim = f.dim - 1;
    c.vertices = detail::bits_to_list(f.rays);
    used.insert(c.vertices.begin(), c.vertices.end());
    cells.push_back(std::move(c));
  }
  if (cells.empty()) fail(ErrorCode::EmptyRelativeComplex, "no face avoids the peripheral vectors");
  // Renumber vertices to the surviving rays.
  std::map<int, int> renum;
  for (int r : used) renum.emplace(r, static_cast<int>(renum.size()));
  for (auto& c : cells)
    for (auto& v : c.vertices) v = renum.at(v);
  PolytopeComplex pc = make_complex(std::move(cells));
  for (const auto& [r, idx] : renum) {
    pc.vertex_rays.push_back(L.rays[r]);
    std::string label;
    for (auto x : L.rays[r].v) label += std::to_string(x);
    pc.vertex_labels.push_back(label);
  }
  return pc;
}

// The full slice polytope of the cone: every nonempty face.
inline PolytopeComplex moment_polytope(const Triangulation& tri) {
  const auto L = cone_face_lattice(tri);
  std::vector<Cell> cells;
  for (const auto& f : L.faces) {
    if (f.rays.none()) continue;
    cells.push_back({f.dim - 1, detail::bits_to_list(f.rays), {}});
  }
  PolytopeComplex pc = make_complex(std::move(cells));
  for (const auto& r : L.rays) {
    pc.vertex_rays.push_back(r);
    std::string label;
    for (auto x : r.v) label += std::to_string(x);
    pc.vertex_labels.push_back(label);
  }
  return pc;
}

inline std::vector<int> f_vector(const PolytopeComplex& pc) {
  std::vector<int> f(pc.dimension() + 1, 0);
  for (const auto& c : pc.cells) ++f[c.dim];
  return f;
}

struct HomologyReport {
  std::vector<long> betti;
  std::vector<std::vector<BigInt>> torsion;  // torsion coefficients of H_k
  long euler = 0;
  std::vector<long> chain_counts;  // simplices of the order complex per dimension
};

// Integral homology of the order complex (chains of cells under inclusion).
inline HomologyReport homology(const PolytopeComplex& pc) {
  if (pc.cells.empty()) fail(ErrorCode::EmptyComplex, "empty complex");
  const int N = static_cast<int>(pc.cells.size());
  std::vector<std::vector<int>> up(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (pc.cells[j].dim > pc.cells[i].dim &&
          std::includes(pc.cells[j].vertices.begin(), pc.cells[j].vertices.end(),
                        pc.cells[i].vertices.begin(), pc.cells[i].vertices.end()))
        up[i].push_back(j);

  std::vector<std::map<std::vector<int>, int>> chains;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int c) {
    cur.push_back(c);
    const std::size_t k = cur.size() - 1;
    if (chains.size() <= k) chains.resize(k + 1);
    chains[k].emplace(cur, static_cast<int>(chains[k].size()));
    for (int d : up[c]) grow(d);
    cur.pop_back();
  };
  for (int i = 0; i < N; ++i) grow(i);

  const int top = static_cast<int>(chains.size()) - 1;
  std::vector<int> ranks(top + 2, 0);
  std::vector<std::vector<BigInt>> tors(top + 2);
  for (int k = 1; k <= top; ++k) {
    std::vector<SparseRow> rows;
    for (const auto& [chain, idx] : chains[k]) {
      SparseRow row;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        std::vector<int> face = chain;
        face.erase(face.begin() + static_cast<long>(i));
        row[chains[k - 1].at(face)] = (i % 2 == 0) ? 1 : -1;
      }
      rows.push_back(std::move(row));
    }
    auto snf = smith_normal_form(std::move(rows), static_cast<int>(chains[k - 1].size()));
    ranks[k] = snf.rank;
    tors[k - 1] = snf.torsion;
  }
  HomologyReport h;
  for (int k = 0; k <= top; ++k) {
    long ck = static_cast<long>(chains[k].size());
    h.chain_counts.push_back(ck);
    h.betti.push_back(ck - ranks[k] - ranks[k + 1]);
    h.torsion.push_back(tors[k]);
    h.euler += (k % 2 == 0 ? 1 : -1) * h.betti.back();
  }
  return h;
}

struct SphereCertificate {
  int d = 0;
  bool connected = false;
  bool pseudomanifold = false;
  bool homology_sphere = false;
  bool granted = false;
  std::vector<long> betti;
  std::string note;
};

inline SphereCertificate sphere_certificate(const PolytopeComplex& pc, int d) {
  if (pc.cells.empty()) fail(ErrorCode::EmptyComplex, "empty complex");
  SphereCertificate cert;
  cert.d = d;

  std::map<int, int> vid;
  for (const auto& c : pc.cells)
    for (int v : c.vertices) vid.emplace(v, static_cast<int>(vid.size()));
  detail::UnionFind uf(static_cast<int>(vid.size()));
  for (const auto& c : pc.cells)
    for (int v : c.vertices) uf.unite(vid.at(v), vid.at(c.vertices[0]));
  std::set<int> comps;
  for (const auto& [v, i] : vid) comps.insert(uf.find(i));
  cert.connected = static_cast<int>(comps.size()) == (d == 0 ? 2 : 1);

  // Pure of dimension d, and every (d-1)-cell lies in exactly two d-cells.
  bool ok = pc.dimension() == d;
  const int N = static_cast<int>(pc.cells.size());
  std::vector<int> cofaces(N, 0);
  std::vector<char> in_top(N, 0);
  for (int i = 0; i < N && ok; ++i) {
    if (pc.cells[i].dim != d) continue;
    in_top[i] = 1;
    for (int j = 0; j < N; ++j)
      if (pc.cells[j].dim < d &&
          std::includes(pc.cells[i].vertices.begin(), pc.cells[i].vertices.end(),
                        pc.cells[j].vertices.begin(), pc.cells[j].vertices.end())) {
        in_top[j] = 1;
        if (pc.cells[j].dim == d - 1) ++cofaces[j];
      }
  }
  for (int i = 0; i < N && ok; ++i) {
    if (!in_top[i]) ok = false;
    if (pc.cells[i].dim == d - 1 && cofaces[i] != 2) ok = false;
  }
  cert.pseudomanifold = ok;

  auto h = homology(pc);
  cert.betti = h.betti;
  bool sphere = true;
  for (int k = 0; k < static_cast<int>(h.betti.size()); ++k) {
    long want = 0;
    if (d == 0 && k == 0) want = 2;
    else if (k == 0 || k == d) want = 1;
    if (h.betti[k] != want || !h.torsion[k].empty()) sphere = false;
  }
  if (static_cast<int>(h.betti.size()) <= d) sphere = false;
  cert.homology_sphere = sphere;
  cert.granted = cert.connected && cert.pseudomanifold && cert.homology_sphere;
  cert.note = d >= 3 ? "certifies a homology sphere, not a homeomorphism"
                     : "connected pseudomanifold with the homology of a sphere";
  return cert;
}

struct MutationResult {
  Triangulation flipped;
  Coloring coloring;
};

// Tropical exchange: v'_e = max(v_a + v_c, v_b + v_d) - v_e over opposite sides of the square.
inline MutationResult mutation_transfer(const Triangulation& tri, int e, const Coloring& c) {
  require_admissible(tri, c);
  Triangulation flipped;
  try {
    flipped = flip(tri, e);
  } catch (const Error& err) {
    fail(ErrorCode::FlipIllegal, err.what());
  }
  const Slot lo = slot_of(tri.edge_slots(e)[0]);
  const Slot hi = slot_of(tri.edge_slots(e)[1]);
  const std::int64_t va = c[tri.side_edge(lo.tri, lo.side + 2)];
  const std::int64_t vc = c[tri.side_edge(hi.tri, hi.side + 2)];
  const std::int64_t vb = c[tri.side_edge(hi.tri, hi.side + 1)];
  const std::int64_t vd = c[tri.side_edge(lo.tri, lo.side + 1)];
  Coloring out{flipped.fingerprint(), c.v};
  out[e] = std::max(checked_add(va, vc), checked_add(vb, vd)) - c[e];
  return {std::move(flipped), std::move(out)};
}

}  // namespace cvkit
