#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "cvkit/errors.hpp"

namespace cvkit {

// A side slot is (triangle, side). Side k of a triangle runs counterclockwise from
// vertex k+1 to vertex k+2; corner k sits at vertex k, between sides k+1 and k+2.
struct Slot {
  int tri = 0;
  int side = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

inline int slot_id(int tri, int side) { return 3 * tri + side; }
inline int slot_id(Slot s) { return 3 * s.tri + s.side; }
inline Slot slot_of(int id) { return {id / 3, id % 3}; }
inline int mod3(int k) { return ((k % 3) + 3) % 3; }

class Triangulation;
inline Triangulation build(int triangle_count, const std::vector<std::pair<Slot, Slot>>& gluing,
                           const std::string& name = "");
inline Triangulation flip(const Triangulation& tri, int e);

class Triangulation {
 public:
  Triangulation() = default;

  int triangle_count() const { return tri_count_; }
  int slot_count() const { return 3 * tri_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int corner_count() const { return 3 * tri_count_; }
  int puncture_count() const { return punctures_; }
  int genus() const { return genus_; }
  const std::string& name() const { return name_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  int partner(int slot) const { return partner_[slot]; }
  // Slots of edge e as (lower, higher); the lower slot is the edge's canonical origin side.
  const std::array<int, 2>& edge_slots(int e) const { return edges_[e]; }
  int edge_of(int slot) const { return slot_edge_[slot]; }
  int side_edge(int tri, int side) const { return slot_edge_[slot_id(tri, mod3(side))]; }
  // Puncture index (0-based) at corner k of triangle t.
  int vertex_at(int tri, int k) const { return corner_vertex_[slot_id(tri, mod3(k))]; }

  bool is_folded(int tri) const {
    for (int s = 0; s < 3; ++s)
      if (partner_[slot_id(tri, s)] / 3 == tri) return true;
    return false;
  }
  bool is_folded_edge(int e) const { return edges_[e][0] / 3 == edges_[e][1] / 3; }

  std::vector<std::pair<Slot, Slot>> gluing() const {
    std::vector<std::pair<Slot, Slot>> out;
    for (const auto& e : edges_) out.push_back({slot_of(e[0]), slot_of(e[1])});
    return out;
  }

  std::vector<int> edges_at_triangle(int tri) const {
    return {side_edge(tri, 0), side_edge(tri, 1), side_edge(tri, 2)};
  }

 private:
  friend Triangulation build(int, const std::vector<std::pair<Slot, Slot>>&, const std::string&);
  friend Triangulation flip(const Triangulation&, int);

  static Triangulation assemble(int tri_count, std::vector<int> partner,
                                std::vector<std::array<int, 2>> edges,
                                std::vector<int> corner_vertex, int punctures, int genus,
                                std::string name);
  void refresh_fingerprint();

  int tri_count_ = 0;
  int punctures_ = 0;
  int genus_ = 0;
  std::string name_;
  std::uint64_t fingerprint_ = 0;
  std::vector<int> partner_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int> slot_edge_;
  std::vector<int> corner_vertex_;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline std::uint64_t fnv_mix(std::uint64_t h, std::int64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= static_cast<std::uint64_t>((x >> (8 * i)) & 0xff);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

inline Triangulation Triangulation::assemble(int tri_count, std::vector<int> partner,
                                             std::vector<std::array<int, 2>> edges,
                                             std::vector<int> corner_vertex, int punctures,
                                             int genus, std::string name) {
  Triangulation t;
  t.tri_count_ = tri_count;
  t.partner_ = std::move(partner);
  t.edges_ = std::move(edges);
  t.corner_vertex_ = std::move(corner_vertex);
  t.punctures_ = punctures;
  t.genus_ = genus;
  t.name_ = std::move(name);
  t.slot_edge_.assign(3 * tri_count, -1);
  for (int e = 0; e < static_cast<int>(t.edges_.size()); ++e) {
    t.slot_edge_[t.edges_[e][0]] = e;
    t.slot_edge_[t.edges_[e][1]] = e;
  }
  t.refresh_fingerprint();
  return t;
}

inline void Triangulation::refresh_fingerprint() {
  std::uint64_t h = 1469598103934665603ull;
  h = detail::fnv_mix(h, tri_count_);
  for (const auto& e : edges_) {
    h = detail::fnv_mix(h, e[0]);
    h = detail::fnv_mix(h, e[1]);
  }
  for (int v : corner_vertex_) h = detail::fnv_mix(h, v);
  fingerprint_ = h;
}

// Validates gluing data and derives edges, punctures and genus.
Triangulation build(int triangle_count, const std::vector<std::pair<Slot, Slot>>& gluing,
                    const std::string& name) {
  if (triangle_count <= 0) fail(ErrorCode::EulerCharacteristicInvalid, "no triangles");
  const int slots = 3 * triangle_count;
  std::vector<int> partner(slots, -1);
  for (const auto& [a, b] : gluing) {
    for (const Slot& s : {a, b})
      if (s.tri < 0 || s.tri >= triangle_count || s.side < 0 || s.side > 2)
        fail(ErrorCode::GluingNotInvolution, "slot out of range");
    int x = slot_id(a), y = slot_id(b);
    if (x == y) fail(ErrorCode::SlotGluedToItself, "slot (" + std::to_string(a.tri) + "," +
                                                       std::to_string(a.side) + ") glued to itself");
    if (partner[x] != -1 || partner[y] != -1)
      fail(ErrorCode::GluingNotInvolution, "slot glued more than once");
    partner[x] = y;
    partner[y] = x;
  }
  for (int s = 0; s < slots; ++s)
    if (partner[s] == -1) fail(ErrorCode::GluingNotInvolution, "slot left unglued");

  std::vector<std::array<int, 2>> edges;
  for (int s = 0; s < slots; ++s)
    if (s < partner[s]) edges.push_back({s, partner[s]});

  // Gluing (t,s) to (t',s') identifies vertex s+1 with s'+2 and s+2 with s'+1.
  detail::UnionFind uf(slots);
  detail::UnionFind comp(triangle_count);
  for (const auto& e : edges) {
    Slot a = slot_of(e[0]), b = slot_of(e[1]);
    uf.unite(slot_id(a.tri, mod3(a.side + 1)), slot_id(b.tri, mod3(b.side + 2)));
    uf.unite(slot_id(a.tri, mod3(a.side + 2)), slot_id(b.tri, mod3(b.side + 1)));
    comp.unite(a.tri, b.tri);
  }
  for (int t = 0; t < triangle_count; ++t)
    if (comp.find(t) != comp.find(0))
      fail(ErrorCode::EulerCharacteristicInvalid, "gluing is not connected");

  // Punctures are numbered by first appearance over corners ordered by (corner index, triangle).
  std::vector<int> label(slots, -1), corner_vertex(slots, -1);
  int n = 0;
  for (int k = 0; k < 3; ++k)
    for (int t = 0; t < triangle_count; ++t) {
      int root = uf.find(slot_id(t, k));
      if (label[root] == -1) label[root] = n++;
      corner_vertex[slot_id(t, k)] = label[root];
    }

  const int E = static_cast<int>(edges.size());
  const int chi = n - E + triangle_count;
  if (chi > 2 || (2 - chi) % 2 != 0)
    fail(ErrorCode::EulerCharacteristicInvalid, "Euler characteristic " + std::to_string(chi));
  const int g = (2 - chi) / 2;
  if (n < 1 || 2 * g + n < 3)
    fail(ErrorCode::EulerCharacteristicInvalid,
         "need n >= 1 and 2g+n >= 3, got g=" + std::to_string(g) + " n=" + std::to_string(n));
  if (E != 3 * (2 * g + n - 2) || triangle_count != 2 * (2 * g + n - 2))
    fail(ErrorCode::EulerCharacteristicInvalid, "edge/triangle counts inconsistent");
  return Triangulation::assemble(triangle_count, std::move(partner), std::move(edges),
                                 std::move(corner_vertex), n, g, name);
}

// Genus 0 flower: petal i (triangle i-1) is folded along alpha_i with tip p_i; the
// beta sides bound an (n-1)-gon fanned from one corner.
inline Triangulation flower(int n) {
  if (n < 4) fail(ErrorCode::FlowerRequiresNAtLeast4, "flower(" + std::to_string(n) + ")");
  const int petals = n - 1;
  const int inner = n - 3;
  std::vector<std::pair<Slot, Slot>> g;
  for (int i = 0; i < petals; ++i) g.push_back({{i, 1}, {i, 2}});
  // Inner triangle j (1..n-3) has corners Q0, Qj, Qj+1; polygon side j carries beta_{j+1}.
  auto inner_tri = [&](int j) { return petals + j - 1; };
  for (int j = 1; j <= inner; ++j) {
    int t = inner_tri(j);
    g.push_back({{t, 0}, {j, 0}});
    if (j == 1) g.push_back({{t, 2}, {0, 0}});
    if (j == inner)
      g.push_back({{t, 1}, {petals - 1, 0}});
    else
      g.push_back({{t, 1}, {inner_tri(j + 1), 2}});
  }
  return build(petals + inner, g, "flower:" + std::to_string(n));
}

// Replaces the diagonal e of its square by the other diagonal. The new edge keeps
// index e; every other edge keeps its index; puncture labels are carried over.
Triangulation flip(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.edge_count()) fail(ErrorCode::FlipIllegal, "edge out of range");
  const Slot lo = slot_of(tri.edge_slots(e)[0]);
  const Slot hi = slot_of(tri.edge_slots(e)[1]);
  if (lo.tri == hi.tri) fail(ErrorCode::FlipOnFoldedEdge, "edge " + std::to_string(e) + " is folded");
  const int t1 = lo.tri, s1 = lo.side, t2 = hi.tri, s2 = hi.side;
  // Square A,B,D,C with A apex of t1, D apex of t2, diagonal B-C.
  const int A = tri.vertex_at(t1, s1), B = tri.vertex_at(t1, s1 + 1);
  const int C = tri.vertex_at(t1, s1 + 2), D = tri.vertex_at(t2, s2);

  std::vector<int> remap(tri.slot_count());
  std::iota(remap.begin(), remap.end(), 0);
  remap[slot_id(t1, mod3(s1 + 2))] = slot_id(t1, 1);  // A->B
  remap[slot_id(t2, mod3(s2 + 1))] = slot_id(t1, 2);  // B->D
  remap[slot_id(t2, mod3(s2 + 2))] = slot_id(t2, 1);  // D->C
  remap[slot_id(t1, mod3(s1 + 1))] = slot_id(t2, 2);  // C->A
  remap[slot_id(t1, s1)] = slot_id(t1, 0);
  remap[slot_id(t2, s2)] = slot_id(t2, 0);

  std::vector<int> partner(tri.slot_count());
  for (int s = 0; s < tri.slot_count(); ++s) partner[remap[s]] = remap[tri.partner(s)];

  std::vector<std::array<int, 2>> edges(tri.edge_count());
  for (int k = 0; k < tri.edge_count(); ++k) {
    int a = remap[tri.edge_slots(k)[0]], b = remap[tri.edge_slots(k)[1]];
    edges[k] = {std::min(a, b), std::max(a, b)};
  }

  std::vector<int> cv(tri.slot_count());
  for (int t = 0; t < tri.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) cv[slot_id(t, k)] = tri.vertex_at(t, k);
  cv[slot_id(t1, 0)] = B;
  cv[slot_id(t1, 1)] = D;
  cv[slot_id(t1, 2)] = A;
  cv[slot_id(t2, 0)] = C;
  cv[slot_id(t2, 1)] = A;
  cv[slot_id(t2, 2)] = D;
  return Triangulation::assemble(tri.triangle_count(), std::move(partner), std::move(edges),
                                 std::move(cv), tri.puncture_count(), tri.genus(), "");
}

// Orientation-preserving relabeling invariant: lexicographically least BFS encoding
// over all start triangles and rotations.
inline std::vector<int> canonical_code(const Triangulation& tri) {
  const int T = tri.triangle_count();
  std::vector<int> best;
  for (int start = 0; start < T; ++start)
    for (int rot = 0; rot < 3; ++rot) {
      std::vector<int> index(T, -1), rotation(T, 0), order;
      index[start] = 0;
      rotation[start] = rot;
      order.push_back(start);
      std::vector<int> code;
      for (std::size_t head = 0; head < order.size(); ++head) {
        int t = order[head];
        for (int j = 0; j < 3; ++j) {
          int old_side = mod3(j + rotation[t]);
          Slot p = slot_of(tri.partner(slot_id(t, old_side)));
          if (index[p.tri] == -1) {
            index[p.tri] = static_cast<int>(order.size());
            rotation[p.tri] = p.side;
            order.push_back(p.tri);
          }
          code.push_back(3 * index[p.tri] + mod3(p.side - rotation[p.tri]));
        }
      }
      if (best.empty() || code < best) best = code;
    }
  return best;
}

inline bool isomorphic(const Triangulation& a, const Triangulation& b) {
  return a.triangle_count() == b.triangle_count() && canonical_code(a) == canonical_code(b);
}

struct DualGraph {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;  // dual edge k joins the triangles of edge k
  std::vector<std::vector<int>> incident;  // loops listed twice

  bool is_loop(int e) const { return edges[e][0] == edges[e][1]; }
  int other(int e, int v) const { return edges[e][0] == v ? edges[e][1] : edges[e][0]; }
  bool is_trivalent() const {
    return std::all_of(incident.begin(), incident.end(),
                       [](const std::vector<int>& inc) { return inc.size() == 3; });
  }
};

inline DualGraph dual_graph(const Triangulation& tri) {
  DualGraph d;
  d.vertex_count = tri.triangle_count();
  d.incident.resize(d.vertex_count);
  for (int e = 0; e < tri.edge_count(); ++e) {
    int a = tri.edge_slots(e)[0] / 3, b = tri.edge_slots(e)[1] / 3;
    d.edges.push_back({a, b});
    d.incident[a].push_back(e);
    d.incident[b].push_back(e);
  }
  return d;
}

}  // namespace cvkit
