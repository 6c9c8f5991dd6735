#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "cvkit/coloring.hpp"
#include "cvkit/linalg.hpp"
#include "cvkit/triangulation.hpp"

namespace cvkit {

struct BarbellTree {
  std::vector<int> colors;  // per dual edge, in {0, 1, 2}
  Coloring coloring;
  std::int64_t degree = 0;
  int bells = 0;
  bool simple = false;
};

struct DualCycle {
  std::vector<int> edges;     // sorted
  std::vector<int> vertices;  // sorted
};

// All simple cycles of a multigraph with loops, as edge sets.
inline std::vector<DualCycle> simple_cycles(const DualGraph& g) {
  std::set<std::vector<int>> seen;
  std::vector<DualCycle> out;
  auto record = [&](std::vector<int> edges, std::vector<int> verts) {
    std::sort(edges.begin(), edges.end());
    if (!seen.insert(edges).second) return;
    std::sort(verts.begin(), verts.end());
    out.push_back({std::move(edges), std::move(verts)});
  };
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (g.is_loop(e)) record({e}, {g.edges[e][0]});

  std::vector<int> path_edges, path_verts;
  std::vector<char> on_path(g.vertex_count, 0);
  std::function<void(int, int)> dfs = [&](int s, int v) {
    for (int e : g.incident[v]) {
      if (g.is_loop(e)) continue;
      if (!path_edges.empty() && e == path_edges.back()) continue;
      int w = g.other(e, v);
      if (w == s) {
        path_edges.push_back(e);
        record(path_edges, path_verts);
        path_edges.pop_back();
      } else if (w > s && !on_path[w]) {
        on_path[w] = 1;
        path_edges.push_back(e);
        path_verts.push_back(w);
        dfs(s, w);
        path_verts.pop_back();
        path_edges.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < g.vertex_count; ++s) {
    on_path[s] = 1;
    path_verts = {s};
    dfs(s, s);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end(),
            [](const DualCycle& a, const DualCycle& b) { return a.edges < b.edges; });
  return out;
}

namespace detail {

inline void order_trees(std::vector<BarbellTree>& trees) {
  std::sort(trees.begin(), trees.end(), [](const BarbellTree& a, const BarbellTree& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.coloring.v < b.coloring.v;
  });
}

}  // namespace detail

// Bells first (vertex-disjoint cycle sets), then 0/2 labels on the remaining edges
// subject to the vertex types, then the collapse-to-tree filter.
inline std::vector<BarbellTree> enumerate_barbell_trees(const DualGraph& g, std::uint64_t owner = 0) {
  if (!g.is_trivalent()) fail(ErrorCode::NotTrivalent, "dual graph is not trivalent");
  const int V = g.vertex_count, E = static_cast<int>(g.edges.size());
  const auto cycles = simple_cycles(g);
  std::vector<BarbellTree> out;

  std::vector<int> chosen;
  std::vector<int> bell_of(V, -1);
  std::vector<int> colors(E, 0);

  auto finish = [&]() {
    // Collapsed graph: one node per bell, one per other vertex carrying a 2-edge.
    const int B = static_cast<int>(chosen.size());
    std::vector<int> node(V, -1);
    int nodes = B;
    std::vector<int> deg2(V, 0);
    for (int e = 0; e < E; ++e)
      if (colors[e] == 2) {
        ++deg2[g.edges[e][0]];
        ++deg2[g.edges[e][1]];
      }
    for (int v = 0; v < V; ++v) {
      if (bell_of[v] >= 0)
        node[v] = bell_of[v];
      else if (deg2[v] > 0)
        node[v] = nodes++;
    }
    detail::UnionFind uf(nodes);
    int edges = 0;
    for (int e = 0; e < E; ++e)
      if (colors[e] == 2) {
        int a = node[g.edges[e][0]], b = node[g.edges[e][1]];
        if (a == b) return;
        uf.unite(a, b);
        ++edges;
      }
    if (edges != nodes - 1) return;
    for (int k = 0; k < nodes; ++k)
      if (uf.find(k) != uf.find(0)) return;
    BarbellTree t;
    t.colors = colors;
    t.coloring.owner = owner;
    t.coloring.v.assign(colors.begin(), colors.end());
    for (int c : colors) t.degree += c;
    t.bells = B;
    bool chain = true;
    for (int v = 0; v < V; ++v)
      if (bell_of[v] < 0 && deg2[v] != 0 && deg2[v] != 2) chain = false;
    t.simple = B == 1 || (B == 2 && chain);
    out.push_back(std::move(t));
  };

  auto assign_free = [&]() {
    std::vector<int> free_edges;
    for (int e = 0; e < E; ++e)
      if (colors[e] != 1 && !g.is_loop(e)) free_edges.push_back(e);
    // Vertex constraint: a vertex outside the bells never carries exactly one 2-edge.
    std::vector<int> remaining(V, 0), deg2(V, 0);
    for (int e : free_edges) {
      ++remaining[g.edges[e][0]];
      ++remaining[g.edges[e][1]];
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == free_edges.size()) {
        finish();
        return;
      }
      const int e = free_edges[i];
      const int a = g.edges[e][0], b = g.edges[e][1];
      for (int c : {0, 2}) {
        colors[e] = c;
        --remaining[a];
        --remaining[b];
        if (c == 2) {
          ++deg2[a];
          ++deg2[b];
        }
        bool ok = true;
        for (int v : {a, b})
          if (bell_of[v] < 0 && remaining[v] == 0 && deg2[v] == 1) ok = false;
        if (ok) rec(i + 1);
        if (c == 2) {
          --deg2[a];
          --deg2[b];
        }
        ++remaining[a];
        ++remaining[b];
      }
      colors[e] = 0;
    };
    rec(0);
  };

  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == cycles.size()) {
      if (!chosen.empty()) assign_free();
      return;
    }
    pick(i + 1);
    const auto& cyc = cycles[i];
    for (int v : cyc.vertices)
      if (bell_of[v] >= 0) return;
    const int id = static_cast<int>(chosen.size());
    chosen.push_back(static_cast<int>(i));
    for (int v : cyc.vertices) bell_of[v] = id;
    for (int e : cyc.edges) colors[e] = 1;
    pick(i + 1);
    for (int e : cyc.edges) colors[e] = 0;
    for (int v : cyc.vertices) bell_of[v] = -1;
    chosen.pop_back();
  };
  pick(0);
  detail::order_trees(out);
  return out;
}

inline std::vector<BarbellTree> enumerate_barbell_trees(const Triangulation& tri) {
  return enumerate_barbell_trees(dual_graph(tri), tri.fingerprint());
}

inline std::vector<BarbellTree> enumerate_simple(const DualGraph& g, std::uint64_t owner = 0) {
  auto all = enumerate_barbell_trees(g, owner);
  std::vector<BarbellTree> out;
  for (auto& t : all)
    if (t.simple) out.push_back(std::move(t));
  return out;
}

inline std::vector<BarbellTree> enumerate_simple(const Triangulation& tri) {
  return enumerate_simple(dual_graph(tri), tri.fingerprint());
}

namespace detail {

// Edge order in which triangles complete as early as possible, with the position at
// which each triangle becomes fully assigned.
struct EdgeSchedule {
  std::vector<int> order;
  std::vector<std::vector<int>> completes;  // completes[i] = triangles whose last edge is order[i]
};

inline EdgeSchedule edge_schedule(const Triangulation& tri) {
  EdgeSchedule s;
  std::vector<int> pos(tri.edge_count(), -1);
  for (int t = 0; t < tri.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) {
      int e = tri.side_edge(t, k);
      if (pos[e] < 0) {
        pos[e] = static_cast<int>(s.order.size());
        s.order.push_back(e);
      }
    }
  s.completes.resize(s.order.size());
  for (int t = 0; t < tri.triangle_count(); ++t) {
    int last = std::max({pos[tri.side_edge(t, 0)], pos[tri.side_edge(t, 1)], pos[tri.side_edge(t, 2)]});
    s.completes[last].push_back(t);
  }
  return s;
}

inline bool triangle_ok_on(const Triangulation& tri, const std::vector<std::int64_t>& v, int t) {
  return triangle_ok(v[tri.side_edge(t, 0)], v[tri.side_edge(t, 1)], v[tri.side_edge(t, 2)]);
}

}  // namespace detail

// Brute force over 0 <= v' <= v for a split into two nonzero admissible colorings.
inline bool is_indecomposable(const Triangulation& tri, const Coloring& c) {
  require_admissible(tri, c);
  if (c.is_zero()) fail(ErrorCode::ZeroColoring, "zero coloring");
  const auto sched = detail::edge_schedule(tri);
  std::vector<std::int64_t> a(c.size(), 0), b(c.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == sched.order.size()) {
      bool a_zero = true, b_zero = true;
      for (std::size_t e = 0; e < a.size(); ++e) {
        if (a[e]) a_zero = false;
        if (b[e]) b_zero = false;
      }
      return !a_zero && !b_zero;
    }
    const int e = sched.order[i];
    for (std::int64_t x = 0; x <= c[e]; ++x) {
      a[e] = x;
      b[e] = c[e] - x;
      bool ok = true;
      for (int t : sched.completes[i])
        if (!detail::triangle_ok_on(tri, a, t) || !detail::triangle_ok_on(tri, b, t)) {
          ok = false;
          break;
        }
      if (ok && rec(i + 1)) return true;
    }
    return false;
  };
  return !rec(0);
}

// Every admissible coloring of degree <= max_degree, in lexicographic order.
inline std::vector<Coloring> enumerate_admissible(const Triangulation& tri, std::int64_t max_degree) {
  const auto sched = detail::edge_schedule(tri);
  std::vector<std::int64_t> v(tri.edge_count(), 0);
  std::vector<Coloring> out;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t budget) {
    if (i == sched.order.size()) {
      out.push_back({tri.fingerprint(), v});
      return;
    }
    const int e = sched.order[i];
    for (std::int64_t x = 0; x <= budget; ++x) {
      v[e] = x;
      bool ok = true;
      for (int t : sched.completes[i])
        if (!detail::triangle_ok_on(tri, v, t)) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1, budget - x);
    }
    v[e] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), [](const Coloring& a, const Coloring& b) { return a.v < b.v; });
  return out;
}

// Nonnegative integer combination search, memoized, degree strictly decreasing.
inline bool monoid_generates(const Triangulation& tri, const std::vector<Coloring>& generators,
                             const Coloring& c) {
  require_admissible(tri, c);
  for (const auto& g : generators) check_bound(tri, g);
  std::map<std::vector<std::int64_t>, bool> memo;
  std::function<bool(const std::vector<std::int64_t>&)> rec = [&](const std::vector<std::int64_t>& v) {
    bool zero = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    if (zero) return true;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    bool found = false;
    for (const auto& g : generators) {
      if (g.is_zero()) continue;
      std::vector<std::int64_t> w(v.size());
      bool fits = true;
      for (std::size_t e = 0; e < v.size() && fits; ++e) {
        w[e] = v[e] - g[e];
        if (w[e] < 0) fits = false;
      }
      if (fits && rec(w)) {
        found = true;
        break;
      }
    }
    memo[v] = found;
    return found;
  };
  return rec(c.v);
}

// Exact LP feasibility: is c a nonnegative rational combination of the rays?
inline bool in_rational_cone(const std::vector<Coloring>& rays, const Coloring& c) {
  const std::size_t m = c.size();
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(rays.size()));
  std::vector<Rational> b(m);
  for (std::size_t e = 0; e < m; ++e) {
    b[e] = c[e];
    for (std::size_t j = 0; j < rays.size(); ++j) A[e][j] = rays[j][e];
  }
  return lp_feasible(std::move(A), std::move(b)).has_value();
}

}  // namespace cvkit
