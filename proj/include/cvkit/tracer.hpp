#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cvkit/coloring.hpp"

namespace cvkit {

struct Crossing {
  int edge = 0;
  std::int64_t index = 0;  // 1-based, counted from the edge's origin vertex
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct TracedComponent {
  std::vector<Crossing> strand;
  Coloring coloring;
  std::optional<int> puncture;  // set when the component is peripheral
};

namespace detail {

// Point j on edge e counted from the origin vertex (vertex s+1 of the lower slot).
// On the higher slot the origin is that triangle's vertex s'+2.
inline std::int64_t position_on_edge(const Triangulation& tri, const Coloring& c, int slot,
                                     std::int64_t from_start) {
  int e = tri.edge_of(slot);
  if (tri.edge_slots(e)[0] == slot) return from_start;
  return c[e] + 1 - from_start;
}

}  // namespace detail

inline std::vector<TracedComponent> trace_components(const Triangulation& tri, const Coloring& c) {
  const auto u = corner_coords(tri, c);
  std::vector<std::int64_t> offset(tri.edge_count() + 1, 0);
  for (int e = 0; e < tri.edge_count(); ++e) offset[e + 1] = checked_add(offset[e], c[e]);
  const std::int64_t points = offset.back();
  auto node = [&](int slot, std::int64_t from_start) {
    int e = tri.edge_of(slot);
    return offset[e] + detail::position_on_edge(tri, c, slot, from_start) - 1;
  };

  // Each point gets two arc ends, one per incident side.
  std::vector<std::array<std::pair<std::int64_t, int>, 2>> ends(points);
  std::vector<int> filled(points, 0);
  std::vector<std::array<std::int64_t, 2>> arcs;
  for (int t = 0; t < tri.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) {
      const int out_slot = slot_id(t, mod3(k + 2));  // starts at vertex k
      const int in_slot = slot_id(t, mod3(k + 1));   // ends at vertex k
      const std::int64_t v_in = c[tri.edge_of(in_slot)];
      for (std::int64_t j = 1; j <= u[slot_id(t, k)]; ++j) {
        std::int64_t p = node(out_slot, j);
        std::int64_t q = node(in_slot, v_in + 1 - j);
        int a = static_cast<int>(arcs.size());
        arcs.push_back({p, q});
        ends[p][filled[p]++] = {q, a};
        ends[q][filled[q]++] = {p, a};
      }
    }

  for (std::int64_t p = 0; p < points; ++p)
    if (filled[p] != 2) fail(ErrorCode::NotAdmissible, "unmatched strand end");

  std::vector<std::int64_t> edge_of_node(points);
  for (int e = 0; e < tri.edge_count(); ++e)
    for (std::int64_t i = offset[e]; i < offset[e + 1]; ++i) edge_of_node[i] = e;

  const auto periph = peripheral_colorings(tri);
  std::vector<char> seen(points, 0);
  std::vector<TracedComponent> out;
  for (std::int64_t start = 0; start < points; ++start) {
    if (seen[start]) continue;
    TracedComponent comp;
    comp.coloring = zero_coloring(tri);
    std::int64_t cur = start;
    int via = 0;  // arc end slot used to leave cur
    while (true) {
      if (!seen[cur]) {
        seen[cur] = 1;
        int e = static_cast<int>(edge_of_node[cur]);
        comp.strand.push_back({e, cur - offset[e] + 1});
        comp.coloring[e] += 1;
      }
      auto [next, arc] = ends[cur][via];
      // Arrive at next through arc; leave through its other end.
      int arrive = next == cur ? 1 - via : (ends[next][0].second == arc ? 0 : 1);
      via = 1 - arrive;
      cur = next;
      if (cur == start && via == 0) break;
    }
    for (int i = 0; i < static_cast<int>(periph.size()); ++i)
      if (periph[i].v == comp.coloring.v) {
        comp.puncture = i;
        break;
      }
    out.push_back(std::move(comp));
  }
  return out;
}

struct StripResult {
  Coloring reduced;
  std::vector<std::int64_t> counts;  // peripheral multiplicity per puncture
};

inline StripResult strip_peripheral(const Triangulation& tri, const Coloring& c) {
  require_admissible(tri, c);
  StripResult r{c, std::vector<std::int64_t>(tri.puncture_count(), 0)};
  while (true) {
    bool removed = false;
    for (const auto& comp : trace_components(tri, r.reduced)) {
      if (!comp.puncture) continue;
      removed = true;
      r.counts[*comp.puncture] += 1;
      for (std::size_t e = 0; e < r.reduced.size(); ++e) r.reduced[e] -= comp.coloring[e];
    }
    if (!removed) break;
  }
  return r;
}

inline std::int64_t relative_degree(const Triangulation& tri, const Coloring& c) {
  return degree(tri, strip_peripheral(tri, c).reduced);
}

// Coloring of the geometric sum m # m'; the sign (-1)^{i(m,m')} is not computed.
inline Coloring geometric_sum(const Triangulation& tri, const Coloring& a, const Coloring& b) {
  require_admissible(tri, a);
  require_admissible(tri, b);
  return add(tri, a, b);
}

}  // namespace cvkit
