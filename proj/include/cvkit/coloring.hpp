#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvkit/errors.hpp"
#include "cvkit/triangulation.hpp"

namespace cvkit {

// Edge weights in canonical edge order, tagged with the owning triangulation's fingerprint.
struct Coloring {
  std::uint64_t owner = 0;
  std::vector<std::int64_t> v;

  std::size_t size() const { return v.size(); }
  std::int64_t operator[](std::size_t i) const { return v[i]; }
  std::int64_t& operator[](std::size_t i) { return v[i]; }
  bool is_zero() const {
    for (auto x : v)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Coloring& a, const Coloring& b) { return a.v == b.v && a.owner == b.owner; }
};

inline Coloring make_coloring(const Triangulation& tri, std::vector<std::int64_t> v) {
  if (static_cast<int>(v.size()) != tri.edge_count())
    fail(ErrorCode::LengthMismatch,
         "expected " + std::to_string(tri.edge_count()) + " entries, got " + std::to_string(v.size()));
  for (auto x : v)
    if (x < 0) fail(ErrorCode::NegativeEntry, "coloring entries must be nonnegative");
  return {tri.fingerprint(), std::move(v)};
}

inline Coloring zero_coloring(const Triangulation& tri) {
  return {tri.fingerprint(), std::vector<std::int64_t>(tri.edge_count(), 0)};
}

inline void check_bound(const Triangulation& tri, const Coloring& c) {
  if (static_cast<int>(c.size()) != tri.edge_count())
    fail(ErrorCode::LengthMismatch, "coloring length does not match edge count");
  if (c.owner != tri.fingerprint())
    fail(ErrorCode::TriangulationMismatch, "coloring belongs to a different triangulation");
}

inline bool triangle_ok(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return a <= b + c && b <= a + c && c <= a + b;
}

// Parity and triangle inequalities on every triangle; a folded triangle sees its
// doubled edge on two of its sides.
inline bool is_admissible(const Triangulation& tri, const Coloring& c) {
  check_bound(tri, c);
  for (auto x : c.v)
    if (x < 0) return false;
  for (int t = 0; t < tri.triangle_count(); ++t)
    if (!triangle_ok(c[tri.side_edge(t, 0)], c[tri.side_edge(t, 1)], c[tri.side_edge(t, 2)]))
      return false;
  return true;
}

inline void require_admissible(const Triangulation& tri, const Coloring& c) {
  if (!is_admissible(tri, c)) fail(ErrorCode::NotAdmissible, "coloring is not admissible");
}

// u at corner k of triangle t, indexed 3t+k: (v_{k+1} + v_{k+2} - v_k) / 2.
inline std::vector<std::int64_t> corner_coords(const Triangulation& tri, const Coloring& c) {
  require_admissible(tri, c);
  std::vector<std::int64_t> u(tri.corner_count());
  for (int t = 0; t < tri.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) {
      std::int64_t a = c[tri.side_edge(t, k + 1)], b = c[tri.side_edge(t, k + 2)];
      u[slot_id(t, k)] = (checked_add(a, b) - c[tri.side_edge(t, k)]) / 2;
    }
  return u;
}

// Inverse of corner_coords: side s of a triangle carries u_{s+1} + u_{s+2}.
inline Coloring from_corners(const Triangulation& tri, const std::vector<std::int64_t>& u) {
  if (static_cast<int>(u.size()) != tri.corner_count())
    fail(ErrorCode::LengthMismatch, "corner vector length does not match corner count");
  for (auto x : u)
    if (x < 0) fail(ErrorCode::NegativeEntry, "corner entries must be nonnegative");
  auto side_value = [&](int slot) {
    Slot s = slot_of(slot);
    return checked_add(u[slot_id(s.tri, mod3(s.side + 1))], u[slot_id(s.tri, mod3(s.side + 2))]);
  };
  Coloring out = zero_coloring(tri);
  for (int e = 0; e < tri.edge_count(); ++e) {
    std::int64_t a = side_value(tri.edge_slots(e)[0]), b = side_value(tri.edge_slots(e)[1]);
    if (a != b)
      fail(ErrorCode::EdgeBalanceViolated, "edge " + std::to_string(e) + " sides carry " +
                                               std::to_string(a) + " and " + std::to_string(b));
    out[e] = a;
  }
  return out;
}

inline bool is_interior(const Triangulation& tri, const Coloring& c) {
  for (auto x : corner_coords(tri, c))
    if (x <= 0) return false;
  return true;
}

inline std::int64_t degree(const Triangulation& tri, const Coloring& c) {
  require_admissible(tri, c);
  std::int64_t d = 0;
  for (auto x : c.v) d = checked_add(d, x);
  return d;
}

// Entry e of the i-th vector counts the endpoints of edge e at puncture i.
inline std::vector<Coloring> peripheral_colorings(const Triangulation& tri) {
  std::vector<Coloring> out(tri.puncture_count(), zero_coloring(tri));
  for (int e = 0; e < tri.edge_count(); ++e) {
    Slot s = slot_of(tri.edge_slots(e)[0]);
    out[tri.vertex_at(s.tri, s.side + 1)][e] += 1;
    out[tri.vertex_at(s.tri, s.side + 2)][e] += 1;
  }
  return out;
}

inline Coloring add(const Triangulation& tri, const Coloring& a, const Coloring& b) {
  check_bound(tri, a);
  check_bound(tri, b);
  Coloring out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

inline Coloring scale(const Triangulation& tri, const Coloring& a, std::int64_t k) {
  check_bound(tri, a);
  Coloring out = a;
  for (auto& x : out.v) x = checked_mul(x, k);
  return out;
}

}  // namespace cvkit
