#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cvkit/errors.hpp"

namespace cvkit::git {

enum class Stability { Stable, StrictlySemistable, Unstable };

inline const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
  }
  return "";
}

using Weights = std::vector<std::int64_t>;
using Partition = std::vector<std::vector<int>>;  // blocks of 1-based indices

inline void check_weights(const Weights& a) {
  if (a.size() < 3) fail(ErrorCode::BadWeights, "need at least 3 weights");
  for (auto x : a)
    if (x <= 0) fail(ErrorCode::BadWeights, "weights must be positive");
}

inline bool is_symmetric(const Weights& a) {
  if (a.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < a.size(); i += 2)
    if (a[i] != a[i + 1]) return false;
  return true;
}

inline std::int64_t total(const Weights& a) {
  std::int64_t s = 0;
  for (auto x : a) s = checked_add(s, x);
  return s;
}

inline void check_partition(std::size_t m, const Partition& p) {
  std::vector<int> hits(m + 1, 0);
  for (const auto& block : p) {
    if (block.empty()) fail(ErrorCode::BadPartition, "empty block");
    for (int i : block) {
      if (i < 1 || i > static_cast<int>(m)) fail(ErrorCode::BadPartition, "index out of range");
      if (hits[i]++) fail(ErrorCode::BadPartition, "index repeated");
    }
  }
  for (std::size_t i = 1; i <= m; ++i)
    if (!hits[i]) fail(ErrorCode::BadPartition, "index " + std::to_string(i) + " missing");
}

// Weight of each block against its complement.
inline Stability classify_partition(const Weights& a, const Partition& p) {
  check_weights(a);
  check_partition(a.size(), p);
  const std::int64_t all = total(a);
  bool equality = false;
  for (const auto& block : p) {
    std::int64_t in = 0;
    for (int i : block) in += a[i - 1];
    const std::int64_t out = all - in;
    if (in > out) return Stability::Unstable;
    if (in == out) equality = true;
  }
  return equality ? Stability::StrictlySemistable : Stability::Stable;
}

inline bool is_nondegenerate(const Weights& a) {
  check_weights(a);
  const std::int64_t all = total(a);
  return std::all_of(a.begin(), a.end(), [&](std::int64_t x) { return x < all - x; });
}

// Unordered equal-weight splits {I1 | I2}, with index 1 always in I1.
inline std::vector<Partition> polystable_splits(const Weights& a) {
  check_weights(a);
  const std::int64_t all = total(a);
  std::vector<Partition> out;
  if (all % 2 != 0) return out;
  const int m = static_cast<int>(a.size());
  for (std::uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
    std::vector<int> first{1}, second;
    std::int64_t s = a[0];
    for (int i = 1; i < m; ++i) {
      if (mask & (1ull << (i - 1))) {
        first.push_back(i + 1);
        s += a[i];
      } else {
        second.push_back(i + 1);
      }
    }
    if (!second.empty() && 2 * s == all) out.push_back({first, second});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Set partitions of {1..m} in restricted-growth order.
inline void for_each_partition(int m, const std::function<void(const Partition&)>& visit) {
  if (m > 10) fail(ErrorCode::BadPartition, "exhaustive enumeration is capped at m <= 10");
  std::vector<int> rg(m, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == m) {
      Partition p(blocks);
      for (int k = 0; k < m; ++k) p[rg[k]].push_back(k + 1);
      visit(p);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rg[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

// For symmetric a: every partition whose blocks each miss at least one index of
// every pair {2i-1, 2i} must be semistable. Returns the number of partitions checked,
// or the first violating partition.
struct OffDiagonalCheck {
  std::size_t checked = 0;
  std::optional<Partition> violation;
};

inline OffDiagonalCheck check_off_diagonal_semistable(const Weights& a) {
  check_weights(a);
  if (!is_symmetric(a)) fail(ErrorCode::BadWeights, "weights are not symmetric");
  OffDiagonalCheck r;
  for_each_partition(static_cast<int>(a.size()), [&](const Partition& p) {
    for (const auto& block : p)
      for (std::size_t i = 0; i + 1 < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
          if ((block[i] + 1) / 2 == (block[j] + 1) / 2) return;
    ++r.checked;
    if (!r.violation && classify_partition(a, p) == Stability::Unstable) r.violation = p;
  });
  return r;
}

struct ToricPolytope {
  int i0 = 0;                      // 1-based index into b
  std::vector<int> indices;        // surviving 1-based indices of a
  std::vector<std::int64_t> bounds;  // -bounds[k] <= x_k <= bounds[k]
  // Half-spaces rows . x <= rhs, then the equation sum x = 0.
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  std::vector<std::int64_t> equation;
  bool excluded_divisor_empty = true;
};

inline ToricPolytope toric_polytope(const Weights& a) {
  check_weights(a);
  if (!is_symmetric(a)) fail(ErrorCode::ToricHypothesisFails, "weights are not symmetric");
  const int half = static_cast<int>(a.size() / 2);
  std::int64_t bsum = 0;
  for (int i = 0; i < half; ++i) bsum += a[2 * i];
  int i0 = -1;
  for (int i = 0; i < half; ++i)
    if (a[2 * i] > bsum - a[2 * i]) i0 = i;
  if (i0 < 0) fail(ErrorCode::ToricHypothesisFails, "no b_i exceeds the sum of the others");
  ToricPolytope P;
  P.i0 = i0 + 1;
  for (int k = 0; k < static_cast<int>(a.size()); ++k)
    if (k / 2 != i0) {
      P.indices.push_back(k + 1);
      P.bounds.push_back(a[k]);
    }
  const std::size_t d = P.indices.size();
  for (std::size_t k = 0; k < d; ++k)
    for (int sign : {1, -1}) {
      std::vector<std::int64_t> row(d, 0);
      row[k] = sign;
      P.rows.push_back(row);
      P.rhs.push_back(P.bounds[k]);
    }
  P.equation.assign(d, 1);
  return P;
}

}  // namespace cvkit::git
