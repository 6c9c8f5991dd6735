#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cvkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Rank over Q by Gaussian elimination.
inline int exact_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> q(r.begin(), r.end());
    m.push_back(std::move(q));
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Phase-I simplex with Bland's rule: finds x >= 0 with A x = b, or nullopt.
inline std::optional<std::vector<Rational>> lp_feasible(std::vector<std::vector<Rational>> A,
                                                        std::vector<Rational> b) {
  const int m = static_cast<int>(A.size());
  const int n = m == 0 ? 0 : static_cast<int>(A[0].size());
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& x : A[i]) x = -x;
      b[i] = -b[i];
    }
  // Tableau columns: n originals, m artificials, then rhs.
  const int W = n + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(W + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][W] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-I objective (sum of artificials).
  std::vector<Rational> cost(W + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= W; ++j)
      if (j < n || j == W) cost[j] -= T[i][j];
  while (true) {
    int enter = -1;
    for (int j = 0; j < W; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][W] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;
    Rational p = T[leave][enter];
    for (auto& x : T[leave]) x /= p;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j <= W; ++j) T[i][j] -= f * T[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (int j = 0; j <= W; ++j) cost[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[W] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][W];
  return x;
}

// Rank and nontrivial invariant factors (> 1) of an integer matrix given sparsely.
struct SmithSummary {
  int rank = 0;
  std::vector<BigInt> torsion;
};

using SparseRow = std::map<int, BigInt>;

inline SmithSummary smith_normal_form(std::vector<SparseRow> rows, int cols) {
  SmithSummary out;
  // Unit pivots first: eliminate with exact integer row operations.
  std::vector<std::set<int>> col_rows(cols);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, x] : rows[r]) col_rows[c].insert(r);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      int pc = -1;
      for (const auto& [c, x] : rows[r])
        if ((x == 1 || x == -1) && (pc < 0 || col_rows[c].size() < col_rows[pc].size())) pc = c;
      if (pc < 0) continue;
      const SparseRow pivot = rows[r];
      const BigInt pv = pivot.at(pc);
      const std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
      for (int r2 : targets) {
        if (r2 == r) continue;
        BigInt f = rows[r2].at(pc) * pv;  // pv is a unit, so pv^{-1} = pv
        for (const auto& [c, x] : pivot) {
          auto it = rows[r2].find(c);
          BigInt nv = (it == rows[r2].end() ? BigInt(0) : it->second) - f * x;
          if (nv == 0) {
            if (it != rows[r2].end()) rows[r2].erase(it);
            col_rows[c].erase(r2);
          } else if (it == rows[r2].end()) {
            rows[r2].emplace(c, nv);
            col_rows[c].insert(r2);
          } else {
            it->second = nv;
          }
        }
      }
      for (const auto& [c, x] : pivot) col_rows[c].erase(r);
      rows[r].clear();
      ++out.rank;
      progress = true;
    }
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  if (rows.empty()) return out;

  // Dense Smith normal form on what is left.
  std::vector<int> colmap;
  for (const auto& r : rows)
    for (const auto& [c, x] : r) colmap.push_back(c);
  std::sort(colmap.begin(), colmap.end());
  colmap.erase(std::unique(colmap.begin(), colmap.end()), colmap.end());
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(colmap.size());
  std::vector<std::vector<BigInt>> M(R, std::vector<BigInt>(C));
  for (int r = 0; r < R; ++r)
    for (const auto& [c, x] : rows[r])
      M[r][std::lower_bound(colmap.begin(), colmap.end(), c) - colmap.begin()] = x;

  std::vector<BigInt> diag;
  for (int t = 0; t < std::min(R, C); ++t) {
    // Smallest nonzero entry in the remaining block as pivot.
    int pr = -1, pc = -1;
    for (int r = t; r < R; ++r)
      for (int c = t; c < C; ++c)
        if (M[r][c] != 0 && (pr < 0 || abs(M[r][c]) < abs(M[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(M[t], M[pr]);
    for (int r = 0; r < R; ++r) std::swap(M[r][t], M[r][pc]);
    while (true) {
      bool clean = true;
      for (int r = t + 1; r < R; ++r) {
        if (M[r][t] == 0) continue;
        BigInt q = M[r][t] / M[t][t];
        for (int c = t; c < C; ++c) M[r][c] -= q * M[t][c];
        if (M[r][t] != 0) {
          clean = false;
          std::swap(M[t], M[r]);
        }
      }
      for (int c = t + 1; c < C; ++c) {
        if (M[t][c] == 0) continue;
        BigInt q = M[t][c] / M[t][t];
        for (int r = t; r < R; ++r) M[r][c] -= q * M[r][t];
        if (M[t][c] != 0) {
          clean = false;
          for (int r = 0; r < R; ++r) std::swap(M[r][t], M[r][c]);
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the rest of the block.
      int bad_r = -1;
      for (int r = t + 1; r < R && bad_r < 0; ++r)
        for (int c = t + 1; c < C; ++c)
          if (M[r][c] % M[t][t] != 0) {
            bad_r = r;
            break;
          }
      if (bad_r < 0) break;
      for (int c = t; c < C; ++c) M[t][c] += M[bad_r][c];
    }
    diag.push_back(abs(M[t][t]));
  }
  for (const auto& d : diag) {
    ++out.rank;
    if (d != 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace cvkit
