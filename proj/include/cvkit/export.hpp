#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cvkit/polytope.hpp"

namespace cvkit::io {

// Deterministic spring embedding of the 1-skeleton. Display only: positions carry no metric meaning.
inline std::vector<std::array<double, 3>> spring_embedding(const PolytopeComplex& pc, int dim, int iterations = 400) {
  std::map<int, int> vid;
  for (const auto& c : pc.cells)
    for (int v : c.vertices) vid.emplace(v, 0);
  int k = 0;
  for (auto& [v, i] : vid) i = k++;
  const int n = k;
  std::vector<std::array<double, 3>> pos(n, {0, 0, 0});
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    if (dim == 2) {
      pos[i] = {std::cos(2 * std::numbers::pi * i / n), std::sin(2 * std::numbers::pi * i / n), 0};
    } else {
      double z = n == 1 ? 0 : 1 - 2.0 * i / (n - 1);
      double r = std::sqrt(std::max(0.0, 1 - z * z));
      pos[i] = {r * std::cos(golden * i), r * std::sin(golden * i), z};
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : pc.cells)
    if (c.dim == 1 && c.vertices.size() == 2) edges.emplace_back(vid[c.vertices[0]], vid[c.vertices[1]]);
  const double ideal = 1.0 / std::sqrt(std::max(1, n));
  for (int it = 0; it < iterations; ++it) {
    const double temp = 0.1 * (1.0 - static_cast<double>(it) / iterations);
    std::vector<std::array<double, 3>> disp(n, {0, 0, 0});
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::array<double, 3> d;
        double len = 1e-9;
        for (int x = 0; x < 3; ++x) {
          d[x] = pos[a][x] - pos[b][x];
          len += d[x] * d[x];
        }
        len = std::sqrt(len);
        const double f = ideal * ideal / len;
        for (int x = 0; x < 3; ++x) {
          disp[a][x] += d[x] / len * f;
          disp[b][x] -= d[x] / len * f;
        }
      }
    for (auto [a, b] : edges) {
      std::array<double, 3> d;
      double len = 1e-9;
      for (int x = 0; x < 3; ++x) {
        d[x] = pos[a][x] - pos[b][x];
        len += d[x] * d[x];
      }
      len = std::sqrt(len);
      const double f = len * len / ideal;
      for (int x = 0; x < 3; ++x) {
        disp[a][x] -= d[x] / len * f;
        disp[b][x] += d[x] / len * f;
      }
    }
    for (int a = 0; a < n; ++a) {
      double len = 1e-9;
      for (int x = 0; x < dim; ++x) len += disp[a][x] * disp[a][x];
      len = std::sqrt(len);
      for (int x = 0; x < dim; ++x) pos[a][x] += disp[a][x] / len * std::min(len, temp);
    }
  }
  return pos;
}

// Cyclic vertex order of a 2-cell from its boundary edges.
inline std::vector<int> polygon_cycle(const PolytopeComplex& pc, const Cell& face) {
  std::map<int, std::vector<int>> adj;
  for (int f : face.facets) {
    const auto& e = pc.cells[f];
    if (e.vertices.size() != 2) return face.vertices;
    adj[e.vertices[0]].push_back(e.vertices[1]);
    adj[e.vertices[1]].push_back(e.vertices[0]);
  }
  if (adj.empty()) return face.vertices;
  std::vector<int> cyc{adj.begin()->first};
  int prev = -1;
  while (cyc.size() < adj.size()) {
    const auto& nb = adj[cyc.back()];
    int next = nb[0] != prev ? nb[0] : nb[1];
    prev = cyc.back();
    cyc.push_back(next);
  }
  return cyc;
}

inline std::string to_off(const PolytopeComplex& pc) {
  const auto pos = spring_embedding(pc, 3);
  std::map<int, int> vid;
  for (const auto& c : pc.cells)
    for (int v : c.vertices) vid.emplace(v, 0);
  int k = 0;
  for (auto& [v, i] : vid) i = k++;
  std::vector<std::vector<int>> faces;
  for (const auto& c : pc.cells)
    if (c.dim == 2) {
      std::vector<int> f;
      for (int v : polygon_cycle(pc, c)) f.push_back(vid[v]);
      faces.push_back(f);
    }
  std::ostringstream out;
  out << "OFF\n# non-metric spring embedding of the 2-skeleton\n";
  out << pos.size() << " " << faces.size() << " 0\n";
  char buf[96];
  for (const auto& p : pos) {
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", p[0], p[1], p[2]);
    out << buf;
  }
  for (const auto& f : faces) {
    out << f.size();
    for (int v : f) out << " " << v;
    out << "\n";
  }
  return out.str();
}

inline std::string to_svg(const PolytopeComplex& pc) {
  const auto pos = spring_embedding(pc, 2);
  std::map<int, int> vid;
  for (const auto& c : pc.cells)
    for (int v : c.vertices) vid.emplace(v, 0);
  int k = 0;
  for (auto& [v, i] : vid) i = k++;
  double lo[2] = {1e300, 1e300}, hi[2] = {-1e300, -1e300};
  for (const auto& p : pos)
    for (int x = 0; x < 2; ++x) {
      lo[x] = std::min(lo[x], p[x]);
      hi[x] = std::max(hi[x], p[x]);
    }
  auto px = [&](int i, int x) {
    double span = std::max(1e-9, hi[x] - lo[x]);
    return 40.0 + 320.0 * (pos[i][x] - lo[x]) / span;
  };
  std::ostringstream out;
  char buf[160];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  out << "<title>non-metric spring embedding</title>\n";
  for (const auto& c : pc.cells)
    if (c.dim == 2) {
      out << "<polygon fill=\"#dde8f5\" stroke=\"none\" points=\"";
      for (int v : polygon_cycle(pc, c)) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(vid[v], 0), px(vid[v], 1));
        out << buf;
      }
      out << "\"/>\n";
    }
  for (const auto& c : pc.cells)
    if (c.dim == 1 && c.vertices.size() == 2) {
      int a = vid[c.vertices[0]], b = vid[c.vertices[1]];
      std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                    px(a, 0), px(a, 1), px(b, 0), px(b, 1));
      out << buf;
    }
  for (const auto& [v, i] : vid) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\"/>\n", px(i, 0), px(i, 1));
    out << buf;
    std::string label = v < static_cast<int>(pc.vertex_labels.size()) ? pc.vertex_labels[v] : std::to_string(v);
    std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"10\">", px(i, 0) + 6, px(i, 1) - 6);
    out << buf << label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cvkit::io
