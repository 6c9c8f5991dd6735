#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cvkit/barbell.hpp"
#include "cvkit/coloring.hpp"
#include "cvkit/errors.hpp"
#include "cvkit/fixtures.hpp"
#include "cvkit/git.hpp"
#include "cvkit/polytope.hpp"
#include "cvkit/sweeps.hpp"
#include "cvkit/tracer.hpp"
#include "cvkit/triangulation.hpp"

namespace cvkit::io {

using json = nlohmann::json;

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

// {"triangles": N, "gluing": [[[t, s], [t', s']], ...]}
inline Triangulation triangulation_from_json(const json& j, const std::string& name = "") {
  try {
    const int n = j.at("triangles").get<int>();
    std::vector<std::pair<Slot, Slot>> gluing;
    for (const auto& pair : j.at("gluing")) {
      if (pair.size() != 2) fail(ErrorCode::ParseError, "each gluing entry needs two slots");
      auto slot = [](const json& s) {
        if (s.size() != 2) fail(ErrorCode::ParseError, "a slot is [triangle, side]");
        return Slot{s[0].get<int>(), s[1].get<int>()};
      };
      gluing.emplace_back(slot(pair[0]), slot(pair[1]));
    }
    return build(n, gluing, j.value("name", name));
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

inline json to_json(const Triangulation& tri) {
  json gl = json::array();
  for (int e = 0; e < tri.edge_count(); ++e) {
    const auto s = tri.edge_slots(e);
    const Slot a = slot_of(s[0]), b = slot_of(s[1]);
    gl.push_back({{a.tri, a.side}, {b.tri, b.side}});
  }
  return {{"triangles", tri.triangle_count()},
          {"gluing", gl},
          {"genus", tri.genus()},
          {"punctures", tri.puncture_count()},
          {"edges", tri.edge_count()},
          {"fingerprint", hex64(tri.fingerprint())}};
}

// A file path if one exists, otherwise a built-in fixture name.
inline Triangulation load_triangulation(const std::string& target) {
  if (std::filesystem::is_regular_file(target)) {
    std::ifstream in(target);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      fail(ErrorCode::ParseError, e.what());
    }
    return triangulation_from_json(j, std::filesystem::path(target).stem().string());
  }
  return fixtures::by_name(target);
}

inline std::string tag(const Triangulation& tri) {
  return tri.name().empty() ? hex64(tri.fingerprint()) : tri.name();
}

inline json to_json(const Triangulation& tri, const Coloring& c) {
  check_bound(tri, c);
  return {{"triangulation", tag(tri)}, {"v", c.v}};
}

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "not an integer: '" + item + "'");
    }
  }
  return out;
}

inline json generator_report(const Triangulation& tri, const std::vector<BarbellTree>& gens) {
  json list = json::array();
  std::vector<std::int64_t> degrees;
  int simple = 0;
  for (const auto& g : gens) {
    list.push_back({{"coloring", g.coloring.v}, {"degree", g.degree}, {"simple", g.simple}, {"bells", g.bells}});
    degrees.push_back(g.degree);
    simple += g.simple;
  }
  return {{"triangulation", tag(tri)},
          {"count", gens.size()},
          {"simple_count", simple},
          {"degrees", degrees},
          {"generators", list}};
}

inline json to_json(const std::vector<TracedComponent>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    json item{{"coloring", c.coloring.v}, {"length", c.strand.size()}};
    item["peripheral"] = c.puncture ? json(*c.puncture) : json(nullptr);
    out.push_back(item);
  }
  return out;
}

inline json to_json(const PolytopeComplex& pc) {
  json cells = json::array();
  for (const auto& c : pc.cells) cells.push_back({{"dim", c.dim}, {"vertices", c.vertices}, {"boundary", c.facets}});
  return {{"cells", cells}, {"f_vector", f_vector(pc)}, {"vertex_labels", pc.vertex_labels}};
}

inline std::vector<std::string> big_strings(const std::vector<BigInt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

inline json to_json(const HomologyReport& h) {
  json tors = json::array();
  for (const auto& t : h.torsion) tors.push_back(big_strings(t));
  return {{"betti", h.betti}, {"torsion", tors}, {"euler", h.euler}};
}

inline json to_json(const SphereCertificate& c) {
  return {{"dimension", c.d},
          {"connected", c.connected},
          {"pseudomanifold", c.pseudomanifold},
          {"homology_sphere", c.homology_sphere},
          {"granted", c.granted},
          {"betti", c.betti},
          {"note", c.note}};
}

inline json to_json(const git::Partition& p) { return p; }

inline json to_json(const git::ToricPolytope& P) {
  return {{"i0", P.i0},
          {"indices", P.indices},
          {"bounds", P.bounds},
          {"rows", P.rows},
          {"rhs", P.rhs},
          {"equation", P.equation},
          {"equation_rhs", 0},
          {"excluded_divisor_empty", P.excluded_divisor_empty}};
}

inline json to_json(const quadric::SweepReport& r) {
  json checks = json::object();
  for (const auto& [name, t] : r.checks)
    checks[name] = {{"count", t.count},
                    {"failures", t.failures},
                    {"max_residual", t.max_residual},
                    {"tolerance", t.tolerance}};
  return {{"kind", r.kind},
          {"backend", quadric::backend_name(r.backend)},
          {"seed", r.seed},
          {"samples", r.samples},
          {"failures", r.failures()},
          {"checks", checks}};
}

// Sorted keys (nlohmann objects are ordered maps) and two-space indentation.
inline std::string canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cvkit::io
