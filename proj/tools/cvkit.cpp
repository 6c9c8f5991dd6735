#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvkit/barbell.hpp"
#include "cvkit/export.hpp"
#include "cvkit/fixtures.hpp"
#include "cvkit/git.hpp"
#include "cvkit/io.hpp"
#include "cvkit/polytope.hpp"
#include "cvkit/sweeps.hpp"

using namespace cvkit;
using io::json;

namespace {

enum Exit { kOk = 0, kValidation = 2, kCertificate = 3, kIllegal = 4 };

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

bool g_timings = false;

int emit(const std::string& command, json inputs, json outputs, const Timer& timer, int code = kOk) {
  json report{{"command", command}, {"inputs", std::move(inputs)}, {"outputs", std::move(outputs)}};
  if (g_timings) report["timings"] = {{"total_seconds", timer.seconds()}, {"threads", thread_count()}};
  std::cout << io::canonical(report);
  return code;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

int cmd_generators(const std::string& target, int oracle_depth) {
  Timer timer;
  const auto tri = io::load_triangulation(target);
  const auto gens = enumerate_barbell_trees(tri);
  json out = io::generator_report(tri, gens);
  json inputs{{"triangulation", target}};
  int code = kOk;
  if (oracle_depth > 0) {
    inputs["oracle_depth"] = oracle_depth;
    std::set<std::vector<std::int64_t>> listed;
    for (const auto& g : gens) listed.insert(g.coloring.v);
    std::size_t checked = 0, indecomposable = 0, mismatches = 0;
    for (const auto& c : enumerate_admissible(tri, oracle_depth)) {
      if (c.is_zero()) continue;
      ++checked;
      const bool ind = is_indecomposable(tri, c);
      indecomposable += ind;
      if (ind != (listed.count(c.v) > 0)) ++mismatches;
    }
    out["oracle"] = {{"depth", oracle_depth},
                     {"checked", checked},
                     {"indecomposable", indecomposable},
                     {"mismatches", mismatches}};
    if (mismatches) code = kCertificate;
  }
  return emit("generators", inputs, out, timer, code);
}

int cmd_polytope(const std::string& target, bool relative, int check_sphere, const std::string& format,
                 const std::string& output) {
  Timer timer;
  const auto tri = io::load_triangulation(target);
  const auto pc = relative ? relative_complex(tri) : moment_polytope(tri);
  if (format == "off") {
    write_text(output, io::to_off(pc));
    return kOk;
  }
  if (format == "svg") {
    write_text(output, io::to_svg(pc));
    return kOk;
  }
  json out{{"triangulation", io::tag(tri)}, {"complex", io::to_json(pc)}, {"dimension", pc.dimension()}};
  out["homology"] = io::to_json(homology(pc));
  json inputs{{"triangulation", target}, {"relative", relative}};
  int code = kOk;
  if (check_sphere >= 0) {
    inputs["check_sphere"] = check_sphere;
    const auto cert = sphere_certificate(pc, check_sphere);
    out["certificate"] = io::to_json(cert);
    if (!cert.granted) code = kCertificate;
  }
  return emit("polytope", inputs, out, timer, code);
}

std::vector<std::string> matching_fixtures(const Triangulation& tri) {
  std::vector<std::string> names;
  for (const std::string n : {"ex11", "n4ex", "n4ex2", "sphere3"})
    if (isomorphic(tri, fixtures::by_name(n))) names.push_back(n);
  return names;
}

int cmd_mutate(const std::string& target, int edge, const std::string& coloring, bool verify_betti) {
  Timer timer;
  const auto tri = io::load_triangulation(target);
  if (edge < 0 || edge >= tri.edge_count()) fail(ErrorCode::FlipIllegal, "edge out of range");
  std::vector<std::pair<std::string, Coloring>> inputs_c;
  if (!coloring.empty()) {
    inputs_c.emplace_back("input", make_coloring(tri, io::parse_int_list(coloring)));
  } else {
    const auto per = peripheral_colorings(tri);
    for (std::size_t i = 0; i < per.size(); ++i) inputs_c.emplace_back("a" + std::to_string(i + 1), per[i]);
  }
  const Triangulation flipped = flip(tri, edge);
  json transfers = json::array();
  bool involutive = true;
  for (const auto& [label, c] : inputs_c) {
    const auto fwd = mutation_transfer(tri, edge, c);
    const auto back = mutation_transfer(fwd.flipped, edge, fwd.coloring);
    const bool inv = back.coloring.v == c.v;
    involutive = involutive && inv;
    transfers.push_back({{"label", label},
                         {"before", c.v},
                         {"after", fwd.coloring.v},
                         {"degree_before", degree(tri, c)},
                         {"degree_after", degree(fwd.flipped, fwd.coloring)},
                         {"involutive", inv}});
  }
  json out{{"flipped", io::to_json(flipped)},
           {"isomorphic_to", matching_fixtures(flipped)},
           {"transfers", transfers},
           {"involutive", involutive}};
  json inputs{{"triangulation", target}, {"edge", edge}};
  if (!coloring.empty()) inputs["coloring"] = coloring;
  int code = involutive ? kOk : kCertificate;
  if (verify_betti) {
    inputs["verify_betti"] = true;
    const auto b0 = homology(relative_complex(tri)).betti;
    const auto b1 = homology(relative_complex(flipped)).betti;
    out["betti_before"] = b0;
    out["betti_after"] = b1;
    out["betti_equal"] = b0 == b1;
    if (b0 != b1) code = kCertificate;
  }
  return emit("mutate", inputs, out, timer, code);
}

// "12|3|4" for single-digit indices, "1,2|3|4" otherwise.
git::Partition parse_partition(const std::string& s) {
  git::Partition p;
  std::stringstream ss(s);
  std::string block;
  const bool commas = s.find(',') != std::string::npos;
  while (std::getline(ss, block, '|')) {
    std::vector<int> b;
    if (commas) {
      for (auto x : io::parse_int_list(block)) b.push_back(static_cast<int>(x));
    } else {
      for (char ch : block) {
        if (ch < '1' || ch > '9') fail(ErrorCode::BadPartition, "bad index character in '" + block + "'");
        b.push_back(ch - '0');
      }
    }
    std::sort(b.begin(), b.end());
    p.push_back(b);
  }
  return p;
}

int cmd_git(const std::string& weights, const std::string& partition, bool toric, bool off_diagonal) {
  Timer timer;
  const auto a = io::parse_int_list(weights);
  git::check_weights(a);
  json out{{"weights", a},
           {"total", git::total(a)},
           {"symmetric", git::is_symmetric(a)},
           {"nondegenerate", git::is_nondegenerate(a)},
           {"polystable_splits", git::polystable_splits(a)}};
  json inputs{{"weights", weights}};
  if (!partition.empty()) {
    inputs["partition"] = partition;
    const auto p = parse_partition(partition);
    out["partition"] = p;
    out["stability"] = git::stability_name(git::classify_partition(a, p));
  }
  if (toric) {
    inputs["toric"] = true;
    out["toric"] = io::to_json(git::toric_polytope(a));
  }
  int code = kOk;
  if (off_diagonal) {
    inputs["off_diagonal"] = true;
    const auto chk = git::check_off_diagonal_semistable(a);
    out["off_diagonal"] = {{"checked", chk.checked}, {"violation", chk.violation ? json(*chk.violation) : json()}};
    if (chk.violation) code = kCertificate;
  }
  return emit("git classify", inputs, out, timer, code);
}

int cmd_param(const std::string& mode, std::size_t samples, std::uint64_t seed, const std::string& backend) {
  Timer timer;
  const auto b = quadric::parse_backend(backend);
  const auto rep = mode == "fricke" ? quadric::fricke_check(samples, seed, b) : quadric::param_check(samples, seed, b);
  json inputs{{"samples", samples}, {"seed", seed}, {"backend", backend}};
  return emit("param " + mode, inputs, io::to_json(rep), timer, rep.failures() ? kCertificate : kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generators, polytope complexes, mutations, GIT stability and trace-parameter checks"};
  app.require_subcommand(1);
  app.add_flag("--timings", g_timings, "Include wall-clock timings in the report");

  std::string target, format = "json", output, coloring, weights, partition, backend = "exact";
  int oracle_depth = 0, check_sphere = -1, edge = -1;
  bool relative = false, verify_betti = false, toric = false, off_diagonal = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;

  auto* gen = app.add_subcommand("generators", "Barbell-tree generators of the coloring monoid");
  gen->add_option("triangulation", target, "Fixture name or JSON file")->required();
  gen->add_option("--oracle-depth", oracle_depth, "Compare against brute-force indecomposability up to this degree");

  auto* poly = app.add_subcommand("polytope", "Moment polytope or relative boundary complex");
  poly->add_option("triangulation", target, "Fixture name or JSON file")->required();
  poly->add_flag("--relative", relative, "Use the relative boundary complex");
  poly->add_option("--check-sphere", check_sphere, "Run the sphere certificate in this dimension");
  poly->add_option("--emit", format, "Output format")->check(CLI::IsMember({"json", "off", "svg"}));
  poly->add_option("--output", output, "Write OFF/SVG here instead of stdout");

  auto* mut = app.add_subcommand("mutate", "Flip an edge and transfer colorings");
  mut->add_option("triangulation", target, "Fixture name or JSON file")->required();
  mut->add_option("--edge", edge, "Edge index in canonical order")->required();
  mut->add_option("--coloring", coloring, "Comma-separated coloring; defaults to the peripheral colorings");
  mut->add_flag("--verify-betti", verify_betti, "Compare relative Betti numbers across the flip");

  auto* git = app.add_subcommand("git", "Weighted point configurations on the line");
  git->require_subcommand(1);
  auto* cls = git->add_subcommand("classify", "Stability of a partition, splits and toric data");
  cls->add_option("--weights", weights, "Comma-separated positive weights")->required();
  cls->add_option("--partition", partition, "Blocks separated by '|'");
  cls->add_flag("--toric", toric, "Report the toric polytope");
  cls->add_flag("--off-diagonal", off_diagonal, "Exhaust partitions with no block containing a pair");

  auto* param = app.add_subcommand("param", "Property sweeps of the trace parametrization");
  param->require_subcommand(1);
  for (const char* mode : {"check", "fricke"}) {
    auto* sub = param->add_subcommand(mode, mode == std::string("check") ? "Matrix family checks" : "Fricke relation");
    sub->add_option("--samples", samples, "Number of samples");
    sub->add_option("--seed", seed, "Generator seed");
    sub->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*gen) return cmd_generators(target, oracle_depth);
    if (*poly) return cmd_polytope(target, relative, check_sphere, format, output);
    if (*mut) return cmd_mutate(target, edge, coloring, verify_betti);
    if (*cls) return cmd_git(weights, partition, toric, off_diagonal);
    for (auto* sub : param->get_subcommands()) return cmd_param(sub->get_name(), samples, seed, backend);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_illegal_operation(e.code()) ? kIllegal : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}
