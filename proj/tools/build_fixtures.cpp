// Rebuilds the offline witness fixtures in fixtures/hog from constructions
// and generator searches, then rewrites the MANIFEST.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>

#include "folkman/folkman.hpp"

using namespace folkman;
namespace fs = std::filesystem;

namespace {

struct Recipe {
  int id;
  std::string note;
  bool long_running;
  std::function<Graph(int workers)> build;
};

Graph first_polycirculant_witness(const std::string& task, const std::string& spec, int workers) {
  PolyOptions opt;
  opt.workers = workers;
  const ArrowSpec s = ArrowSpec::parse(spec);
  for (const auto& g : generate_semipolycirculant(GenTask::parse(task), opt).graphs)
    if (arrows(g, s).arrows()) return g;
  throw std::runtime_error("no witness for " + task);
}

// Fewest-edge (3,3)^e-arrowing J6-free graph reachable by deleting edges
// from cones of maximal J5-free graphs on 10 vertices.
Graph edge_minimal_j6_witness(int workers) {
  GenFilter f{10, Pattern::jgraph(5)};
  f.maximal_only = true;
  GenOptions opt;
  opt.workers = workers;
  std::set<std::string> layer;
  for (const auto& g : all_free_graphs(f, opt))
    if (arrows_edge_33(cone(g)).arrows()) layer.insert(canonical_string(cone(g)));
  if (layer.empty()) throw std::runtime_error("no arrowing cone found");
  std::set<std::string> last = layer;
  while (!layer.empty()) {
    last = layer;
    std::set<std::string> next;
    for (const auto& s : layer) {
      Graph g = decode_graph6(s);
      for (const auto& e : g.edges())
        if (Graph h = g.without_edge(e.u, e.v); arrows_edge_33(h).arrows()) next.insert(canonical_string(h));
    }
    layer = std::move(next);
  }
  return decode_graph6(*last.begin());
}

std::vector<Recipe> recipes() {
  return {
      {45703, "complement of the Petersen graph", false, [](int) { return named::petersen().complement(); }},
      {21154, "circulant(10,{2,3,5})", false, [](int) { return circulant(10, {2, 3, 5}); }},
      {51287, "three K4 glued at a vertex plus two apexes", false, [](int) { return named::folkman_33_j5_11(); }},
      {51285, "K5 joined to the Petersen complement by disjointness", false,
       [](int) { return named::folkman_333_j6_15(); }},
      {51177, "polarity graph over GF(8)", false, [](int) { return polarity_graph_64(); }},
      {51277, "semi-polycirculant [4,4,4] K5-free arrowing (2,3,3)", false,
       [](int w) { return first_polycirculant_witness("blocks=4,4,4 forbid=K5", "2,3,3", w); }},
      {51178, "semi-polycirculant [4,4,4,2,2,1] C4-free arrowing (2,3)", false,
       [](int w) { return first_polycirculant_witness("blocks=4,4,4,2,2,1 forbid=C4", "2,3", w); }},
      {51278, "semi-polycirculant [6,6,6] J5-free alpha<=4 arrowing (2,3,3)", false,
       [](int w) { return first_polycirculant_witness("blocks=6,6,6 forbid=J5 alpha<=4", "2,3,3", w); }},
      {51286, "semi-polycirculant [9,9,3] K5-free alpha<=4 arrowing (3,3,3)", false,
       [](int w) { return first_polycirculant_witness("blocks=9,9,3 forbid=K5 alpha<=4", "3,3,3", w); }},
      {51288, "edge-minimal (3,3)^e J6-free graph on 11 vertices", false, edge_minimal_j6_witness},
      {51330, "semi-polycirculant [15,15] K6-free alpha<=5 arrowing (3,3,3,3)", true,
       [](int w) { return first_polycirculant_witness("blocks=15,15 forbid=K6 alpha<=5", "3,3,3,3", w); }},
      {53087, "semi-polycirculant [16,16] K5-free alpha<=5 arrowing (2,3,3,3)", true,
       [](int w) { return first_polycirculant_witness("blocks=16,16 forbid=K5 alpha<=5", "2,3,3,3", w); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rebuild offline HoG witness fixtures"};
  std::string out = hog::fixture_directory().string();
  bool skip_long = false;
  std::vector<int> only;
  int workers = 1;
  app.add_option("--out", out, "fixture directory");
  app.add_flag("--skip-long", skip_long, "skip searches that take several minutes");
  app.add_option("--only", only, "rebuild only these ids");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  fs::create_directories(out);
  auto manifest = hog::read_manifest(out);
  for (const auto& r : recipes()) {
    if (!only.empty() && std::find(only.begin(), only.end(), r.id) == only.end()) continue;
    if (skip_long && r.long_running) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Graph g = r.build(workers);
    const std::string line = encode_graph6(g);
    std::ofstream(fs::path(out) / (std::to_string(r.id) + ".g6")) << line << '\n';
    manifest[r.id] = {r.id, g.order(), hog::checksum(line), "reconstructed: " + r.note};
    std::cerr << r.id << " n=" << g.order() << " "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
  }
  std::ofstream m(fs::path(out) / "MANIFEST");
  m << "# id order fnv1a64(graph6) note\n";
  for (const auto& [id, rec] : manifest) m << id << ' ' << rec.order << ' ' << rec.checksum << ' ' << rec.note << '\n';
  m << "# not reproducible offline:";
  for (int id : hog::referenced_ids())
    if (!manifest.contains(id)) m << ' ' << id;
  m << '\n';
  return 0;
}
