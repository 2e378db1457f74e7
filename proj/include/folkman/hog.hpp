#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/graph.hpp"
#include "folkman/graph6.hpp"

namespace folkman::hog {

/// What a witness graph is known to satisfy: an H-free graph of the given
/// order arrowing the targets ("Fv"/"Fe" for vertex or edge colourings).
struct Claim {
  int id;
  std::string kind;
  std::string targets;
  std::string avoided;
  int order;
};

inline const std::vector<Claim>& claims() {
  static const std::vector<Claim> c{
      {51170, "Fv", "2,2,3", "J4", 36},    {51236, "Fv", "3,3", "J4", 45},     {51278, "Fv", "2,3,3", "J5", 18},
      {54024, "Fv", "3,3,3", "K4", 51},    {53117, "Fv", "3,3,3", "J5", 32},   {51286, "Fv", "3,3,3", "K5", 21},
      {51285, "Fv", "3,3,3", "J6", 15},    {53087, "Fv", "2,3,3,3", "K5", 32}, {51330, "Fv", "3,3,3,3", "K6", 30},
      {45703, "Fv", "2,2,3", "J5", 10},    {21154, "Fv", "2,2,3", "J5", 10},   {51287, "Fv", "3,3", "J5", 11},
      {51277, "Fv", "2,3,3", "K5", 12},    {51178, "Fv", "2,3", "C4", 17},     {51288, "Fe", "3,3", "J6", 11},
      {51171, "Fe", "3,3", "J5", 43},      {51177, "Fv", "3,3", "C4", 63},
  };
  return c;
}

/// House of Graphs identifiers of the witness graphs.
inline const std::vector<int>& referenced_ids() {
  static const std::vector<int> ids = [] {
    std::vector<int> v;
    for (const auto& c : claims()) v.push_back(c.id);
    return v;
  }();
  return ids;
}

class UnknownId : public std::runtime_error {
 public:
  explicit UnknownId(int id) : std::runtime_error("unknown HoG id " + std::to_string(id)), id_(id) {}
  int id() const { return id_; }

 private:
  int id_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string checksum(std::string_view graph6) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(graph6)));
  return buf;
}

/// FOLKMAN_FIXTURE_DIR from the environment, else the build-time default.
inline std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("FOLKMAN_FIXTURE_DIR"); env && *env) return env;
#ifdef FOLKMAN_FIXTURE_DIR
  return FOLKMAN_FIXTURE_DIR;
#else
  return "fixtures/hog";
#endif
}

/// One MANIFEST line: `<id> <order> <fnv1a64 of the graph6 line> <note...>`.
struct FixtureRecord {
  int id = 0;
  int order = 0;
  std::string checksum;
  std::string note;
};

inline std::map<int, FixtureRecord> read_manifest(const std::filesystem::path& dir) {
  std::map<int, FixtureRecord> out;
  std::ifstream in(dir / "MANIFEST");
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    FixtureRecord r;
    if (!(ls >> r.id >> r.order >> r.checksum)) throw std::runtime_error("malformed MANIFEST line: " + line);
    std::getline(ls >> std::ws, r.note);
    out[r.id] = r;
  }
  return out;
}

inline bool has_fixture(int id, const std::filesystem::path& dir = fixture_directory()) {
  return read_manifest(dir).contains(id) && std::filesystem::exists(dir / (std::to_string(id) + ".g6"));
}

/// Reads <dir>/<id>.g6 and checks it against the manifest.
inline Graph load_fixture(int id, const std::filesystem::path& dir = fixture_directory()) {
  auto manifest = read_manifest(dir);
  auto it = manifest.find(id);
  std::ifstream in(dir / (std::to_string(id) + ".g6"));
  if (it == manifest.end() || !in) throw UnknownId(id);
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  if (checksum(line) != it->second.checksum) throw std::runtime_error("checksum mismatch for HoG fixture " + std::to_string(id));
  Graph g = decode_graph6(line);
  if (g.order() != it->second.order) throw std::runtime_error("order mismatch for HoG fixture " + std::to_string(id));
  return g;
}

}  // namespace folkman::hog
