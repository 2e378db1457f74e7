#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/canon.hpp"
#include "folkman/constructions.hpp"
#include "folkman/gen_exhaustive.hpp"
#include "folkman/gen_locallinear.hpp"
#include "folkman/gen_polycirculant.hpp"
#include "folkman/graph6.hpp"
#include "folkman/hog.hpp"
#include "folkman/invariants.hpp"
#include "folkman/parallel.hpp"
#include "folkman/pattern.hpp"

namespace folkman {

// ---------------------------------------------------------------------------
// Closed forms

struct ClassicalParams {
  int m = 0;
  int p = 0;
};

inline ClassicalParams classical_params(const std::vector<int>& targets) {
  ClassicalParams c{1, 0};
  for (int a : targets) {
    c.m += a - 1;
    c.p = std::max(c.p, a);
  }
  return c;
}

/// Known closed form for F_v(a_1..a_k; K_s), if one applies:
/// m+p when s = m >= p+1, and m+6 when s = m-1 with p = 3, m >= 6.
inline std::optional<int> classical_value(const ArrowSpec& spec, const Pattern& avoided) {
  if (spec.mode != ArrowMode::kVertex || avoided.kind() != Pattern::Kind::kClique) return std::nullopt;
  const auto [m, p] = classical_params(spec.targets);
  const int s = avoided.order();
  if (m < 2 || p < 2) return std::nullopt;
  if (s == m && m >= p + 1) return m + p;
  if (s == m - 1 && p == 3 && m >= 6) return m + 6;
  return std::nullopt;
}

/// No clique of size s and no independent set of size t.
inline bool is_ramsey_graph(const Graph& g, int s, int t) {
  if (s <= 0 || t <= 0) return false;
  return !has_clique(g, g.vertices(), s) && independence_number(g) < t;
}

// ---------------------------------------------------------------------------
// Registry

/// One known value or bound. Targets are free-form so that derived entries
/// with more colours or edge targets other than (3,3) can be recorded.
struct BoundsEntry {
  ArrowMode mode = ArrowMode::kVertex;
  std::vector<int> targets;
  std::string avoided;
  std::optional<int> lower;
  std::optional<int> upper;
  bool infinite = false;
  /// "-", "g6:<graph6>", "HoG:<id>" or "cone(HoG:<id>)".
  std::string witness = "-";
  std::string citation;

  bool exact() const { return infinite || (lower && upper && *lower == *upper); }

  std::string name() const {
    std::string s = mode == ArrowMode::kVertex ? "F_v(" : "F_e(";
    for (std::size_t i = 0; i < targets.size(); ++i) s += (i ? "," : "") + std::to_string(targets[i]);
    return s + ";" + avoided + ")";
  }

  std::string value_string() const {
    if (infinite) return "inf";
    if (exact()) return std::to_string(*lower);
    std::string s = lower ? std::to_string(*lower) : "";
    return s + (upper ? ".." + std::to_string(*upper) : "..");
  }

  std::string to_line() const {
    auto num = [](const std::optional<int>& x, bool inf) { return inf ? std::string("inf") : x ? std::to_string(*x) : "-"; };
    std::string t;
    for (std::size_t i = 0; i < targets.size(); ++i) t += (i ? "," : "") + std::to_string(targets[i]);
    return std::string(mode == ArrowMode::kVertex ? "Fv" : "Fe") + " ; " + t + " ; " + avoided + " ; " +
           num(lower, infinite) + " ; " + num(upper, infinite) + " ; " + witness + " ; " + citation;
  }
};

namespace detail {

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses "Fv|Fe ; targets ; avoided ; lower ; upper ; witness ; citation".
inline BoundsEntry parse_bounds_entry(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  std::string part;
  while (f.size() < 6 && std::getline(ss, part, ';')) f.push_back(detail::trim(part));
  if (std::getline(ss, part)) f.push_back(detail::trim(part));
  if (f.size() != 7) throw std::invalid_argument("registry line needs 7 fields: " + line);
  BoundsEntry e;
  if (f[0] == "Fv") e.mode = ArrowMode::kVertex;
  else if (f[0] == "Fe") e.mode = ArrowMode::kEdge;
  else throw std::invalid_argument("registry kind must be Fv or Fe: " + line);
  std::stringstream ts(f[1]);
  while (std::getline(ts, part, ',')) e.targets.push_back(std::stoi(part));
  if (e.targets.empty()) throw std::invalid_argument("registry entry without targets: " + line);
  e.avoided = f[2];
  Pattern::parse(e.avoided);
  auto num = [&](const std::string& s) -> std::optional<int> {
    if (s == "-" || s.empty()) return std::nullopt;
    if (s == "inf") {
      e.infinite = true;
      return std::nullopt;
    }
    return std::stoi(s);
  };
  e.lower = num(f[3]);
  e.upper = num(f[4]);
  if (e.lower && e.upper && *e.lower > *e.upper) throw std::invalid_argument("lower bound exceeds upper bound: " + line);
  e.witness = f[5].empty() ? "-" : f[5];
  e.citation = f[6];
  return e;
}

inline std::vector<BoundsEntry> parse_registry(std::istream& in) {
  std::vector<BoundsEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(parse_bounds_entry(t));
  }
  return out;
}

inline std::filesystem::path default_registry_path() {
  if (const char* env = std::getenv("FOLKMAN_REGISTRY"); env && *env) return env;
#ifdef FOLKMAN_DATA_DIR
  return std::filesystem::path(FOLKMAN_DATA_DIR) / "registry.txt";
#else
  return "data/registry.txt";
#endif
}

inline std::vector<BoundsEntry> load_registry(const std::filesystem::path& path = default_registry_path()) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open registry " + path.string());
  return parse_registry(in);
}

inline const BoundsEntry* find_entry(const std::vector<BoundsEntry>& reg, ArrowMode mode, const std::vector<int>& targets,
                                     const std::string& avoided) {
  for (const auto& e : reg)
    if (e.mode == mode && e.targets == targets && e.avoided == avoided) return &e;
  return nullptr;
}

/// Resolves a witness reference to a graph; nullopt for "-".
inline std::optional<Graph> resolve_witness(const std::string& ref,
                                            const std::filesystem::path& fixtures = hog::fixture_directory()) {
  if (ref == "-" || ref.empty()) return std::nullopt;
  if (ref.starts_with("g6:")) return decode_graph6(ref.substr(3));
  if (ref.starts_with("HoG:")) return hog::load_fixture(std::stoi(ref.substr(4)), fixtures);
  if (ref.starts_with("cone(") && ref.ends_with(")")) {
    auto inner = resolve_witness(ref.substr(5, ref.size() - 6), fixtures);
    if (!inner) throw std::invalid_argument("bad witness reference: " + ref);
    return cone(*inner);
  }
  throw std::invalid_argument("bad witness reference: " + ref);
}

struct RegistryCheck {
  enum class Status { kVerified, kSkipped, kMissingFixture, kFailed };
  const BoundsEntry* entry = nullptr;
  Status status = Status::kSkipped;
  std::string message;
};

struct RegistryVerifyOptions {
  int max_order = 64;
  EdgeArrowOptions edge;
  std::filesystem::path fixtures = hog::fixture_directory();
};

/// Checks every witness of at most max_order vertices: order equals the
/// upper bound, the avoided pattern is absent and the graph arrows.
inline RegistryCheck verify_entry(const BoundsEntry& e, const RegistryVerifyOptions& opt = {}) {
  using S = RegistryCheck::Status;
  RegistryCheck r{&e, S::kSkipped, {}};
  if (e.witness == "-") {
    r.message = "no witness";
    return r;
  }
  std::optional<Graph> g;
  try {
    g = resolve_witness(e.witness, opt.fixtures);
  } catch (const hog::UnknownId& ex) {
    r.status = S::kMissingFixture;
    r.message = ex.what();
    return r;
  }
  if (!e.upper || g->order() != *e.upper) {
    r.status = S::kFailed;
    r.message = "witness order " + std::to_string(g->order()) + " does not match upper bound";
    return r;
  }
  if (g->order() > opt.max_order) {
    r.message = "witness larger than " + std::to_string(opt.max_order) + " vertices";
    return r;
  }
  if (contains_pattern(*g, Pattern::parse(e.avoided))) {
    r.status = S::kFailed;
    r.message = "witness contains " + e.avoided;
    return r;
  }
  ArrowResult a;
  if (e.mode == ArrowMode::kVertex) {
    a = arrows_vertex(*g, ArrowSpec::vertex(e.targets));
  } else if (e.targets == std::vector<int>{3, 3}) {
    a = arrows_edge_33(*g, opt.edge);
  } else {
    r.message = "edge arrowing only decided for (3,3)";
    return r;
  }
  if (!a.decided()) {
    r.status = S::kFailed;
    r.message = "arrowing undecided within budget";
  } else if (!a.arrows()) {
    r.status = S::kFailed;
    r.message = "witness does not arrow";
  } else {
    r.status = S::kVerified;
    r.message = "n=" + std::to_string(g->order());
  }
  return r;
}

inline std::vector<RegistryCheck> verify_registry(const std::vector<BoundsEntry>& reg, const RegistryVerifyOptions& opt = {}) {
  std::vector<RegistryCheck> out;
  for (const auto& e : reg) out.push_back(verify_entry(e, opt));
  return out;
}

/// Pairs (row above, row below) within a column of the main table whose
/// bounds contradict a non-decreasing column.
inline std::vector<std::pair<const BoundsEntry*, const BoundsEntry*>> monotonicity_violations(
    const std::vector<BoundsEntry>& reg) {
  const std::vector<std::vector<int>> rows{{2, 3}, {2, 2, 3}, {3, 3}, {2, 3, 3}, {3, 3, 3}};
  std::vector<std::pair<const BoundsEntry*, const BoundsEntry*>> bad;
  std::set<std::string> columns;
  for (const auto& e : reg)
    if (e.mode == ArrowMode::kVertex) columns.insert(e.avoided);
  for (const auto& col : columns)
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const BoundsEntry* a = find_entry(reg, ArrowMode::kVertex, rows[i], col);
        const BoundsEntry* b = find_entry(reg, ArrowMode::kVertex, rows[j], col);
        if (a && b && a->lower && b->upper && *a->lower > *b->upper) bad.emplace_back(a, b);
      }
  return bad;
}

struct CompositeBound {
  BoundsEntry entry;
  std::vector<std::string> provenance;
};

class MissingRegistryInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F_v(6,6,6;K7) <= F_v(2,2,2;K3) * F_v(3,3,3;K4) and F_e(3,3,3;K8) <= F_v(6,6,6;K7) + 1.
inline std::vector<CompositeBound> composite_bounds(const std::vector<BoundsEntry>& reg) {
  const BoundsEntry* tri = find_entry(reg, ArrowMode::kVertex, {2, 2, 2}, "K3");
  const BoundsEntry* k4 = find_entry(reg, ArrowMode::kVertex, {3, 3, 3}, "K4");
  if (!tri || !tri->upper) throw MissingRegistryInput("registry lacks an upper bound for F_v(2,2,2;K3)");
  if (!k4 || !k4->upper) throw MissingRegistryInput("registry lacks an upper bound for F_v(3,3,3;K4)");
  CompositeBound v;
  v.entry.mode = ArrowMode::kVertex;
  v.entry.targets = {6, 6, 6};
  v.entry.avoided = "K7";
  v.entry.upper = *tri->upper * *k4->upper;
  v.entry.citation = "product bound";
  v.provenance = {tri->name() + " <= " + std::to_string(*tri->upper) + " [" + tri->citation + "]",
                  k4->name() + " <= " + std::to_string(*k4->upper) + " [" + k4->citation + "]",
                  v.entry.name() + " <= " + std::to_string(*tri->upper) + " * " + std::to_string(*k4->upper)};
  CompositeBound e;
  e.entry.mode = ArrowMode::kEdge;
  e.entry.targets = {3, 3, 3};
  e.entry.avoided = "K8";
  e.entry.upper = *v.entry.upper + 1;
  e.entry.citation = "vertex-to-edge bound";
  e.provenance = v.provenance;
  e.provenance.push_back(e.entry.name() + " <= " + std::to_string(*v.entry.upper) + " + 1");
  return {v, e};
}

// ---------------------------------------------------------------------------
// Search orchestration

struct ExhaustiveSource {
  bool require_2connected = false;
};
struct PolycirculantSource {
  BlockStructure structure;
  std::optional<int> alpha_bound;
};
struct LocallyLinearSource {
  bool maximal_only = true;
};
struct ExtensionSource {
  Graph base;
  int k = 1;
  bool independent = false;
  /// Caller vouches that every witness of this order is such an extension.
  bool proven_reduction = false;
};
using GraphSource = std::variant<ExhaustiveSource, PolycirculantSource, LocallyLinearSource, ExtensionSource>;

struct FolkmanQuery {
  ArrowSpec spec;
  Pattern avoided = Pattern::clique(3);
  int order = 1;
  GraphSource source = ExhaustiveSource{};
};

struct SearchOptions {
  int workers = 1;
  EdgeArrowOptions edge;
  std::size_t batch = 4096;
};

struct SearchReport {
  /// Canonical graph6 strings, sorted.
  std::vector<std::string> witnesses;
  std::vector<std::string> undecided;
  std::uint64_t examined = 0;
  /// An empty witness list proves that no witness of this order exists.
  bool exhaustive = false;
};

namespace detail {

class ArrowFilter {
 public:
  ArrowFilter(const FolkmanQuery& q, const SearchOptions& opt) : q_(q), opt_(opt) {}

  void push(const Graph& g) {
    std::lock_guard lock(mu_);
    batch_.push_back(g);
    if (batch_.size() >= opt_.batch) flush_locked();
  }

  SearchReport finish(bool exhaustive) {
    std::lock_guard lock(mu_);
    flush_locked();
    SearchReport r;
    r.witnesses.assign(hits_.begin(), hits_.end());
    r.undecided.assign(undecided_.begin(), undecided_.end());
    r.examined = examined_;
    r.exhaustive = exhaustive;
    return r;
  }

 private:
  void flush_locked() {
    std::vector<std::uint8_t> verdict(batch_.size(), 0);
    parallel_for(batch_.size(), opt_.workers, [&](std::size_t i, int) {
      ArrowResult a = arrows(batch_[i], q_.spec, opt_.edge);
      verdict[i] = a.decided() ? (a.arrows() ? 1 : 0) : 2;
    });
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      if (verdict[i] == 1) hits_.insert(canonical_string(batch_[i]));
      if (verdict[i] == 2) undecided_.insert(canonical_string(batch_[i]));
    }
    examined_ += batch_.size();
    batch_.clear();
  }

  const FolkmanQuery& q_;
  const SearchOptions& opt_;
  std::mutex mu_;
  std::vector<Graph> batch_;
  std::set<std::string> hits_, undecided_;
  std::uint64_t examined_ = 0;
};

}  // namespace detail

/// Every graph of the given order produced by the source that avoids the
/// pattern and arrows the spec. The exhaustive flag is set only when the
/// source provably covers the whole class.
inline SearchReport search_folkman(const FolkmanQuery& q, const SearchOptions& opt = {}) {
  ArrowSpec::validated(q.spec);
  if (q.order < 1) throw std::invalid_argument("order must be >= 1");
  detail::ArrowFilter filter(q, opt);
  bool exhaustive = false;
  std::visit(
      [&](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExhaustiveSource>) {
          GenFilter f{q.order, q.avoided};
          f.require_2connected = src.require_2connected;
          generate_free_graphs(f, [&](const Graph& g) { filter.push(g); });
          exhaustive = !src.require_2connected;
        } else if constexpr (std::is_same_v<T, PolycirculantSource>) {
          if (src.structure.order() != q.order) throw std::invalid_argument("block structure order differs from query order");
          GenTask t{src.structure, q.avoided, src.alpha_bound};
          PolyOptions po;
          po.workers = opt.workers;
          for (const auto& g : generate_semipolycirculant(t, po).graphs) filter.push(g);
        } else if constexpr (std::is_same_v<T, LocallyLinearSource>) {
          const bool c4 = q.avoided.kind() == Pattern::Kind::kCycle4;
          if (!c4 && q.avoided.kind() != Pattern::Kind::kJGraph) throw std::invalid_argument("locally linear source needs J4 or C4");
          if (!c4 && q.avoided.order() != 4) throw std::invalid_argument("locally linear source needs J4 or C4");
          LLTask t{q.order, c4, src.maximal_only, false, 1};
          generate_ll(t, [&](const Graph& g) { filter.push(g); });
          exhaustive = q.spec.mode == ArrowMode::kVertex && q.spec.targets == std::vector<int>{3, 3};
        } else {
          if (src.base.order() + src.k != q.order) throw std::invalid_argument("extension order differs from query order");
          for (const auto& g : k_extensions({src.base, src.k, q.avoided, src.independent, opt.workers})) filter.push(g);
          exhaustive = src.proven_reduction;
        }
      },
      q.source);
  return filter.finish(exhaustive);
}

}  // namespace folkman
