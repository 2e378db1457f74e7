#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folkman/canon.hpp"
#include "folkman/gen_exhaustive.hpp"
#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"
#include "folkman/parallel.hpp"
#include "folkman/pattern.hpp"

namespace folkman {

/// Orbit sizes b_1 >= b_2 >= ... of the generating automorphism.
struct BlockStructure {
  std::vector<int> sizes;

  static BlockStructure make(std::vector<int> sizes) {
    BlockStructure b{std::move(sizes)};
    b.validate();
    return b;
  }

  void validate() const {
    if (sizes.empty()) throw std::invalid_argument("block structure is empty");
    int total = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] < 1) throw std::invalid_argument("block sizes must be positive");
      if (i && sizes[i] > sizes[i - 1]) throw std::invalid_argument("block sizes must be non-increasing");
      for (std::size_t j = 0; j < i; ++j)
        if (sizes[j] % sizes[i] != 0) throw std::invalid_argument("block sizes must form a divisibility chain");
      total += sizes[i];
    }
    if (total > kMaxOrder) throw std::invalid_argument("block structure exceeds maximum order");
  }

  int order() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
  int offset(int block) const { return std::accumulate(sizes.begin(), sizes.begin() + block, 0); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
    return s + "]";
  }
};

/// Orbit of vertex pairs under theta. Within block i: pairs at cyclic
/// distance `offset`. Between blocks i < j: pairs ((i,x),(j,y)) with
/// y - x = offset (mod b_j).
struct EdgeClass {
  int block_i = 0;
  int block_j = 0;
  int offset = 0;
  std::vector<Edge> pairs;

  bool within() const { return block_i == block_j; }
};

/// theta: every block rotated by one position.
inline Permutation theta_permutation(const BlockStructure& b) {
  Permutation p(b.order());
  for (std::size_t i = 0; i < b.sizes.size(); ++i) {
    int base = b.offset(static_cast<int>(i));
    for (int x = 0; x < b.sizes[i]; ++x) p[base + x] = base + (x + 1) % b.sizes[i];
  }
  return p;
}

/// All pair classes, in search order: within-block classes of the first
/// block, inter-block classes, then within-block classes of later blocks.
inline std::vector<EdgeClass> enumerate_block_edge_classes(const BlockStructure& b) {
  b.validate();
  const int t = static_cast<int>(b.sizes.size());
  auto within = [&](int i) {
    std::vector<EdgeClass> out;
    const int n = b.sizes[i], base = b.offset(i);
    for (int d = 1; d <= n / 2; ++d) {
      EdgeClass c{i, i, d, {}};
      for (int x = 0; x < n; ++x) {
        int y = (x + d) % n;
        if (2 * d == n && y < x) continue;
        c.pairs.push_back({std::min(base + x, base + y), std::max(base + x, base + y)});
      }
      out.push_back(std::move(c));
    }
    return out;
  };
  std::vector<EdgeClass> classes = within(0);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      for (int r = 0; r < b.sizes[j]; ++r) {
        EdgeClass c{i, j, r, {}};
        for (int x = 0; x < b.sizes[i]; ++x) c.pairs.push_back({b.offset(i) + x, b.offset(j) + (x + r) % b.sizes[j]});
        classes.push_back(std::move(c));
      }
  for (int i = 1; i < t; ++i) {
    auto w = within(i);
    classes.insert(classes.end(), w.begin(), w.end());
  }
  return classes;
}

struct GenTask {
  BlockStructure structure;
  std::optional<Pattern> forbidden;
  std::optional<int> alpha_bound;

  /// Parses "blocks=15,15,15 forbid=J4 alpha<=10".
  static GenTask parse(std::string_view line) {
    GenTask t;
    std::istringstream in{std::string(line)};
    std::string tok;
    bool have_blocks = false;
    while (in >> tok) {
      if (tok.starts_with("blocks=")) {
        std::vector<int> sizes;
        std::istringstream bs(tok.substr(7));
        std::string part;
        while (std::getline(bs, part, ',')) sizes.push_back(std::stoi(part));
        t.structure = BlockStructure::make(std::move(sizes));
        have_blocks = true;
      } else if (tok.starts_with("forbid=")) {
        t.forbidden = Pattern::parse(tok.substr(7));
      } else if (tok.starts_with("alpha<=")) {
        t.alpha_bound = std::stoi(tok.substr(7));
        if (*t.alpha_bound < 1) throw std::invalid_argument("alpha bound must be >= 1");
      } else {
        throw std::invalid_argument("unknown task token: " + tok);
      }
    }
    if (!have_blocks) throw std::invalid_argument("task needs blocks=");
    return t;
  }

  std::string to_string() const {
    std::string s = "blocks=";
    for (std::size_t i = 0; i < structure.sizes.size(); ++i) s += (i ? "," : "") + std::to_string(structure.sizes[i]);
    if (forbidden) s += " forbid=" + forbidden->name();
    if (alpha_bound) s += " alpha<=" + std::to_string(*alpha_bound);
    return s;
  }
};

struct PolyOptions {
  PrefixSplit split;
  int workers = 1;
  /// Upper limit on the symmetry group used for the leaf lex-min test.
  std::size_t symmetry_cap = 20000;
};

struct PolyResult {
  /// Graphs in block labelling, one per isomorphism class, sorted by canonical form.
  std::vector<Graph> graphs;
  std::uint64_t leaves = 0;
  std::vector<std::string> warnings;
};

/// theta is an automorphism of g whose orbits are exactly the blocks.
inline bool verify_theta_certificate(const Graph& g, const BlockStructure& b) {
  if (g.order() != b.order()) return false;
  Permutation p = theta_permutation(b);
  for (const auto& e : g.edges())
    if (!g.adjacent(p[e.u], p[e.v])) return false;
  for (std::size_t i = 0; i < b.sizes.size(); ++i) {
    int v = b.offset(static_cast<int>(i)), len = 0, x = v;
    do {
      x = p[x];
      ++len;
    } while (x != v);
    if (len != b.sizes[i]) return false;
  }
  return true;
}

namespace detail {

class PolySearch {
 public:
  PolySearch(const GenTask& t, const PolyOptions& opt)
      : t_(t), opt_(opt), classes_(enumerate_block_edge_classes(t.structure)), n_(t.structure.order()) {
    build_symmetries();
  }

  std::size_t class_count() const { return classes_.size(); }
  std::size_t symmetry_count() const { return maps_.size(); }

  void run(int part, int parts, int depth, std::map<std::string, Graph>& out, std::uint64_t& leaves) {
    part_ = part;
    parts_ = parts;
    depth_ = depth;
    out_ = &out;
    leaves_ = &leaves;
    decision_.assign(classes_.size(), 0);
    dfs(0, Graph(n_), Graph(n_));
  }

 private:
  // Class index -> image class index, per symmetry.
  void build_symmetries() {
    const auto& sz = t_.structure.sizes;
    const int t = static_cast<int>(sz.size());
    std::map<std::tuple<int, int, int>, int> index;
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
      index[{classes_[c].block_i, classes_[c].block_j, classes_[c].offset}] = c;

    std::vector<int> mults;
    for (int m = 1; m <= std::max(1, sz[0]); ++m)
      if (std::gcd(m, sz[0]) == 1) mults.push_back(m % std::max(1, sz[0]));
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < t && ok; ++i) ok = sz[perm[i]] == sz[i];
      if (ok) perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t shift_count = 1;
    for (int i = 1; i < t; ++i) shift_count *= static_cast<std::size_t>(sz[i]);
    const bool use_shifts = mults.size() * perms.size() * shift_count <= opt_.symmetry_cap;

    std::vector<int> shift(t, 0);
    auto image = [&](int m, const std::vector<int>& p, const std::vector<int>& s) {
      std::vector<int> map(classes_.size());
      for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
        const auto& ec = classes_[c];
        if (ec.within()) {
          int b = sz[ec.block_i];
          int d = static_cast<int>((static_cast<long long>(m) * ec.offset) % b);
          d = std::min(d, b - d);
          map[c] = index.at({p[ec.block_i], p[ec.block_i], d});
        } else {
          int bi = p[ec.block_i], bj = p[ec.block_j];
          int mod = sz[ec.block_j];
          long long r = (static_cast<long long>(m) * ec.offset + s[ec.block_j] - s[ec.block_i]) % mod;
          r = (r + mod) % mod;
          if (bi > bj) {
            std::swap(bi, bj);
            r = (mod - r) % mod;
          }
          map[c] = index.at({bi, bj, static_cast<int>(r)});
        }
      }
      return map;
    };
    for (int m : mults)
      for (const auto& p : perms) {
        if (!use_shifts) {
          maps_.push_back(image(m, p, shift));
          continue;
        }
        std::fill(shift.begin(), shift.end(), 0);
        while (true) {
          maps_.push_back(image(m, p, shift));
          int i = 1;
          while (i < t && ++shift[i] == sz[i]) shift[i++] = 0;
          if (i >= t) break;
        }
      }
  }

  bool lex_minimal() const {
    for (const auto& map : maps_) {
      std::vector<std::uint8_t> img(classes_.size());
      for (std::size_t c = 0; c < classes_.size(); ++c) img[map[c]] = decision_[c];
      if (img < decision_) return false;
    }
    return true;
  }

  bool alpha_ok(const Graph& excluded, int v) const {
    if (!t_.alpha_bound) return true;
    return !has_clique(excluded, excluded.neighbors(v), *t_.alpha_bound);
  }

  void dfs(std::size_t c, const Graph& g, const Graph& excluded) {
    if (static_cast<int>(c) == depth_ && parts_ > 1 &&
        (counter_++ % static_cast<std::uint64_t>(parts_)) != static_cast<std::uint64_t>(part_))
      return;
    if (c == classes_.size()) {
      leaf(g);
      return;
    }
    const auto& ec = classes_[c];
    const int a = ec.pairs.front().u;
    // include
    {
      GraphBuilder b(g);
      for (const auto& e : ec.pairs) b.add_edge(e.u, e.v);
      Graph h = std::move(b).build();
      if (!t_.forbidden || !contains_pattern_at(h, *t_.forbidden, a)) {
        decision_[c] = 1;
        dfs(c + 1, h, excluded);
        decision_[c] = 0;
      }
    }
    // exclude
    {
      GraphBuilder b(excluded);
      for (const auto& e : ec.pairs) b.add_edge(e.u, e.v);
      Graph x = std::move(b).build();
      // every new pair is a theta-image of the first one
      const Edge& e = ec.pairs.front();
      if (alpha_ok(x, e.u)) dfs(c + 1, g, x);
    }
  }

  void leaf(const Graph& g) {
    ++*leaves_;
    if (!lex_minimal()) return;
    if (t_.alpha_bound && independence_number(g) > *t_.alpha_bound) return;
    if (t_.forbidden && contains_pattern(g, *t_.forbidden)) throw std::logic_error("pattern escaped pruning");
    if (!verify_theta_certificate(g, t_.structure)) throw std::logic_error("theta is not an automorphism");
    out_->emplace(canonical_string(g), g);
  }

  const GenTask& t_;
  const PolyOptions& opt_;
  std::vector<EdgeClass> classes_;
  int n_;
  std::vector<std::vector<int>> maps_;
  std::vector<std::uint8_t> decision_;
  int part_ = 0, parts_ = 1, depth_ = -1;
  std::uint64_t counter_ = 0;
  std::map<std::string, Graph>* out_ = nullptr;
  std::uint64_t* leaves_ = nullptr;
};

}  // namespace detail

/// All semi-polycirculant graphs with the given block structure that avoid
/// the pattern and respect the independence bound, up to isomorphism.
inline PolyResult generate_semipolycirculant(const GenTask& t, const PolyOptions& opt = {}) {
  t.structure.validate();
  PolyResult res;
  detail::PolySearch probe(t, opt);
  if (probe.class_count() > 60)
    res.warnings.push_back("edge class count " + std::to_string(probe.class_count()) + " may be infeasible");
  std::map<std::string, Graph> found;
  if (opt.workers <= 1) {
    probe.run(opt.split.part, opt.split.parts, opt.split.depth, found, res.leaves);
  } else {
    if (opt.split.parts > 1) throw std::invalid_argument("prefix split and workers cannot be combined");
    const int parts = opt.workers * 16;
    const int depth = static_cast<int>(std::min<std::size_t>(probe.class_count(), 12));
    std::vector<std::map<std::string, Graph>> pieces(static_cast<std::size_t>(parts));
    std::vector<std::uint64_t> leaves(static_cast<std::size_t>(parts), 0);
    parallel_for(static_cast<std::size_t>(parts), opt.workers, [&](std::size_t i, int) {
      detail::PolySearch s(t, opt);
      s.run(static_cast<int>(i), parts, depth, pieces[i], leaves[i]);
    });
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      found.merge(pieces[i]);
      res.leaves += leaves[i];
    }
  }
  for (auto& [_, g] : found) res.graphs.push_back(std::move(g));
  return res;
}

}  // namespace folkman
