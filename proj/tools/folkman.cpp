// Command-line front end: generators, arrowing filters, the witness
// registry and the co-(P2+P3) property checks, all speaking graph6 lines.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "folkman/folkman.hpp"
#include "folkman/hog_fetch.hpp"
#include "folkman/theorem.hpp"

using namespace folkman;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerify = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string in = "-";
  std::string out = "-";
  int workers = 1;
  double timeout = 60;
  int split_depth = 0;
  int part = 0;
  int of = 1;
};

void add_io(CLI::App* c, Common& o) {
  c->add_option("--in", o.in, "input file, - for stdin")->capture_default_str();
  c->add_option("--out", o.out, "output file, - for stdout")->capture_default_str();
}

void add_workers(CLI::App* c, Common& o) {
  c->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

void add_split(CLI::App* c, Common& o) {
  c->add_option("--split-depth", o.split_depth, "search-tree depth at which to split")->check(CLI::NonNegativeNumber);
  c->add_option("--part", o.part, "part to run, 0-based")->check(CLI::NonNegativeNumber);
  c->add_option("--of", o.of, "number of parts")->check(CLI::PositiveNumber);
}

PrefixSplit split_of(const Common& o) {
  if (o.part >= o.of) throw UsageError("--part must be smaller than --of");
  if (o.of > 1 && o.workers > 1) throw UsageError("--of and --workers cannot be combined");
  return {o.split_depth, o.part, o.of};
}

template <class F>
auto usage(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ArrowSpec parse_spec(const std::string& s) {
  return usage([&] {
    if (s.starts_with("v:")) return ArrowSpec::vertex(ArrowSpec::parse(s.substr(2)).targets);
    if (s.starts_with("e:")) {
      if (ArrowSpec::parse(s.substr(2)).targets != std::vector<int>{3, 3})
        throw std::invalid_argument("edge arrowing supports (3,3) only");
      return ArrowSpec::edge33();
    }
    return ArrowSpec::parse(s);
  });
}

std::optional<Pattern> parse_pattern(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return usage([&] { return Pattern::parse(s); });
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    try {
      v.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + s);
    }
  return v;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& operator*() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

/// Parsed input records; unreadable lines go to stderr and mark the run failed.
struct Input {
  std::vector<Graph> graphs;
  bool failed = false;
};

Input read_graphs(const std::string& path) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot read " + path);
  }
  std::istream& in = path == "-" ? std::cin : file;
  Input r;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    try {
      r.graphs.push_back(decode_any(line));
    } catch (const std::exception& e) {
      std::cerr << "line " << no << ": " << e.what() << '\n';
      r.failed = true;
    }
  }
  return r;
}

std::string colouring_string(const Coloring& c) {
  std::string s;
  for (int x : c.colour) s += "0123456789abcdef"[x];
  return s;
}

EdgeArrowOptions edge_options(const Common& o) {
  return {std::chrono::milliseconds(static_cast<long long>(o.timeout * 1000))};
}

void print_sorted(std::ostream& out, std::vector<Graph> gs) {
  std::vector<std::string> s;
  for (const auto& g : gs) s.push_back(canonical_string(g));
  std::sort(s.begin(), s.end());
  for (const auto& x : s) out << x << '\n';
}

// ---------------------------------------------------------------------------

struct GenFreeArgs {
  Common c;
  int n = 0;
  std::string forbid;
  bool maximal = false;
  bool two_connected = false;
};

int run_gen_free(const GenFreeArgs& a) {
  GenFilter f{a.n, parse_pattern(a.forbid), a.two_connected, a.maximal};
  GenOptions opt;
  opt.split = split_of(a.c);
  opt.workers = a.c.workers;
  Output out(a.c.out);
  if (opt.workers == 1) {
    generate_free_graphs(f, [&](const Graph& g) { *out << encode_graph6(g) << '\n'; }, opt);
  } else {
    print_sorted(*out, usage([&] { return all_free_graphs(f, opt); }));
  }
  return kOk;
}

struct GenLLArgs {
  Common c;
  int n = 0;
  bool c4free = false;
  bool maximal = false;
};

int run_gen_ll(const GenLLArgs& a) {
  LLTask t{a.n, a.c4free, a.maximal, false, a.c.workers};
  const PrefixSplit s = split_of(a.c);
  Output out(a.c.out);
  std::vector<Graph> gs;
  auto sink = [&](const Graph& g) {
    if (a.c.workers == 1) *out << encode_graph6(g) << '\n';
    else gs.push_back(g);
  };
  usage([&] {
    if (s.parts > 1) detail::LLGenerator(t, sink).run_subtree(s.part, s.parts, std::max(1, s.depth));
    else generate_ll(t, sink);
    return 0;
  });
  if (a.c.workers > 1) print_sorted(*out, std::move(gs));
  return kOk;
}

struct GenPolyArgs {
  Common c;
  std::string blocks;
  std::string forbid;
  int alpha = 0;
  std::size_t symmetry_cap = 20000;
};

int run_gen_poly(const GenPolyArgs& a) {
  GenTask t{usage([&] { return BlockStructure::make(parse_ints(a.blocks)); }), parse_pattern(a.forbid),
            a.alpha > 0 ? std::optional<int>(a.alpha) : std::nullopt};
  PolyOptions opt;
  opt.split = split_of(a.c);
  opt.workers = a.c.workers;
  opt.symmetry_cap = a.symmetry_cap;
  auto r = generate_semipolycirculant(t, opt);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  Output out(a.c.out);
  for (const auto& g : r.graphs) *out << encode_graph6(g) << '\n';
  return kOk;
}

struct ArrowArgs {
  Common c;
  std::string spec;
  bool filter = false;
};

int run_arrow(const ArrowArgs& a) {
  const ArrowSpec spec = parse_spec(a.spec);
  const auto eo = edge_options(a.c);
  Input in = read_graphs(a.c.in);
  std::vector<ArrowResult> res(in.graphs.size());
  parallel_for(in.graphs.size(), a.c.workers, [&](std::size_t i, int) {
    try {
      res[i] = arrows(in.graphs[i], spec, eo);
    } catch (const std::exception& e) {
      res[i].notes.push_back(e.what());
    }
  });
  Output out(a.c.out);
  bool failed = in.failed;
  for (std::size_t i = 0; i < res.size(); ++i) {
    const auto& r = res[i];
    if (!r.decided()) {
      failed = true;
      std::cerr << "graph " << i + 1 << ": undecided" << (r.notes.empty() ? "" : " (" + r.notes.front() + ")") << '\n';
      if (!a.filter) *out << "undecided\n";
    } else if (a.filter) {
      if (r.arrows()) *out << encode_graph6(in.graphs[i]) << '\n';
    } else if (r.arrows()) {
      *out << "arrows\n";
    } else {
      *out << "does not arrow " << colouring_string(*r.witness) << '\n';
    }
  }
  return failed ? kVerify : kOk;
}

struct ExtendArgs {
  Common c;
  int k = 1;
  std::string forbid;
  bool independent = false;
};

int run_extend(const ExtendArgs& a) {
  const auto forbid = parse_pattern(a.forbid);
  if (a.k < 1) throw UsageError("--k must be positive");
  Input in = read_graphs(a.c.in);
  std::set<std::string> all;
  bool failed = in.failed;
  for (std::size_t i = 0; i < in.graphs.size(); ++i) try {
      for (const auto& g : k_extensions({in.graphs[i], a.k, forbid, a.independent, a.c.workers}))
        all.insert(canonical_string(g));
    } catch (const std::exception& e) {
      std::cerr << "graph " << i + 1 << ": " << e.what() << '\n';
      failed = true;
    }
  Output out(a.c.out);
  for (const auto& s : all) *out << s << '\n';
  return failed ? kVerify : kOk;
}

struct MinimizeArgs {
  Common c;
  std::string spec;
  std::string forbid;
  bool independent_first = false;
};

int run_minimize(const MinimizeArgs& a) {
  const ArrowSpec spec = parse_spec(a.spec);
  const auto forbid = parse_pattern(a.forbid);
  MinimizeOptions opt;
  opt.independent_set_first = a.independent_first;
  opt.edge = edge_options(a.c);
  opt.workers = a.c.workers;
  Input in = read_graphs(a.c.in);
  Output out(a.c.out);
  bool failed = in.failed;
  for (std::size_t i = 0; i < in.graphs.size(); ++i) try {
      auto r = minimize_witness(in.graphs[i], spec, forbid, opt);
      *out << encode_graph6(r.graph) << '\n';
      std::cerr << "graph " << i + 1 << ": " << in.graphs[i].order() << " -> " << r.graph.order() << " vertices, "
                << (r.edge_minimal ? "edge-minimal" : "not edge-minimal") << '\n';
    } catch (const std::exception& e) {
      std::cerr << "graph " << i + 1 << ": " << e.what() << '\n';
      failed = true;
    }
  return failed ? kVerify : kOk;
}

struct SearchArgs {
  Common c;
  std::string spec;
  std::string forbid;
  int n = 0;
  std::string source = "exhaustive";
  std::string blocks;
  int alpha = 0;
  std::string base;
  int k = 1;
  bool independent = false;
  bool two_connected = false;
  bool all_ll = false;
};

int run_search(const SearchArgs& a) {
  FolkmanQuery q{parse_spec(a.spec), *parse_pattern(a.forbid), a.n, ExhaustiveSource{a.two_connected}};
  if (a.source == "poly") {
    if (a.blocks.empty()) throw UsageError("--source poly needs --blocks");
    q.source = PolycirculantSource{usage([&] { return BlockStructure::make(parse_ints(a.blocks)); }),
                                   a.alpha > 0 ? std::optional<int>(a.alpha) : std::nullopt};
  } else if (a.source == "ll") {
    q.source = LocallyLinearSource{!a.all_ll};
  } else if (a.source == "extend") {
    if (a.base.empty()) throw UsageError("--source extend needs --base");
    q.source = ExtensionSource{usage([&] { return decode_any(a.base); }), a.k, a.independent, false};
  }
  SearchOptions opt;
  opt.workers = a.c.workers;
  opt.edge = edge_options(a.c);
  auto r = usage([&] { return search_folkman(q, opt); });
  Output out(a.c.out);
  for (const auto& w : r.witnesses) *out << w << '\n';
  std::cerr << "examined " << r.examined << ", witnesses " << r.witnesses.size() << ", undecided "
            << r.undecided.size() << ", exhaustive " << (r.exhaustive ? "yes" : "no") << '\n';
  return r.undecided.empty() ? kOk : kVerify;
}

struct RegistryArgs {
  Common c;
  std::string file;
  std::string fixtures;
  int max_order = 64;
};

std::vector<BoundsEntry> open_registry(const RegistryArgs& a) {
  const std::string path = a.file.empty() ? default_registry_path().string() : a.file;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read registry " + path);
  return usage([&] { return parse_registry(in); });
}

int run_registry_verify(const RegistryArgs& a) {
  auto reg = open_registry(a);
  RegistryVerifyOptions opt;
  opt.max_order = a.max_order;
  opt.edge = edge_options(a.c);
  if (!a.fixtures.empty()) opt.fixtures = a.fixtures;
  Output out(a.c.out);
  bool failed = false;
  for (const auto& r : verify_registry(reg, opt)) {
    static const char* names[] = {"verified", "skipped", "missing-fixture", "FAILED"};
    *out << names[static_cast<int>(r.status)] << '\t' << r.entry->name() << '\t' << r.entry->value_string() << '\t'
         << r.message << '\n';
    failed = failed || r.status == RegistryCheck::Status::kFailed;
  }
  for (const auto& v : monotonicity_violations(reg)) {
    *out << "FAILED\tmonotonicity\t" << v.first->name() << " lower bound exceeds upper bound of " << v.second->name() << '\n';
    failed = true;
  }
  return failed ? kVerify : kOk;
}

int run_registry_composite(const RegistryArgs& a) {
  auto reg = open_registry(a);
  Output out(a.c.out);
  try {
    for (const auto& b : composite_bounds(reg)) {
      *out << b.entry.name() << " <= " << *b.entry.upper << '\n';
      for (const auto& p : b.provenance) *out << "  " << p << '\n';
    }
  } catch (const MissingRegistryInput& e) {
    std::cerr << e.what() << '\n';
    return kVerify;
  }
  return kOk;
}

int run_thm1_check(const Common& c) {
  Input in = read_graphs(c.in);
  Output out(c.out);
  bool failed = in.failed;
  for (std::size_t i = 0; i < in.graphs.size(); ++i) try {
      auto r = check_minimal_cop2p3_properties(in.graphs[i]);
      *out << encode_graph6(in.graphs[i]);
      for (int k = 0; k < 5; ++k) {
        *out << '\t' << k + 1 << ':';
        if (r.items[k].pass) *out << "ok";
        else *out << "fail(" << r.items[k].reason << ')';
      }
      *out << '\n';
    } catch (const std::exception& e) {
      std::cerr << "graph " << i + 1 << ": " << e.what() << '\n';
      failed = true;
    }
  return failed ? kVerify : kOk;
}

struct MinDegArgs {
  Common c;
  int max_n = 8;
  bool no_symmetry = false;
};

int run_thm1_mindeg(const MinDegArgs& a) {
  MinDegreeOptions opt;
  opt.symmetry_reduction = !a.no_symmetry;
  opt.workers = a.c.workers;
  auto rows = usage([&] { return min_degree_lower_bound(a.max_n, opt); });
  Output out(a.c.out);
  *out << "n\tgraphs\tcolourings\tnon_extendable\n";
  for (const auto& r : rows) {
    *out << r.n << '\t' << r.graphs << '\t' << r.colourings_checked << '\t' << r.non_extendable << '\n';
    for (const auto& g : r.bad_graphs) *out << "  non-extendable colouring of " << g << '\n';
  }
  return kOk;
}

struct CountsArgs {
  Common c;
  std::string family = "ll";
  int min_n = 5;
  int max_n = 9;
};

int run_counts(const CountsArgs& a) {
  if (a.min_n < 1 || a.max_n < a.min_n) throw UsageError("need 1 <= --min-n <= --max-n");
  Output out(a.c.out);
  for (int n = a.min_n; n <= a.max_n; ++n) {
    std::uint64_t all = 0, maximal = 0;
    if (a.family == "ll" || a.family == "ll-c4") {
      auto c = count_ll(n, a.family == "ll-c4", a.c.workers);
      all = c.ll;
      maximal = c.mll;
    } else {
      const Pattern j4 = Pattern::jgraph(4);
      GenOptions opt;
      opt.workers = a.c.workers;
      std::mutex mu;
      generate_free_graphs(GenFilter{n, j4}, [&](const Graph& g) {
        const bool m = is_maximal_free(g, j4);
        std::lock_guard lock(mu);
        ++all;
        maximal += m;
      }, opt);
    }
    *out << n << '\t' << all << '\t' << maximal << std::endl;
  }
  return kOk;
}

struct FetchArgs {
  Common c;
  std::vector<int> ids;
  bool online = false;
  std::string fixtures;
  std::string url;
};

int run_fetch(const FetchArgs& a) {
  hog::FetchOptions opt;
  opt.online = a.online;
  if (!a.fixtures.empty()) opt.fixtures = a.fixtures;
  if (!a.url.empty()) opt.base_url = a.url;
  Output out(a.c.out);
  bool failed = false;
  for (int id : a.ids) try {
      *out << encode_graph6(hog::fetch_hog(id, opt)) << '\n';
    } catch (const std::exception& e) {
      std::cerr << "HoG " << id << ": " << e.what() << '\n';
      failed = true;
    }
  return failed ? kVerify : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folkman number toolkit"};
  app.require_subcommand(1);

  GenFreeArgs gf;
  auto* c_gf = app.add_subcommand("gen-free", "all pattern-free graphs of one order");
  c_gf->add_option("--n", gf.n, "order")->required()->check(CLI::Range(1, 64));
  c_gf->add_option("--forbid", gf.forbid, "forbidden pattern (Kk, Jk, C4, W5, coP2P3, g6:...)");
  c_gf->add_flag("--maximal", gf.maximal, "maximal pattern-free graphs only");
  c_gf->add_flag("--two-connected", gf.two_connected, "2-connected graphs only");
  add_io(c_gf, gf.c);
  add_workers(c_gf, gf.c);
  add_split(c_gf, gf.c);

  GenLLArgs gl;
  auto* c_gl = app.add_subcommand("gen-ll", "locally linear graphs of one order");
  c_gl->add_option("--n", gl.n, "order")->required()->check(CLI::Range(1, 128));
  c_gl->add_flag("--c4-free", gl.c4free, "C4-free only");
  c_gl->add_flag("--maximal", gl.maximal, "maximal only");
  add_io(c_gl, gl.c);
  add_workers(c_gl, gl.c);
  add_split(c_gl, gl.c);

  GenPolyArgs gp;
  auto* c_gp = app.add_subcommand("gen-poly", "semi-polycirculant graphs on a block structure");
  c_gp->add_option("--blocks", gp.blocks, "block sizes, e.g. 15,15,15")->required();
  c_gp->add_option("--forbid", gp.forbid, "forbidden pattern");
  c_gp->add_option("--alpha", gp.alpha, "independence number bound")->check(CLI::PositiveNumber);
  c_gp->add_option("--symmetry-cap", gp.symmetry_cap, "largest group used for lex-min pruning");
  add_io(c_gp, gp.c);
  add_workers(c_gp, gp.c);
  add_split(c_gp, gp.c);

  ArrowArgs ar;
  auto* c_ar = app.add_subcommand("arrow", "decide arrowing for each input graph");
  c_ar->add_option("--spec", ar.spec, "v:3,3 | v:2,2,3 | e:3,3")->required();
  c_ar->add_flag("--filter", ar.filter, "print only the arrowing graphs");
  c_ar->add_option("--timeout", ar.c.timeout, "edge arrowing budget per graph, seconds")->check(CLI::PositiveNumber);
  add_io(c_ar, ar.c);
  add_workers(c_ar, ar.c);

  ExtendArgs ex;
  auto* c_ex = app.add_subcommand("extend", "k-vertex extensions of each input graph");
  c_ex->add_option("--k", ex.k, "vertices to add")->check(CLI::Range(1, 8));
  c_ex->add_option("--forbid", ex.forbid, "forbidden pattern");
  c_ex->add_flag("--independent", ex.independent, "added vertices form an independent set");
  add_io(c_ex, ex.c);
  add_workers(c_ex, ex.c);

  MinimizeArgs mn;
  auto* c_mn = app.add_subcommand("minimize", "greedy vertex-minimal arrowing subgraph");
  c_mn->add_option("--spec", mn.spec, "arrowing spec")->required();
  c_mn->add_option("--forbid", mn.forbid, "pattern the input must avoid");
  c_mn->add_flag("--independent-first", mn.independent_first, "try removing a maximum independent set first");
  c_mn->add_option("--timeout", mn.c.timeout, "edge arrowing budget per check, seconds")->check(CLI::PositiveNumber);
  add_io(c_mn, mn.c);
  add_workers(c_mn, mn.c);

  SearchArgs se;
  auto* c_se = app.add_subcommand("search", "look for arrowing pattern-free graphs of one order");
  c_se->add_option("--spec", se.spec, "arrowing spec")->required();
  c_se->add_option("--forbid", se.forbid, "avoided pattern")->required();
  c_se->add_option("--n", se.n, "order")->required()->check(CLI::Range(1, 128));
  c_se->add_option("--source", se.source, "graph source")
      ->check(CLI::IsMember({"exhaustive", "poly", "ll", "extend"}))
      ->capture_default_str();
  c_se->add_option("--blocks", se.blocks, "block sizes for --source poly");
  c_se->add_option("--alpha", se.alpha, "independence bound for --source poly")->check(CLI::PositiveNumber);
  c_se->add_option("--base", se.base, "graph6 base graph for --source extend");
  c_se->add_option("--k", se.k, "added vertices for --source extend")->check(CLI::Range(1, 8));
  c_se->add_flag("--independent", se.independent, "independent extensions only");
  c_se->add_flag("--two-connected", se.two_connected, "2-connected graphs only (exhaustive source)");
  c_se->add_flag("--all-ll", se.all_ll, "all locally linear graphs, not only maximal ones");
  c_se->add_option("--timeout", se.c.timeout, "edge arrowing budget per graph, seconds")->check(CLI::PositiveNumber);
  c_se->add_option("--out", se.c.out, "output file, - for stdout");
  add_workers(c_se, se.c);

  RegistryArgs rg;
  auto* c_rg = app.add_subcommand("registry", "bounds registry");
  c_rg->require_subcommand(1);
  c_rg->add_option("--file", rg.file, "registry file");
  c_rg->add_option("--out", rg.c.out, "output file, - for stdout");
  auto* c_rv = c_rg->add_subcommand("verify", "check every witness and column monotonicity");
  c_rv->add_option("--max-order", rg.max_order, "skip arrowing checks above this order")->capture_default_str();
  c_rv->add_option("--fixtures", rg.fixtures, "fixture directory");
  c_rv->add_option("--timeout", rg.c.timeout, "edge arrowing budget per witness, seconds")->check(CLI::PositiveNumber);
  auto* c_rc = c_rg->add_subcommand("composite", "derived product bounds");

  Common tc;
  MinDegArgs md;
  auto* c_th = app.add_subcommand("thm1", "properties of minimal co-(P2+P3)-free (3,3)^e graphs");
  c_th->require_subcommand(1);
  auto* c_tc = c_th->add_subcommand("check", "check the five necessary properties");
  add_io(c_tc, tc);
  auto* c_tm = c_th->add_subcommand("mindeg", "apex extension sweep over small triangle-free graphs");
  c_tm->add_option("--max-n", md.max_n, "largest neighbourhood order")->check(CLI::Range(1, 9))->capture_default_str();
  c_tm->add_flag("--no-symmetry", md.no_symmetry, "sweep every colouring");
  c_tm->add_option("--out", md.c.out, "output file, - for stdout");
  add_workers(c_tm, md.c);

  CountsArgs ct;
  auto* c_ct = app.add_subcommand("counts", "graph counts per order");
  c_ct->add_option("--family", ct.family, "ll | ll-c4 | j4free")
      ->check(CLI::IsMember({"ll", "ll-c4", "j4free"}))
      ->capture_default_str();
  c_ct->add_option("--min-n", ct.min_n, "first order")->capture_default_str();
  c_ct->add_option("--max-n", ct.max_n, "last order")->required();
  c_ct->add_option("--out", ct.c.out, "output file, - for stdout");
  add_workers(c_ct, ct.c);

  FetchArgs fe;
  auto* c_fe = app.add_subcommand("fetch", "House of Graphs witness by id");
  c_fe->add_option("--id", fe.ids, "HoG id")->required();
  c_fe->add_flag("--online", fe.online, "query the network when no fixture exists");
  c_fe->add_option("--fixtures", fe.fixtures, "fixture directory");
  c_fe->add_option("--url", fe.url, "endpoint prefix (default $FOLKMAN_HOG_URL)");
  c_fe->add_option("--out", fe.c.out, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*c_gf) return run_gen_free(gf);
    if (*c_gl) return run_gen_ll(gl);
    if (*c_gp) return run_gen_poly(gp);
    if (*c_ar) return run_arrow(ar);
    if (*c_ex) return run_extend(ex);
    if (*c_mn) return run_minimize(mn);
    if (*c_se) return run_search(se);
    if (*c_rv) return run_registry_verify(rg);
    if (*c_rc) return run_registry_composite(rg);
    if (*c_tc) return run_thm1_check(tc);
    if (*c_tm) return run_thm1_mindeg(md);
    if (*c_ct) return run_counts(ct);
    if (*c_fe) return run_fetch(fe);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerify;
  }
  return kUsage;
}
