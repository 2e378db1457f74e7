#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace folkman::sat {

enum class Result { kSat, kUnsat, kUnknown };

using Clock = std::chrono::steady_clock;

/// Conflict-driven DPLL solver: two watched literals, first-UIP learning,
/// VSIDS branching, phase saving, Luby restarts. Literals use DIMACS
/// convention (1-based, negative for negation).
class Solver {
 public:
  explicit Solver(int num_vars = 0) { ensure_vars(num_vars); }

  int num_vars() const { return static_cast<int>(assign_.size()); }

  /// Adds a clause at decision level 0. Returns false once the formula is
  /// known to be unsatisfiable.
  bool add_clause(std::span<const int> dimacs) {
    if (unsat_) return false;
    backtrack(0);
    std::vector<int> lits;
    for (int d : dimacs) {
      if (d == 0) throw std::invalid_argument("literal 0 inside clause");
      ensure_vars(std::abs(d));
      lits.push_back(to_lit(d));
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == (lits[i] ^ 1)) return true;  // tautology
      int v = value(lits[i]);
      if (v == 1) return true;
      if (v == 0) continue;
      kept.push_back(lits[i]);
    }
    if (kept.empty()) return !(unsat_ = true);
    if (kept.size() == 1) {
      enqueue(kept[0], -1);
      if (propagate() >= 0) unsat_ = true;
      return !unsat_;
    }
    attach(std::move(kept), false);
    return true;
  }
  bool add_clause(std::initializer_list<int> dimacs) {
    return add_clause(std::span<const int>(dimacs.begin(), dimacs.size()));
  }

  Result solve(std::optional<Clock::time_point> deadline = std::nullopt, std::int64_t conflict_limit = -1) {
    if (unsat_) return Result::kUnsat;
    backtrack(0);
    if (propagate() >= 0) {
      unsat_ = true;
      return Result::kUnsat;
    }
    std::int64_t conflicts = 0;
    int restart_index = 0;
    std::int64_t restart_budget = luby(restart_index) * 64;
    std::size_t max_learnts = clauses_.size() / 3 + 2000;
    while (true) {
      int confl = propagate();
      if (confl >= 0) {
        ++conflicts;
        if (level() == 0) {
          unsat_ = true;
          return Result::kUnsat;
        }
        int back = 0;
        std::vector<int> learnt = analyze(confl, back);
        backtrack(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          int ci = attach(std::move(learnt), true);
          enqueue(clauses_[ci].lits[0], ci);
          ++num_learnts_;
        }
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
        if ((conflicts & 255) == 0 && deadline && Clock::now() >= *deadline) {
          backtrack(0);
          return Result::kUnknown;
        }
        if (conflict_limit >= 0 && conflicts >= conflict_limit) {
          backtrack(0);
          return Result::kUnknown;
        }
        if (--restart_budget <= 0) {
          backtrack(0);
          restart_budget = luby(++restart_index) * 64;
          if (num_learnts_ > max_learnts) {
            reduce_learnts();
            max_learnts += max_learnts / 10;
          }
        }
        continue;
      }
      int next = pick_branch();
      if (next < 0) {
        model_.assign(assign_.size(), false);
        for (std::size_t v = 0; v < assign_.size(); ++v) model_[v] = assign_[v] == 1;
        backtrack(0);
        return Result::kSat;
      }
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(next, -1);
    }
  }

  /// Model value of a 1-based variable after kSat.
  bool model_value(int var) const { return model_[static_cast<std::size_t>(var - 1)]; }
  const std::vector<bool>& model() const { return model_; }

 private:
  struct Clause {
    std::vector<int> lits;
    bool learnt = false;
    bool deleted = false;
    double activity = 0;
  };

  static int to_lit(int dimacs) { return dimacs > 0 ? 2 * (dimacs - 1) : 2 * (-dimacs - 1) + 1; }
  static int var_of(int lit) { return lit >> 1; }

  void ensure_vars(int n) {
    while (static_cast<int>(assign_.size()) < n) {
      int v = static_cast<int>(assign_.size());
      assign_.push_back(-1);
      level_.push_back(0);
      reason_.push_back(-1);
      activity_.push_back(0);
      phase_.push_back(0);
      seen_.push_back(0);
      heap_index_.push_back(-1);
      watches_.emplace_back();
      watches_.emplace_back();
      heap_insert(v);
    }
  }

  // 1 true, 0 false, -1 unassigned
  int value(int lit) const {
    int a = assign_[var_of(lit)];
    return a < 0 ? -1 : a ^ (lit & 1);
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(int lit, int reason) {
    int v = var_of(lit);
    assign_[v] = (lit & 1) ? 0 : 1;
    level_[v] = level();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  int attach(std::vector<int> lits, bool learnt) {
    int ci = static_cast<int>(clauses_.size());
    watches_[lits[0]].push_back(ci);
    watches_[lits[1]].push_back(ci);
    clauses_.push_back({std::move(lits), learnt, false, 0});
    return ci;
  }

  // Returns conflicting clause index or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      const int p = trail_[qhead_++];
      const int false_lit = p ^ 1;
      std::vector<int>& ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        const int ci = ws[i++];
        Clause& c = clauses_[ci];
        if (c.deleted) continue;
        if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
        if (value(c.lits[0]) == 1) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.lits.size(); ++k) {
          if (value(c.lits[k]) != 0) {
            std::swap(c.lits[1], c.lits[k]);
            watches_[c.lits[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = ci;
        if (value(c.lits[0]) == 0) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c.lits[0], ci);
      }
      ws.resize(j);
    }
    return -1;
  }

  std::vector<int> analyze(int confl, int& back_level) {
    std::vector<int> learnt{-1};
    int path = 0;
    int p = -1;
    int idx = static_cast<int>(trail_.size()) - 1;
    do {
      Clause& c = clauses_[confl];
      if (c.learnt) bump_clause(c);
      for (std::size_t k = (p < 0 ? 0 : 1); k < c.lits.size(); ++k) {
        int q = c.lits[k];
        int v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump_var(v);
        if (level_[v] >= level()) ++path;
        else learnt.push_back(q);
      }
      while (!seen_[var_of(trail_[idx])]) --idx;
      p = trail_[idx--];
      confl = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = p ^ 1;

    // drop literals implied by the rest of the clause
    std::vector<int> minimized{learnt[0]};
    for (std::size_t k = 1; k < learnt.size(); ++k) {
      int v = var_of(learnt[k]);
      int r = reason_[v];
      bool redundant = r >= 0;
      if (redundant) {
        for (int q : clauses_[r].lits) {
          int w = var_of(q);
          if (w == v) continue;
          if (!seen_[w] && level_[w] > 0) {
            redundant = false;
            break;
          }
        }
      }
      if (!redundant) minimized.push_back(learnt[k]);
    }
    for (std::size_t k = 1; k < learnt.size(); ++k) seen_[var_of(learnt[k])] = 0;

    back_level = 0;
    if (minimized.size() > 1) {
      std::size_t best = 1;
      for (std::size_t k = 2; k < minimized.size(); ++k)
        if (level_[var_of(minimized[k])] > level_[var_of(minimized[best])]) best = k;
      std::swap(minimized[1], minimized[best]);
      back_level = level_[var_of(minimized[1])];
    }
    return minimized;
  }

  void backtrack(int target) {
    if (level() <= target) return;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[target]; --i) {
      int v = var_of(trail_[i]);
      phase_[v] = assign_[v];
      assign_[v] = -1;
      reason_[v] = -1;
      if (heap_index_[v] < 0) heap_insert(v);
    }
    trail_.resize(trail_lim_[target]);
    trail_lim_.resize(target);
    qhead_ = trail_.size();
  }

  int pick_branch() {
    while (!heap_.empty()) {
      int v = heap_pop();
      if (assign_[v] < 0) return 2 * v + (phase_[v] == 1 ? 0 : 1);
    }
    return -1;
  }

  void bump_var(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    if (heap_index_[v] >= 0) sift_up(heap_index_[v]);
  }

  void bump_clause(Clause& c) {
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
      for (auto& cl : clauses_)
        if (cl.learnt) cl.activity *= 1e-20;
      clause_inc_ *= 1e-20;
    }
  }

  bool locked(int ci) const {
    const Clause& c = clauses_[ci];
    int v = var_of(c.lits[0]);
    return reason_[v] == ci && value(c.lits[0]) == 1;
  }

  void reduce_learnts() {
    std::vector<int> learnts;
    for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci)
      if (clauses_[ci].learnt && !clauses_[ci].deleted && clauses_[ci].lits.size() > 2) learnts.push_back(ci);
    std::sort(learnts.begin(), learnts.end(),
              [&](int a, int b) { return clauses_[a].activity < clauses_[b].activity; });
    for (std::size_t k = 0; k < learnts.size() / 2; ++k) {
      int ci = learnts[k];
      if (locked(ci)) continue;
      clauses_[ci].deleted = true;
      clauses_[ci].lits.clear();
      clauses_[ci].lits.shrink_to_fit();
      --num_learnts_;
    }
  }

  static std::int64_t luby(int i) {
    std::int64_t size = 1;
    int seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    std::int64_t x = i;
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return std::int64_t{1} << seq;
  }

  // max-heap on activity
  bool heap_less(int a, int b) const { return activity_[a] > activity_[b]; }
  void heap_insert(int v) {
    heap_index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(heap_index_[v]);
  }
  void sift_up(int i) {
    int v = heap_[i];
    while (i > 0) {
      int parent = (i - 1) >> 1;
      if (!heap_less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      heap_index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    heap_index_[v] = i;
  }
  int heap_pop() {
    int top = heap_[0];
    heap_index_[top] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      int i = 0;
      const int n = static_cast<int>(heap_.size());
      while (true) {
        int child = 2 * i + 1;
        if (child >= n) break;
        if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], last)) break;
        heap_[i] = heap_[child];
        heap_index_[heap_[i]] = i;
        i = child;
      }
      heap_[i] = last;
      heap_index_[last] = i;
    }
    return top;
  }

  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> assign_, level_, reason_, phase_;
  std::vector<double> activity_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> heap_, heap_index_;
  std::vector<int> trail_, trail_lim_;
  std::size_t qhead_ = 0;
  std::size_t num_learnts_ = 0;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  bool unsat_ = false;
  std::vector<bool> model_;
};

}  // namespace folkman::sat
