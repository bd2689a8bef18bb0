#include "vuza/solver.hpp"

#include <chrono>
#include <cstddef>

namespace vuza {

namespace {

using Clock = std::chrono::steady_clock;

struct Occurrence {
  int row;
  long long coeff;
};

struct Decision {
  int var;
  std::size_t trail_pos;
  bool flipped;
};

// Bounds-consistency search.  Every row keeps [lo, hi], the range the left
// side can still reach given the partial assignment.  A row outside its
// feasible range is a conflict; a variable whose two values leave disjoint
// feasible ranges is forced.
class Searcher {
 public:
  Searcher(const ConstraintSystem& sys, const std::vector<LinearRow>& cuts)
      : nvars_(sys.var_count()) {
    rows_.reserve(sys.rows.size() + cuts.size());
    for (const auto& r : sys.rows) rows_.push_back(&r);
    for (const auto& r : cuts) rows_.push_back(&r);
    const int m = static_cast<int>(rows_.size());
    lo_.assign(m, 0);
    hi_.assign(m, 0);
    occ_.assign(nvars_, {});
    for (int i = 0; i < m; ++i) {
      for (const Term& t : rows_[static_cast<std::size_t>(i)]->terms) {
        occ_[static_cast<std::size_t>(t.var)].push_back({i, t.coeff});
        if (t.coeff < 0)
          lo_[static_cast<std::size_t>(i)] += t.coeff;
        else
          hi_[static_cast<std::size_t>(i)] += t.coeff;
      }
    }
    val_.assign(static_cast<std::size_t>(nvars_), -1);
    in_queue_.assign(static_cast<std::size_t>(m), 0);
  }

  SolveResult run(const SolveLimits& lim) {
    const auto start = Clock::now();
    has_deadline_ = lim.max_seconds > 0.0;
    if (has_deadline_) {
      deadline_ = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(lim.max_seconds));
    }
    SolveResult res;
    res.status = search();
    res.stats = stats_;
    res.stats.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (res.status == SolveStatus::sat) {
      res.assignment.assign(val_.begin(), val_.end());
    }
    return res;
  }

 private:
  SolveStatus search() {
    for (std::size_t i = 0; i < rows_.size(); ++i) enqueue(static_cast<int>(i));
    if (!propagate())
      return timed_out_ ? SolveStatus::timeout : SolveStatus::unsat;
    while (true) {
      const int var = next_unassigned();
      if (var < 0) return SolveStatus::sat;
      decisions_.push_back({var, trail_.size(), false});
      ++stats_.decisions;
      assign(var, 1);
      while (!propagate()) {
        if (timed_out_) return SolveStatus::timeout;
        ++stats_.conflicts;
        bool resumed = false;
        while (!decisions_.empty()) {
          Decision& dec = decisions_.back();
          undo_to(dec.trail_pos);
          if (!dec.flipped) {
            dec.flipped = true;
            ++stats_.decisions;
            assign(dec.var, 0);
            resumed = true;
            break;
          }
          decisions_.pop_back();
        }
        if (!resumed) return SolveStatus::unsat;
      }
    }
  }

  // All variables below the most recent decision variable were assigned when
  // that decision was taken and stay assigned until it is undone, so the scan
  // can start just past it.
  int next_unassigned() const {
    int from = decisions_.empty() ? 0 : decisions_.back().var + 1;
    for (int v = from; v < nvars_; ++v) {
      if (val_[static_cast<std::size_t>(v)] < 0) return v;
    }
    return -1;
  }

  void assign(int var, std::int8_t value) {
    val_[static_cast<std::size_t>(var)] = value;
    trail_.push_back(var);
    for (const Occurrence& o : occ_[static_cast<std::size_t>(var)]) {
      const auto row = static_cast<std::size_t>(o.row);
      if (o.coeff > 0) {
        if (value)
          lo_[row] += o.coeff;
        else
          hi_[row] -= o.coeff;
      } else {
        if (value)
          hi_[row] += o.coeff;
        else
          lo_[row] -= o.coeff;
      }
      enqueue(o.row);
    }
  }

  void undo_to(std::size_t trail_pos) {
    while (trail_.size() > trail_pos) {
      const int var = trail_.back();
      trail_.pop_back();
      const std::int8_t value = val_[static_cast<std::size_t>(var)];
      val_[static_cast<std::size_t>(var)] = -1;
      for (const Occurrence& o : occ_[static_cast<std::size_t>(var)]) {
        const auto row = static_cast<std::size_t>(o.row);
        if (o.coeff > 0) {
          if (value)
            lo_[row] -= o.coeff;
          else
            hi_[row] += o.coeff;
        } else {
          if (value)
            hi_[row] -= o.coeff;
          else
            lo_[row] += o.coeff;
        }
      }
    }
  }

  void enqueue(int row) {
    if (!in_queue_[static_cast<std::size_t>(row)]) {
      in_queue_[static_cast<std::size_t>(row)] = 1;
      queue_.push_back(row);
    }
  }

  void clear_queue() {
    for (int row : queue_) in_queue_[static_cast<std::size_t>(row)] = 0;
    queue_.clear();
  }

  static bool range_ok(Relation rel, long long lo, long long hi,
                       long long rhs) {
    switch (rel) {
      case Relation::eq:
        return lo <= rhs && rhs <= hi;
      case Relation::le:
        return lo <= rhs;
      case Relation::ge:
        return hi >= rhs;
    }
    return false;
  }

  static bool settled(Relation rel, long long lo, long long hi,
                      long long rhs) {
    switch (rel) {
      case Relation::eq:
        return lo == rhs && hi == rhs;
      case Relation::le:
        return hi <= rhs;
      case Relation::ge:
        return lo >= rhs;
    }
    return false;
  }

  bool propagate() {
    while (!queue_.empty()) {
      if ((++ticks_ & 4095) == 0 && has_deadline_ &&
          Clock::now() >= deadline_) {
        timed_out_ = true;
        clear_queue();
        return false;
      }
      const int idx = queue_.back();
      queue_.pop_back();
      in_queue_[static_cast<std::size_t>(idx)] = 0;
      const LinearRow& row = *rows_[static_cast<std::size_t>(idx)];
      const auto ridx = static_cast<std::size_t>(idx);
      if (!range_ok(row.rel, lo_[ridx], hi_[ridx], row.rhs)) {
        clear_queue();
        return false;
      }
      if (settled(row.rel, lo_[ridx], hi_[ridx], row.rhs)) continue;
      for (const Term& t : row.terms) {
        if (val_[static_cast<std::size_t>(t.var)] >= 0) continue;
        const long long up = t.coeff > 0 ? t.coeff : 0;
        const long long dn = t.coeff < 0 ? t.coeff : 0;
        const bool ok1 =
            range_ok(row.rel, lo_[ridx] + up, hi_[ridx] + dn, row.rhs);
        const bool ok0 =
            range_ok(row.rel, lo_[ridx] - dn, hi_[ridx] - up, row.rhs);
        if (!ok1 && !ok0) {
          clear_queue();
          return false;
        }
        if (ok1 == ok0) continue;
        ++stats_.propagations;
        assign(t.var, ok1 ? 1 : 0);
      }
    }
    return true;
  }

  int nvars_;
  std::vector<const LinearRow*> rows_;
  std::vector<std::vector<Occurrence>> occ_;
  std::vector<long long> lo_, hi_;
  std::vector<std::int8_t> val_;
  std::vector<int> trail_;
  std::vector<Decision> decisions_;
  std::vector<int> queue_;
  std::vector<std::uint8_t> in_queue_;
  SearchStats stats_;
  unsigned long long ticks_ = 0;
  bool has_deadline_ = false;
  bool timed_out_ = false;
  Clock::time_point deadline_{};
};

}  // namespace

SolveResult solve(const ConstraintSystem& sys, const SolveLimits& lim) {
  return solve_with_cuts(sys, {}, lim);
}

SolveResult solve_with_cuts(const ConstraintSystem& sys,
                            const std::vector<LinearRow>& cuts,
                            const SolveLimits& lim) {
  Searcher searcher(sys, cuts);
  return searcher.run(lim);
}

bool check_assignment(const ConstraintSystem& sys,
                      const std::vector<LinearRow>& cuts,
                      const std::vector<std::uint8_t>& values) {
  if (static_cast<int>(values.size()) != sys.var_count()) return false;
  for (std::uint8_t v : values) {
    if (v > 1) return false;
  }
  auto holds = [&](const LinearRow& row) {
    long long sum = 0;
    for (const Term& t : row.terms) {
      if (values[static_cast<std::size_t>(t.var)]) sum += t.coeff;
    }
    switch (row.rel) {
      case Relation::eq:
        return sum == row.rhs;
      case Relation::le:
        return sum <= row.rhs;
      case Relation::ge:
        return sum >= row.rhs;
    }
    return false;
  };
  for (const LinearRow& row : sys.rows) {
    if (!holds(row)) return false;
  }
  for (const LinearRow& row : cuts) {
    if (!holds(row)) return false;
  }
  return true;
}

}  // namespace vuza
