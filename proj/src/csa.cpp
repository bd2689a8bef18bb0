#include "vuza/csa.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "vuza/oracle.hpp"

namespace vuza {

namespace {

std::vector<int> support(const std::vector<std::uint8_t>& assignment, int n) {
  std::vector<int> b;
  for (int i = 0; i < n; ++i) {
    if (assignment[static_cast<std::size_t>(i)]) b.push_back(i);
  }
  return b;
}

TilingClass class_of(const Rhythm& b, EquivalenceMode mode) {
  TilingClass cls;
  const Rhythm rep = canonical_representative(b, mode);
  cls.representative = rep.elements();
  const auto orbit = orbit_index_sets(rep, mode);
  cls.anchored_orbit_size = static_cast<long long>(orbit.size());
  if (mode == EquivalenceMode::affine) {
    std::vector<std::vector<int>> reps;
    reps.reserve(orbit.size());
    for (const auto& member : orbit) {
      reps.push_back(canonical_representative(Rhythm(rep.period(), member),
                                              EquivalenceMode::translation)
                         .elements());
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    cls.translation_classes = static_cast<long long>(reps.size());
  }
  return cls;
}

}  // namespace

TilingEnumeration run_csa(const Rhythm& a, const CsaOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const ConstraintSystem sys = build_master_problem(a, opts.build);

  TilingEnumeration out;
  out.period = sys.n;
  out.rhythm = a.elements();
  out.complement_size = sys.n_b;
  out.mode = opts.mode;

  std::vector<LinearRow> cuts;
  while (true) {
    if (opts.max_solutions > 0 &&
        static_cast<long long>(out.solutions.size()) >= opts.max_solutions) {
      out.status = EnumerationStatus::solution_limit;
      break;
    }
    SolveLimits lim;
    if (opts.max_seconds > 0.0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      if (opts.max_seconds - elapsed <= 0.0) {
        out.status = EnumerationStatus::time_limit;
        break;
      }
      lim.max_seconds = opts.max_seconds - elapsed;
    }
    const SolveResult res = solve_with_cuts(sys, cuts, lim);
    out.iteration_seconds.push_back(res.stats.seconds);
    out.totals.add(res.stats);
    if (res.status == SolveStatus::timeout) {
      out.status = EnumerationStatus::time_limit;
      break;
    }
    if (res.status == SolveStatus::unsat) {
      out.status = EnumerationStatus::complete;
      break;
    }
    if (!check_assignment(sys, cuts, res.assignment)) {
      throw std::logic_error("run_csa: solver returned an invalid assignment");
    }
    const Rhythm b(sys.n, support(res.assignment, sys.n));
    if (!verify_tiling(a, b)) {
      throw std::logic_error("run_csa: solution fails the tiling check");
    }
    if (opts.build.aperiodicity && !is_aperiodic(b)) {
      throw std::logic_error("run_csa: solution fails the aperiodicity check");
    }
    out.solutions.push_back(b.elements());
    if (opts.cut_whole_orbit) {
      for (LinearRow& row : cuts_for_solution(sys, b, opts.mode)) {
        cuts.push_back(std::move(row));
      }
    } else {
      cuts.push_back(orbit_cut(sys, b.elements()));
    }
  }

  std::vector<std::vector<int>> seen;
  for (const auto& sol : out.solutions) {
    TilingClass cls = class_of(Rhythm(out.period, sol), opts.mode);
    if (std::find(seen.begin(), seen.end(), cls.representative) != seen.end())
      continue;
    seen.push_back(cls.representative);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

ExistsResult exists_aperiodic_complement(const Rhythm& a, double max_seconds) {
  ExistsResult out;
  if (a.period() % a.size() != 0) {
    out.answer = 0;
    return out;
  }
  const ConstraintSystem sys = build_master_problem(a, BuildOptions{});
  SolveLimits lim;
  lim.max_seconds = max_seconds;
  const SolveResult res = solve(sys, lim);
  out.stats = res.stats;
  switch (res.status) {
    case SolveStatus::sat: {
      const Rhythm b(sys.n, support(res.assignment, sys.n));
      if (!verify_tiling(a, b) || !is_aperiodic(b)) {
        throw std::logic_error(
            "exists_aperiodic_complement: witness fails verification");
      }
      out.answer = 1;
      out.witness = b.elements();
      break;
    }
    case SolveStatus::unsat:
      out.answer = 0;
      break;
    case SolveStatus::timeout:
      out.answer = -1;
      break;
  }
  return out;
}

}  // namespace vuza
