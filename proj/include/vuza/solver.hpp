// Deterministic depth-first search over 0/1 assignments with integer bound
// propagation.  No randomness anywhere: identical systems produce identical
// assignments and identical statistics.
#pragma once

#include <cstdint>
#include <vector>

#include "vuza/model.hpp"

namespace vuza {

enum class SolveStatus { sat, unsat, timeout };

struct SearchStats {
  long long decisions = 0;
  long long propagations = 0;
  long long conflicts = 0;
  double seconds = 0.0;

  void add(const SearchStats& o) {
    decisions += o.decisions;
    propagations += o.propagations;
    conflicts += o.conflicts;
    seconds += o.seconds;
  }
};

struct SolveLimits {
  double max_seconds = 0.0;  // <= 0 means no limit
};

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  std::vector<std::uint8_t> assignment;  // per variable id, valid when sat
  SearchStats stats;
};

/// Branches on the lowest-id unassigned variable, value 1 first.  Since the
/// b block has the lowest ids and the r and u variables are functions of b
/// under the master-problem rows, this is in effect a search over b.
SolveResult solve(const ConstraintSystem& sys, const SolveLimits& lim = {});

SolveResult solve_with_cuts(const ConstraintSystem& sys,
                            const std::vector<LinearRow>& cuts,
                            const SolveLimits& lim = {});

/// Plain row-by-row evaluation, independent of the search machinery.
bool check_assignment(const ConstraintSystem& sys,
                      const std::vector<LinearRow>& cuts,
                      const std::vector<std::uint8_t>& values);

}  // namespace vuza
