// Cutting enumeration of tiling complements.  Each round solves the current
// system, records the complement found, excludes it (either alone or with its
// whole equivalence orbit) with fresh cut rows and solves again, until the
// system is infeasible or a limit is hit.
#pragma once

#include <vector>

#include "vuza/model.hpp"
#include "vuza/rhythm.hpp"
#include "vuza/solver.hpp"

namespace vuza {

struct CsaOptions {
  EquivalenceMode mode = EquivalenceMode::translation;
  /// Cut every anchored member of the orbit of each solution (one solve per
  /// equivalence class).  When off, only the found set itself is cut, so
  /// every anchored solution is visited individually.
  bool cut_whole_orbit = true;
  long long max_solutions = 0;  // stop after this many recorded solutions; 0 = no limit
  double max_seconds = 0.0;     // wall-clock budget for the whole run; 0 = no limit
  BuildOptions build;
};

enum class EnumerationStatus { complete, solution_limit, time_limit };

struct TilingClass {
  std::vector<int> representative;  // lexicographically least anchored member
  long long anchored_orbit_size = 0;
  /// Number of translation classes contained in the orbit; 1 when the
  /// enumeration itself runs modulo translation.
  long long translation_classes = 1;
};

struct TilingEnumeration {
  int period = 0;
  std::vector<int> rhythm;
  int complement_size = 0;
  EquivalenceMode mode = EquivalenceMode::translation;
  EnumerationStatus status = EnumerationStatus::complete;
  std::vector<std::vector<int>> solutions;  // anchored, in discovery order
  std::vector<TilingClass> classes;
  std::vector<double> iteration_seconds;  // one entry per solve call
  SearchStats totals;
};

/// Requires 0 to be an element of `a`.  Every recorded solution is
/// re-verified against the tiling oracle; with the aperiodicity rows enabled
/// it is also checked to be aperiodic.  A verification failure throws.
TilingEnumeration run_csa(const Rhythm& a, const CsaOptions& opts = {});

struct ExistsResult {
  int answer = -1;  // 1 yes, 0 no, -1 undecided within the time budget
  std::vector<int> witness;  // a complement, present when answer is 1
  SearchStats stats;
};

/// Feasibility of the master problem with the aperiodicity rows: is there an
/// aperiodic complement of `a`?
ExistsResult exists_aperiodic_complement(const Rhythm& a,
                                         double max_seconds = 0.0);

}  // namespace vuza
