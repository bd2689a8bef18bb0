// The binary feasibility program whose solutions are the anchored tiling
// complements of a rhythm, plus orbit-blocking cuts and LP text export.
//
// For an inner rhythm a of Z_n with |a| = n_A and n_B = n / n_A the
// variables are
//   b_0..b_{n-1}      complement indicator,
//   r_0..r_{2n-2}     coefficients of p_a * p_b before reduction,
//   u^{(j)}_i         column saturation flags, one family per prime p_j of
//                     n dividing n_B, i in [0, n/p_j),
// and the rows are
//   c1   sum_{j<=i} a_{i-j} b_j - r_i = 0                 (i in [0, n))
//   c2   wrap products minus r_{i+n} = 0                  (i in [0, n-1))
//   c3   r_i + r_{i+n} = 1, with r_{2n-1} read as 0       (i in [0, n))
//   c4   optional replacement of the largest family: sum of b over
//        [0, n/p) bounded by n_B/p - 1
//   c5   sum_k b_{i+k*m_j} - p_j u^{(j)}_i <= p_j - 1
//   c6   sum_k b_{i+k*m_j} - p_j u^{(j)}_i >= 0
//   c7   sum_i u^{(j)}_i <= n_B/p_j - 1
//   anchor       b_0 = 1
//   cardinality  sum_i b_i = n_B (optional)
//   cut          orbit blocking rows added during enumeration
//
// c1..c3 force p_a * p_b = 1 + x + ... + x^{n-1} mod x^n - 1, i.e. tiling;
// each (c5, c6, c7) family forbids periodicity of b modulo n/p_j.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vuza/rhythm.hpp"

namespace vuza {

enum class VarKind : std::uint8_t { b, r, u };

struct Variable {
  VarKind kind;
  int index;   // i for b_i, r_i, u^{(j)}_i
  int family;  // 1-based position of p_j among the primes of n; 0 for b, r
};

enum class Relation : std::uint8_t { eq, le, ge };

enum class RowTag : std::uint8_t {
  c1, c2, c3, c4, c5, c6, c7, anchor, cardinality, cut
};

struct Term {
  int var;  // index into ConstraintSystem::variables
  long long coeff;
};

struct LinearRow {
  RowTag tag;
  Relation rel;
  long long rhs;
  std::vector<Term> terms;
};

struct BuildOptions {
  bool aperiodicity = true;
  bool include_cardinality = true;
  // Swap the largest aperiodicity family for the single row c4.  Sound but
  // incomplete: some aperiodic complements have no anchored translate
  // satisfying c4 (e.g. every anchored translate of {0,8,18,26,40,58} in
  // Z_72 keeps at least 3 elements below 36), so enumerations can miss
  // whole orbits.  Off by default; kept for size/speed experiments.
  bool replace_first_family = false;
};

struct ConstraintSystem {
  int n = 0;
  int n_a = 0;
  int n_b = 0;
  std::vector<Variable> variables;  // b block, then r block, then u families
  std::vector<LinearRow> rows;      // in tag order, then index order

  int var_count() const { return static_cast<int>(variables.size()); }
  std::string var_name(int id) const;
};

/// Requires 0 in a and |a| dividing the period.
ConstraintSystem build_master_problem(const Rhythm& a,
                                      const BuildOptions& opts = {});

/// The row blocking exactly the complements whose support is index_set:
/// sum of b over the set <= n_B - 1.  The set must consist of n_B distinct
/// indices in [0, n).
LinearRow orbit_cut(const ConstraintSystem& sys,
                    const std::vector<int>& index_set);

/// One cut per member of the solution's anchored orbit under mode.
std::vector<LinearRow> cuts_for_solution(const ConstraintSystem& sys,
                                         const Rhythm& b,
                                         EquivalenceMode mode);

/// Deterministic LP text (Minimize / Subject To / Binary / End) naming
/// variables b0.., r0.., u{j}_{i} and rows {tag}_{ordinal}.
std::string export_lp(const ConstraintSystem& sys);

/// Counts by tag and by variable kind, as a JSON object.
std::string system_summary_json(const ConstraintSystem& sys);

}  // namespace vuza
