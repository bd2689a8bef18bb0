// Cyclotomic divisor bookkeeping for rhythms (the classical tiling
// conditions on the sets R_A and S_A) and the good/bad classification of
// cyclic group orders.
#pragma once

#include <string>
#include <vector>

#include "vuza/rhythm.hpp"

namespace vuza {

/// Which cyclotomic indices are tried when computing R_A.
/// divisors: the divisors of the period (the right set for tiling queries).
/// full: every d with 2 <= d <= deg(p_A) + n.
enum class ScanRange { divisors, full };

struct CMReport {
  std::vector<long long> r_set;  // d with Phi_d dividing the char polynomial
  std::vector<long long> s_set;  // the prime powers in r_set
  bool t1 = false;  // |A| equals the product of the primes under s_set
  bool t2 = false;  // products over distinct primes of s_set stay in r_set
  std::vector<long long> t2_witness;  // first failing subset; empty if t2
};

CMReport cm_report(const Rhythm& r, ScanRange range = ScanRange::divisors);

/// Good orders are those where every tiling has a periodic factor, so no
/// aperiodic pair exists; the remaining (bad) orders admit them.
struct GroupOrderClass {
  long long order = 0;
  bool good = true;
  std::string pattern;  // matched family for good orders, a witness
                        // decomposition n1*n2*m1*m2*k for bad ones
};

GroupOrderClass classify_order(long long n);

}  // namespace vuza
