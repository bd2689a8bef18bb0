// Independent reference checks used to validate search results.  These take
// the direct combinatorial route and know nothing about the constraint
// system or the search.
#pragma once

#include <vector>

#include "vuza/rhythm.hpp"

namespace vuza {

/// True when every residue of Z_n is hit exactly once by a + b.  Checks the
/// residue cover directly and cross-checks it against the product of the
/// characteristic polynomials mod x^n - 1; disagreement throws.
bool verify_tiling(const Rhythm& a, const Rhythm& b);

/// All complements of `a` in Z_n, found by exact cover over the residues.
/// With `anchored` set, only complements containing 0 are returned.  Results
/// are sorted element lists in lexicographic order.  Exponential in general;
/// refuses n > 200.
std::vector<std::vector<int>> enumerate_complements_bruteforce(
    const Rhythm& a, bool anchored = false);

}  // namespace vuza
