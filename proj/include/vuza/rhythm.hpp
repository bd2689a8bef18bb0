// Rhythms as subsets of the cyclic group Z_n: periodicity tests, affine
// images, orbits under translation or affine equivalence, and the text format.
#pragma once

#include <string>
#include <vector>

namespace vuza {

/// How two rhythms are considered equivalent when grouping solutions.
/// translation: B ~ B + t.  affine: B ~ a*B + t for any unit a of Z_n.
enum class EquivalenceMode { translation, affine };

/// A nonempty subset of Z_n.  Elements are stored reduced mod n, sorted
/// ascending and distinct; the constructor normalises and validates.
class Rhythm {
 public:
  Rhythm(int period, std::vector<int> elements);

  int period() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  bool contains(int e) const;

  friend bool operator==(const Rhythm& a, const Rhythm& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }

 private:
  int n_;
  std::vector<int> elems_;
};

/// The divisors n/p of n, one per prime p of n, largest first.
/// A rhythm is periodic iff it is periodic modulo one of these.
/// Requires n >= 2.
std::vector<int> maximal_divisors(int n);

/// True iff r + k = r as subsets of Z_n.  Requires 0 < k < n.
bool is_periodic_mod(const Rhythm& r, int k);

/// True iff r is periodic modulo no k in (0, n).  Checks only the maximal
/// divisors of n, which is sufficient.
bool is_aperiodic(const Rhythm& r);

/// The rhythm a*r + t in Z_n.  Requires gcd(a, n) = 1.
Rhythm affine_image(const Rhythm& r, int a, int t);

/// All distinct index sets obtained from r by the transformations of the
/// given mode that map some element to 0 (i.e. the orbit members that
/// contain 0), each sorted, the list sorted lexicographically.  Stabilised
/// images are deduplicated, so the count equals |r| in translation mode
/// exactly when r is aperiodic.  Requires 0 in r.
std::vector<std::vector<int>> orbit_index_sets(const Rhythm& r,
                                               EquivalenceMode mode);

/// The lexicographically smallest orbit member containing 0.  Two rhythms
/// are equivalent under the mode iff their representatives are equal.
Rhythm canonical_representative(const Rhythm& r, EquivalenceMode mode);

/// Text form "n: e1,e2,...,ek" with elements strictly increasing in [0, n).
Rhythm parse_rhythm(const std::string& text);
std::string format_rhythm(const Rhythm& r);

}  // namespace vuza
