#include "vuza/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "vuza/polynomial.hpp"

namespace vuza {

bool verify_tiling(const Rhythm& a, const Rhythm& b) {
  if (a.period() != b.period()) {
    throw std::invalid_argument("verify_tiling: periods differ");
  }
  const int n = a.period();

  std::vector<int> cover(static_cast<std::size_t>(n), 0);
  for (int x : a.elements()) {
    for (int y : b.elements()) {
      ++cover[static_cast<std::size_t>((x + y) % n)];
    }
  }
  bool direct = true;
  for (int c : cover) {
    if (c != 1) {
      direct = false;
      break;
    }
  }

  const std::vector<BigInt> prod =
      product_mod_cycle(char_poly(a), char_poly(b), n);
  bool algebraic = true;
  for (const BigInt& c : prod) {
    if (c != 1) {
      algebraic = false;
      break;
    }
  }

  if (direct != algebraic) {
    throw std::logic_error("verify_tiling: internal routes disagree");
  }
  return direct;
}

namespace {

struct CoverSearch {
  int n = 0;
  std::vector<int> rhythm;
  std::vector<std::uint8_t> covered;
  std::vector<int> chosen;
  std::vector<std::vector<int>>* out = nullptr;

  bool placeable(int shift) const {
    for (int e : rhythm) {
      if (covered[static_cast<std::size_t>((e + shift) % n)]) return false;
    }
    return true;
  }

  void place(int shift) {
    for (int e : rhythm) covered[static_cast<std::size_t>((e + shift) % n)] = 1;
    chosen.push_back(shift);
  }

  void remove(int shift) {
    for (int e : rhythm) covered[static_cast<std::size_t>((e + shift) % n)] = 0;
    chosen.pop_back();
  }

  // In an exact cover each residue is hit by exactly one shift, so branching
  // on the smallest uncovered residue visits every complement exactly once.
  void search() {
    int uncovered = -1;
    for (int s = 0; s < n; ++s) {
      if (!covered[static_cast<std::size_t>(s)]) {
        uncovered = s;
        break;
      }
    }
    if (uncovered < 0) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out->push_back(std::move(sorted));
      return;
    }
    for (int e : rhythm) {
      const int shift = ((uncovered - e) % n + n) % n;
      if (!placeable(shift)) continue;
      place(shift);
      search();
      remove(shift);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_complements_bruteforce(const Rhythm& a,
                                                               bool anchored) {
  const int n = a.period();
  if (n > 200) {
    throw std::invalid_argument(
        "enumerate_complements_bruteforce: period above 200");
  }
  std::vector<std::vector<int>> out;
  const int size = static_cast<int>(a.elements().size());
  if (n % size != 0) return out;

  CoverSearch cs;
  cs.n = n;
  cs.rhythm = a.elements();
  cs.covered.assign(static_cast<std::size_t>(n), 0);
  cs.out = &out;
  if (anchored) {
    cs.place(0);
    cs.search();
    cs.remove(0);
  } else {
    cs.search();
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vuza
