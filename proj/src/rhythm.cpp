#include "vuza/rhythm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vuza {

namespace {

int mod(long long v, int n) {
  long long m = v % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

}  // namespace

Rhythm::Rhythm(int period, std::vector<int> elements) : n_(period) {
  if (n_ < 1) throw std::invalid_argument("rhythm period must be positive");
  if (elements.empty()) throw std::invalid_argument("rhythm must be nonempty");
  for (int& e : elements) e = mod(e, n_);
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("rhythm elements must be distinct mod n");
  elems_ = std::move(elements);
}

bool Rhythm::contains(int e) const {
  return std::binary_search(elems_.begin(), elems_.end(), mod(e, n_));
}

std::vector<int> maximal_divisors(int n) {
  if (n < 2) throw std::invalid_argument("maximal divisors need period >= 2");
  std::vector<int> out;
  int rest = n;
  for (int p = 2; static_cast<long long>(p) * p <= rest; ++p) {
    if (rest % p == 0) {
      out.push_back(n / p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) out.push_back(n / rest);
  return out;  // primes found ascending, so divisors are descending
}

bool is_periodic_mod(const Rhythm& r, int k) {
  int n = r.period();
  if (k <= 0 || k >= n)
    throw std::invalid_argument("period candidate must satisfy 0 < k < n");
  for (int e : r.elements())
    if (!r.contains(e + k)) return false;
  return true;
}

bool is_aperiodic(const Rhythm& r) {
  if (r.period() == 1) return true;
  for (int m : maximal_divisors(r.period()))
    if (is_periodic_mod(r, m)) return false;
  return true;
}

Rhythm affine_image(const Rhythm& r, int a, int t) {
  int n = r.period();
  if (std::gcd(mod(a, n), n) != 1)
    throw std::invalid_argument("affine multiplier must be a unit mod n");
  std::vector<int> out;
  out.reserve(r.size());
  for (int e : r.elements())
    out.push_back(mod(static_cast<long long>(a) * e + t, n));
  return Rhythm(n, std::move(out));
}

std::vector<std::vector<int>> orbit_index_sets(const Rhythm& r,
                                               EquivalenceMode mode) {
  if (!r.contains(0))
    throw std::invalid_argument("orbit enumeration needs an anchored rhythm");
  int n = r.period();
  std::set<std::vector<int>> sets;
  std::vector<int> units{1};
  if (mode == EquivalenceMode::affine) {
    units.clear();
    for (int a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) units.push_back(a);
    if (n == 1) units.push_back(1);
  }
  for (int a : units) {
    for (int x : r.elements()) {
      std::vector<int> img;
      img.reserve(r.size());
      for (int e : r.elements())
        img.push_back(mod(static_cast<long long>(a) * (e - x), n));
      std::sort(img.begin(), img.end());
      sets.insert(std::move(img));
    }
  }
  return {sets.begin(), sets.end()};
}

Rhythm canonical_representative(const Rhythm& r, EquivalenceMode mode) {
  // Any translate containing 0 has the same anchored orbit.
  Rhythm anchored = r.contains(0)
                        ? r
                        : affine_image(r, 1, -r.elements().front());
  auto orbit = orbit_index_sets(anchored, mode);
  return Rhythm(r.period(), orbit.front());
}

Rhythm parse_rhythm(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("rhythm text must look like \"n: e1,e2,...\"");
  auto parse_int = [](const std::string& s, int& out) {
    size_t pos = 0;
    try {
      out = std::stoi(s, &pos);
    } catch (const std::exception&) {
      return false;
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
    return pos == s.size();
  };
  auto trim = [](std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
  };
  int n = 0;
  if (!parse_int(trim(text.substr(0, colon)), n) || n < 1)
    throw std::invalid_argument("invalid rhythm period");
  std::vector<int> elems;
  std::stringstream rest(text.substr(colon + 1));
  std::string tok;
  int prev = -1;
  while (std::getline(rest, tok, ',')) {
    tok = trim(tok);
    int e = 0;
    if (tok.empty() || !parse_int(tok, e))
      throw std::invalid_argument("invalid rhythm element '" + tok + "'");
    if (e < 0 || e >= n)
      throw std::invalid_argument("rhythm element out of range [0, n)");
    if (e <= prev)
      throw std::invalid_argument("rhythm elements must be strictly increasing");
    prev = e;
    elems.push_back(e);
  }
  if (elems.empty()) throw std::invalid_argument("rhythm must be nonempty");
  return Rhythm(n, std::move(elems));
}

std::string format_rhythm(const Rhythm& r) {
  std::string out = std::to_string(r.period()) + ":";
  for (size_t i = 0; i < r.elements().size(); ++i)
    out += (i == 0 ? " " : ",") + std::to_string(r.elements()[i]);
  return out;
}

}  // namespace vuza
