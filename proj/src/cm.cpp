#include "vuza/cm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "vuza/polynomial.hpp"

namespace vuza {

namespace {

std::map<long long, int> factorize(long long n) {
  std::map<long long, int> f;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

bool is_prime_power(long long d, long long& base) {
  auto f = factorize(d);
  if (f.size() != 1) return false;
  base = f.begin()->first;
  return true;
}

// Depth-first search over subsets of s (ascending) choosing at most one
// power per prime; reports the first subset of size >= 2 whose product is
// missing from r.  Subsets are visited in lexicographic order.
bool t2_scan(const std::vector<long long>& s,
             const std::vector<long long>& bases,
             const std::vector<long long>& r_sorted, size_t from,
             std::vector<long long>& chosen,
             std::vector<long long>& chosen_bases, long long product,
             std::vector<long long>& witness) {
  if (chosen.size() >= 2 &&
      !std::binary_search(r_sorted.begin(), r_sorted.end(), product)) {
    witness = chosen;
    return true;
  }
  for (size_t i = from; i < s.size(); ++i) {
    if (std::find(chosen_bases.begin(), chosen_bases.end(), bases[i]) !=
        chosen_bases.end())
      continue;
    chosen.push_back(s[i]);
    chosen_bases.push_back(bases[i]);
    if (t2_scan(s, bases, r_sorted, i + 1, chosen, chosen_bases,
                product * s[i], witness))
      return true;
    chosen.pop_back();
    chosen_bases.pop_back();
  }
  return false;
}

}  // namespace

CMReport cm_report(const Rhythm& r, ScanRange range) {
  CMReport rep;
  IntPoly p = char_poly(r);
  std::vector<long long> candidates;
  long long n = r.period();
  if (range == ScanRange::divisors) {
    for (long long d = 2; d <= n; ++d)
      if (n % d == 0) candidates.push_back(d);
  } else {
    for (long long d = 2; d <= p.degree() + n; ++d) candidates.push_back(d);
  }
  for (long long d : candidates) {
    if (divides(cyclotomic(static_cast<int>(d)), p)) rep.r_set.push_back(d);
  }
  BigInt base_product = 1;
  std::vector<long long> bases;
  for (long long d : rep.r_set) {
    long long base = 0;
    if (is_prime_power(d, base)) {
      rep.s_set.push_back(d);
      bases.push_back(base);
      base_product *= base;
    }
  }
  rep.t1 = base_product == r.size();
  std::vector<long long> chosen, chosen_bases;
  rep.t2 = !t2_scan(rep.s_set, bases, rep.r_set, 0, chosen, chosen_bases, 1,
                    rep.t2_witness);
  return rep;
}

GroupOrderClass classify_order(long long n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  GroupOrderClass out;
  out.order = n;
  auto f = factorize(n);
  std::vector<int> exps;
  for (auto& [p, e] : f) exps.push_back(e);
  std::sort(exps.rbegin(), exps.rend());
  switch (exps.size()) {
    case 0:
      out.good = true;
      out.pattern = "1";
      return out;
    case 1:
      out.good = true;
      out.pattern = "p^a";
      return out;
    case 2:
      if (exps[1] == 1) {
        out.good = true;
        out.pattern = exps[0] == 1 ? "p q" : "p^a q";
        return out;
      }
      if (exps[0] == 2 && exps[1] == 2) {
        out.good = true;
        out.pattern = "p^2 q^2";
        return out;
      }
      break;
    case 3:
      if (exps[0] == 1) {
        out.good = true;
        out.pattern = "p q r";
        return out;
      }
      if (exps[0] == 2 && exps[1] == 1) {
        out.good = true;
        out.pattern = "p^2 q r";
        return out;
      }
      break;
    case 4:
      if (exps[0] == 1) {
        out.good = true;
        out.pattern = "p q r s";
        return out;
      }
      break;
    default:
      break;
  }
  // Bad order: exhibit n = (n1*n2)*(m1*m2)*k with every factor >= 2 and
  // gcd(n1*n2, m1*m2) = 1.
  out.good = false;
  auto split = [](long long d, long long& x, long long& y) {
    for (long long t = 2; t * t <= d; ++t)
      if (d % t == 0) {
        x = t;
        y = d / t;
        return true;
      }
    return false;
  };
  for (long long d1 = 4; d1 <= n; ++d1) {
    if (n % d1 != 0) continue;
    long long n1, n2;
    if (!split(d1, n1, n2)) continue;
    for (long long d2 = 4; d2 <= n / d1; ++d2) {
      if ((n / d1) % d2 != 0 || std::gcd(d1, d2) != 1) continue;
      long long m1, m2;
      if (!split(d2, m1, m2)) continue;
      long long k = n / d1 / d2;
      if (k < 2) continue;
      out.pattern = "(" + std::to_string(n1) + "*" + std::to_string(n2) +
                    ")*(" + std::to_string(m1) + "*" + std::to_string(m2) +
                    ")*" + std::to_string(k);
      return out;
    }
  }
  throw std::logic_error("no decomposition found for a bad order");
}

}  // namespace vuza
