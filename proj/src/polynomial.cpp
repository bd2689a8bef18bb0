#include "vuza/polynomial.hpp"

#include <map>
#include <stdexcept>

namespace vuza {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(int degree, BigInt c) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::cycle(int d) {
  if (d < 1) throw std::invalid_argument("cycle order must be >= 1");
  std::vector<BigInt> v(d + 1);
  v[0] = -1;
  v[d] = 1;
  return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

BigInt IntPoly::eval_at_one() const {
  BigInt s = 0;
  for (const BigInt& c : c_) s += c;
  return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) {
    if (k < a.c_.size()) v[k] += a.c_[k];
    if (k < b.c_.size()) v[k] += b.c_[k];
  }
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < v.size(); ++k) {
    if (k < a.c_.size()) v[k] += a.c_[k];
    if (k < b.c_.size()) v[k] -= b.c_[k];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly char_poly(const Rhythm& r) {
  std::vector<BigInt> v(r.elements().back() + 1);
  for (int e : r.elements()) v[e] = 1;
  return IntPoly(std::move(v));
}

namespace {

IntPoly cyclotomic_rec(int d, std::map<int, IntPoly>& memo) {
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  IntPoly phi;
  if (d == 1) {
    phi = IntPoly({-1, 1});
  } else {
    IntPoly rest = IntPoly({1});
    for (int e = 1; e < d; ++e)
      if (d % e == 0) rest = rest * cyclotomic_rec(e, memo);
    auto q = exact_div(IntPoly::cycle(d), rest);
    if (!q) throw std::logic_error("cyclotomic division was not exact");
    phi = *q;
  }
  memo.emplace(d, phi);
  return phi;
}

}  // namespace

IntPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  std::map<int, IntPoly> memo;
  return cyclotomic_rec(d, memo);
}

std::optional<IntPoly> exact_div(const IntPoly& q, const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (q.is_zero()) return IntPoly();
  if (q.degree() < p.degree()) return std::nullopt;
  std::vector<BigInt> rem = q.coeffs();
  const BigInt& lead = p.coeffs().back();
  std::vector<BigInt> quot(q.degree() - p.degree() + 1);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    BigInt top = rem[k + p.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt f = top / lead;
    quot[k] = f;
    for (int j = 0; j <= p.degree(); ++j) rem[k + j] -= f * p.coeffs()[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

bool divides(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) return true;
  return exact_div(q, p).has_value();
}

std::vector<BigInt> product_mod_cycle(const IntPoly& p, const IntPoly& q,
                                      int n) {
  if (n < 1) throw std::invalid_argument("cycle length must be >= 1");
  std::vector<BigInt> out(n);
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[(i + j) % n] += a[i] * b[j];
  }
  return out;
}

}  // namespace vuza
