// Integer polynomials with arbitrary-precision coefficients, characteristic
// polynomials of rhythms, cyclotomic polynomials and exact division.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "vuza/rhythm.hpp"

namespace vuza {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
 public:
  IntPoly() = default;  // the zero polynomial
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(int degree, BigInt c = 1);
  /// x^d - 1
  static IntPoly cycle(int d);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt eval_at_one() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim();
  std::vector<BigInt> c_;  // c_[k] is the coefficient of x^k; no trailing zeros
};

/// Sum of x^e over the elements of r.
IntPoly char_poly(const Rhythm& r);

/// The d-th cyclotomic polynomial, by exact division of x^d - 1 by the
/// cyclotomic polynomials of the proper divisors of d.  Requires d >= 1.
IntPoly cyclotomic(int d);

/// Quotient q / p when the division is exact over the integers.
std::optional<IntPoly> exact_div(const IntPoly& q, const IntPoly& p);

/// True iff p divides q over the integers.  Requires p nonzero.
bool divides(const IntPoly& p, const IntPoly& q);

/// Coefficients of p * q reduced modulo x^n - 1, as a vector of length n.
std::vector<BigInt> product_mod_cycle(const IntPoly& p, const IntPoly& q,
                                      int n);

}  // namespace vuza
