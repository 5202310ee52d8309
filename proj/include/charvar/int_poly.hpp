#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "charvar/int_matrix.hpp"

namespace charvar {

/// Integer polynomial, coefficients ascending by degree. The zero polynomial
/// has an empty coefficient vector; otherwise the leading coefficient is
/// nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly from(std::initializer_list<long> coeffs);
  static IntPoly x_power(std::size_t k);  // x^k

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& coeff(std::size_t k) const;  // zero beyond the degree
  const Integer& leading() const;             // requires nonzero

  Integer eval(const Integer& x) const;
  IntPoly derivative() const;

  /// Coefficient reversal x^deg * p(1/x). Requires p(0) != 0 to preserve the
  /// degree (otherwise trailing zeros are dropped by normalization).
  IntPoly reversed() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

  const std::vector<Integer>& coeffs() const { return c_; }

 private:
  std::vector<Integer> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Integer& c, const IntPoly& a);
IntPoly operator-(const IntPoly& a);

/// Exact division; throws std::logic_error if the division is not exact.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

/// Pseudo-remainder r with lc(den)^(deg num - deg den + 1) * num = q*den + r.
IntPoly pseudo_rem(const IntPoly& num, const IntPoly& den);

Integer content(const IntPoly& p);          // >= 0
IntPoly primitive_part(const IntPoly& p);   // positive leading coefficient

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly poly_gcd(IntPoly a, IntPoly b);

IntPoly squarefree_part(const IntPoly& p);  // p / gcd(p, p')

/// Resultant via the Sylvester matrix and exact Bareiss elimination.
Integer resultant(const IntPoly& a, const IntPoly& b);

unsigned long euler_totient(unsigned long d);

/// d-th cyclotomic polynomial, memoized.
IntPoly cyclotomic(unsigned long d);

/// Number of distinct real roots of p in the open interval (a, b), by a Sturm
/// chain over exact integer arithmetic. Requires p(a) != 0 and p(b) != 0.
int sturm_count_open(const IntPoly& p, const Integer& a, const Integer& b);

/// For self-reciprocal p (p == p.reversed()) of even degree 2m, the unique
/// integer q with p(x) = x^m q(x + 1/x). Unit-circle roots of p correspond to
/// real roots of q in (-2, 2).
IntPoly symmetric_reduce(const IntPoly& p);

}  // namespace charvar
