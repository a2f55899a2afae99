#pragma once

#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Exact element of a cyclotomic field Q(omega) of prime-power conductor,
// stored in the power basis 1, omega, ..., omega^{phi-1} reduced modulo
// Phi_{p^k}(x) = sum_{i<p} x^{i p^{k-1}}. The representation is canonical
// for a fixed conductor, and elements that happen to be rational are
// normalized down to conductor 1, so == is plain coefficient comparison
// after lifting to a common refinement. Conductors p^a and q^b with p != q
// have no common refinement here and mixing them is an error.
class CycNumber {
 public:
  CycNumber();  // zero

  static CycNumber from_rational(const Rational& q);
  static CycNumber root_of_unity(long long conductor, long long exponent);

  long long conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  Rational rational_part() const;  // throws "not rational" otherwise

  CycNumber conjugate() const;          // omega -> omega^{-1}
  CycNumber galois(long long t) const;  // omega -> omega^t, gcd(t,n) = 1
  CycNumber inverse() const;            // throws on zero

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  bool operator==(const CycNumber& rhs) const;
  bool operator!=(const CycNumber& rhs) const { return !(*this == rhs); }

  std::string str() const;  // diagnostics: "1/2 + 3*w^2 (conductor 9)"

 private:
  CycNumber(long long conductor, std::vector<Rational> coeffs);
  void normalize();              // reduce to conductor 1 when rational-valued
  std::vector<Rational> lifted_coeffs(long long conductor) const;

  long long conductor_;          // 1 or a prime power p^k
  std::vector<Rational> coeffs_; // length phi(conductor)
};

// e^{2 pi i j / order} for order = 1, 2, p^a or 2*p^a (odd p); these are the
// element orders whose roots of unity live in a prime-power conductor field.
// Anything else throws.
CycNumber cyc_root(long long order, long long exponent);

// [Q(x):Q], computed as the orbit size of x under omega -> omega^t.
long long galois_orbit_degree(const CycNumber& x);

long long euler_phi_prime_power(long long n);  // n = 1 or p^k

}  // namespace strata
