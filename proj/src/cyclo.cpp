#include "strata/cyclo.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strata {

namespace {

// Returns p for n = p^k (k >= 1); throws if n is not a prime power.
long long prime_of(long long n) {
  if (n < 2) throw std::invalid_argument("conductor must be >= 2");
  long long p = 0;
  long long m = n;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      while (m % d == 0) m /= d;
      break;
    }
  }
  if (p == 0) p = m, m = 1;
  if (m != 1) throw std::invalid_argument("conductor must be a prime power");
  return p;
}

using Poly = std::vector<Rational>;  // coefficient list, index = degree

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

// Remainder of f modulo the monic divisor g.
Poly poly_rem(Poly f, const Poly& g) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    Rational c = f[i];
    if (c == 0) continue;
    f[i] = 0;
    for (int j = 0; j < dg; ++j) f[i - dg + j] -= c * g[j];
  }
  f.resize(dg > 0 ? dg : 1);
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return Poly{Rational(0)};
  Poly c(da + db + 1, Rational(0));
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly cyclotomic_poly(long long p, long long n) {
  // Phi_{p^k}(x) = sum_{i<p} x^{i*p^{k-1}}, degree phi = (p-1)*p^{k-1}.
  long long step = n / p;
  Poly f((p - 1) * step + 1, Rational(0));
  for (long long i = 0; i < p; ++i) f[i * step] = 1;
  return f;
}

}  // namespace

long long euler_phi_prime_power(long long n) {
  if (n == 1) return 1;
  long long p = prime_of(n);
  return n - n / p;
}

CycNumber::CycNumber() : conductor_(1), coeffs_{Rational(0)} {}

CycNumber::CycNumber(long long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  normalize();
}

CycNumber CycNumber::from_rational(const Rational& q) {
  return CycNumber(1, {q});
}

CycNumber CycNumber::root_of_unity(long long conductor, long long exponent) {
  if (conductor == 1) return from_rational(1);
  long long p = prime_of(conductor);
  long long e = ((exponent % conductor) + conductor) % conductor;
  long long phi = conductor - conductor / p;
  std::vector<Rational> raw(conductor, Rational(0));
  raw[e] = 1;
  // Reduce modulo Phi: x^{phi + t} = -sum_{i<p-1} x^{i*p^{k-1} + t}.
  long long step = conductor / p;
  for (long long d = conductor - 1; d >= phi; --d) {
    Rational c = raw[d];
    if (c == 0) continue;
    raw[d] = 0;
    for (long long i = 0; i + 1 < p; ++i) raw[d - phi + i * step] -= c;
  }
  raw.resize(phi);
  return CycNumber(conductor, std::move(raw));
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

Rational CycNumber::rational_part() const {
  if (conductor_ != 1) throw std::domain_error("not rational");
  return coeffs_[0];
}

void CycNumber::normalize() {
  if (conductor_ == 1) return;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return;
  }
  Rational c = coeffs_[0];
  conductor_ = 1;
  coeffs_ = {c};
}

std::vector<Rational> CycNumber::lifted_coeffs(long long conductor) const {
  if (conductor_ == conductor) return coeffs_;
  if (conductor % conductor_ != 0) {
    throw std::invalid_argument("cannot lift conductor " +
                                std::to_string(conductor_) + " into " +
                                std::to_string(conductor));
  }
  long long phi = euler_phi_prime_power(conductor);
  std::vector<Rational> acc(phi, Rational(0));
  long long scale = conductor / conductor_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    CycNumber term = root_of_unity(conductor, scale * static_cast<long long>(i));
    for (long long j = 0; j < phi; ++j) acc[j] += coeffs_[i] * term.coeffs_[j];
  }
  return acc;
}

namespace {

// Common refinement of two prime-power conductors; throws when the primes
// differ and neither side is rational.
long long common_conductor(long long a, long long b) {
  if (a == 1) return b;
  if (b == 1) return a;
  if (a % b == 0) return a;
  if (b % a == 0) return b;
  throw std::invalid_argument("mixed conductors without a common refinement: " +
                              std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  long long n = common_conductor(conductor_, rhs.conductor_);
  std::vector<Rational> a = lifted_coeffs(n), b = rhs.lifted_coeffs(n);
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return *this = CycNumber(n, std::move(a));
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber& CycNumber::operator*=(const CycNumber& rhs) {
  long long n = common_conductor(conductor_, rhs.conductor_);
  if (n == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<Rational> a = lifted_coeffs(n), b = rhs.lifted_coeffs(n);
  long long p = prime_of(n);
  long long phi = n - n / p;
  long long step = n / p;
  std::vector<Rational> raw(2 * phi, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) raw[i + j] += a[i] * b[j];
  }
  for (long long d = 2 * phi - 1; d >= phi; --d) {
    Rational c = raw[d];
    if (c == 0) continue;
    raw[d] = 0;
    for (long long i = 0; i + 1 < p; ++i) raw[d - phi + i * step] -= c;
  }
  raw.resize(phi);
  return *this = CycNumber(n, std::move(raw));
}

bool CycNumber::operator==(const CycNumber& rhs) const {
  long long n = common_conductor(conductor_, rhs.conductor_);
  return lifted_coeffs(n) == rhs.lifted_coeffs(n);
}

CycNumber CycNumber::galois(long long t) const {
  if (conductor_ == 1) return *this;
  long long n = conductor_;
  long long tt = ((t % n) + n) % n;
  if (std::gcd(tt, n) != 1) {
    throw std::invalid_argument("galois exponent not coprime to conductor");
  }
  CycNumber out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    CycNumber term = root_of_unity(n, tt * static_cast<long long>(i));
    for (auto& c : term.coeffs_) c *= coeffs_[i];
    term.normalize();
    out += term;
  }
  return out;
}

CycNumber CycNumber::conjugate() const {
  if (conductor_ == 1) return *this;
  return galois(conductor_ - 1);
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (conductor_ == 1) return from_rational(Rational(1) / coeffs_[0]);
  long long p = prime_of(conductor_);
  Poly modulus = cyclotomic_poly(p, conductor_);
  // Extended Euclid in Q[x]: u*f + v*Phi = gcd; Phi irreducible so gcd is a
  // nonzero constant and u/gcd represents 1/f.
  Poly r0 = modulus, r1 = coeffs_;
  Poly u0{Rational(0)}, u1{Rational(1)};
  while (degree(r1) > 0) {
    // One division step: r0 = q*r1 + r2.
    Poly q(static_cast<size_t>(degree(r0) - degree(r1) + 1), Rational(0));
    Poly r2 = r0;
    int d1 = degree(r1);
    Rational lead = r1[d1];
    for (int i = degree(r2); i >= d1; --i) {
      if (r2[i] == 0) continue;
      Rational c = r2[i] / lead;
      q[i - d1] = c;
      for (int j = 0; j <= d1; ++j) r2[i - d1 + j] -= c * r1[j];
    }
    Poly u2 = u0;
    Poly qu = poly_mul(q, u1);
    u2.resize(std::max(u2.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    r0 = r1;
    u0 = u1;
    r1 = r2;
    u1 = u2;
  }
  if (degree(r1) != 0) throw std::logic_error("cyclotomic inverse failed");
  Rational g = r1[0];
  Poly inv = poly_rem(u1, modulus);
  long long phi = conductor_ - conductor_ / p;
  inv.resize(phi, Rational(0));
  for (auto& c : inv) c /= g;
  return CycNumber(conductor_, std::move(inv));
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << rational_str(coeffs_[i]);
    if (i > 0) os << "*w^" << i;
    first = false;
  }
  if (first) os << "0";
  if (conductor_ > 1) os << " (conductor " << conductor_ << ")";
  return os.str();
}

CycNumber cyc_root(long long order, long long exponent) {
  if (order <= 0) throw std::invalid_argument("root order must be positive");
  long long e = ((exponent % order) + order) % order;
  if (order == 1) return CycNumber::from_rational(1);
  if (order % 2 == 0 && (order / 2) % 2 == 1 && order > 2) {
    // Q(zeta_{2m}) = Q(zeta_m) for odd m: zeta_{2m}^e = (-1)^e zeta_m^{e(m+1)/2}.
    long long m = order / 2;
    CycNumber z = CycNumber::root_of_unity(m, e * ((m + 1) / 2) % m);
    return (e % 2 == 0) ? z : -z;
  }
  return CycNumber::root_of_unity(order, e);  // validates prime power
}

long long galois_orbit_degree(const CycNumber& x) {
  if (x.conductor() == 1) return 1;
  long long n = x.conductor();
  std::set<std::string> seen;
  long long count = 0;
  for (long long t = 1; t < n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    std::string key = x.galois(t).str();
    if (seen.insert(key).second) ++count;
  }
  return count;
}

}  // namespace strata
