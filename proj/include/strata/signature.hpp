#pragma once

#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

// Orbifold signature (h; m_1,...,m_l): orbit genus h plus the branch periods
// of the canonical projection. Periods are kept in the order given; equality
// compares genus plus the period multiset, which is what the geometry sees.
class Signature {
 public:
  Signature(int genus, std::vector<long long> periods);

  int genus() const { return genus_; }
  const std::vector<long long>& periods() const { return periods_; }
  std::vector<long long> sorted_periods() const;

  bool operator==(const Signature& other) const;
  bool operator!=(const Signature& other) const { return !(*this == other); }
  bool operator<(const Signature& other) const;  // canonical order for reports

  // "(0; 2,2,2,4)"; an empty period list renders as "(1; -)".
  std::string str() const;

 private:
  int genus_;
  std::vector<long long> periods_;
};

bool is_prime(long long n);

// Normalized hyperbolic area mu/2pi = 2h - 2 + sum(1 - 1/m_i), exact.
Rational normalized_area(const Signature& sig);

// chi(sigma) = -normalized_area(sigma).
Rational euler_characteristic(const Signature& sig);

bool is_hyperbolic(const Signature& sig);

// Dimension 3h - 3 + l of the associated Teichmueller ball.
// Throws std::domain_error("not Fuchsian") on non-hyperbolic input.
int teichmuller_dim(const Signature& sig);

// (0; m) for any m, or (0; m1,m2) with m1 != m2.
bool is_degenerate(const Signature& sig);

// Replace each period by its maximal p-power divisor, dropping the entries
// with trivial p-part; genus is unchanged.
Signature p_localization(const Signature& sig, long long p);

// Every p-localization non-degenerate, over the primes dividing some period.
bool is_nilpotent_admissible(const Signature& sig);

// Genus of the total space of a regular |G|-fold cover with this branch
// data: 1 + order * area / 2. The result need not be integral; callers that
// need a genus must check. Throws on non-hyperbolic signatures.
Rational riemann_hurwitz_genus(const Signature& sig, const Integer& order);

}  // namespace strata
