#include "strata/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

GroupClass GroupClass::prime(long long p) {
  if (!is_prime(p)) throw std::invalid_argument("GroupClass: not a prime");
  return {p};
}

Rational max_order_coefficient(const GroupClass& cls, int d) {
  if (d < 1) throw std::invalid_argument("bound needs dimension d >= 1");
  if (cls.is_nilpotent_class() || cls.p == 2) {
    return d == 1 ? Rational(8) : Rational(4, d - 1);
  }
  if (cls.p == 3) return Rational(3, d);
  long long lambda = d % 3;
  // N = (2/3) d + lambda (1/3 - 1/p) = (2dp + lambda(p-3)) / (3p).
  Rational n = Rational(2 * d * cls.p + lambda * (cls.p - 3), 3 * cls.p);
  return 2 / n;
}

std::vector<Signature> extremal_signatures(const GroupClass& cls, int d) {
  if (d < 1) throw std::invalid_argument("bound needs dimension d >= 1");
  auto repeated = [](int h, long long m, int count) {
    return Signature(h, std::vector<long long>(count, m));
  };
  if (cls.is_nilpotent_class() || cls.p == 2) {
    if (d == 1) return {Signature(0, {2, 2, 2, 4})};
    return {repeated(0, 2, d + 3)};
  }
  int h_hat = d / 3 + 1;
  if (cls.p == 3) {
    std::vector<Signature> out;
    for (int h = 0; h <= h_hat; ++h) out.push_back(repeated(h, 3, d + 3 - 3 * h));
    return out;
  }
  return {repeated(h_hat, cls.p, d + 3 - 3 * h_hat)};
}

BoundResult bound_result(const GroupClass& cls, int d) {
  BoundResult out{cls, d, max_order_coefficient(cls, d),
                  extremal_signatures(cls, d)};
  if (out.coefficient <= 0) throw std::logic_error("bound coefficient not positive");
  for (const auto& sig : out.extremal) {
    if (teichmuller_dim(sig) != d) {
      throw std::logic_error("extremal signature with wrong dimension");
    }
  }
  return out;
}

MinAreaResult min_area_search(int d, SearchConstraint constraint, long long p) {
  if (d < 1) throw std::invalid_argument("search needs dimension d >= 1");
  std::vector<long long> period_pool;
  if (constraint == SearchConstraint::nilpotent_admissible) {
    for (long long m = 2; m <= 16; ++m) period_pool.push_back(m);
  } else {
    if (!is_prime(p)) throw std::invalid_argument("search needs a prime p");
    for (long long m = p; m <= 8 * p; m *= p) period_pool.push_back(m);
  }

  MinAreaResult result;
  bool have = false;
  std::vector<long long> periods;

  for (int h = 0; h <= d / 3 + 1; ++h) {
    int l = d + 3 - 3 * h;
    if (l < 0) continue;
    // Enumerate non-decreasing period tuples of length l from the pool.
    std::vector<size_t> pick(l, 0);
    for (;;) {
      periods.clear();
      for (size_t i = 0; i < pick.size(); ++i) periods.push_back(period_pool[pick[i]]);
      ++result.searched;
      Signature sig(h, periods);
      bool admissible =
          constraint == SearchConstraint::nilpotent_admissible
              ? is_nilpotent_admissible(sig)
              : true;  // p-power periods: own p-localization, never degenerate here
      if (admissible && is_hyperbolic(sig)) {
        Rational area = normalized_area(sig);
        if (!have || area < result.min_area) {
          have = true;
          result.min_area = area;
          result.argmin.clear();
          result.argmin.push_back(sig);
        } else if (area == result.min_area) {
          result.argmin.push_back(sig);
        }
      }
      // Odometer over non-decreasing index tuples.
      if (l == 0) break;
      int pos = l - 1;
      while (pos >= 0 && pick[pos] + 1 == period_pool.size()) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int q = pos + 1; q < l; ++q) pick[q] = pick[pos];
    }
  }
  if (!have) throw std::logic_error("min_area_search found no admissible signature");
  std::sort(result.argmin.begin(), result.argmin.end());
  return result;
}

std::string verdict_str(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::consistent: return "consistent";
    case BoundVerdict::violates: return "violates";
    case BoundVerdict::extremal: return "extremal";
  }
  return "?";
}

BoundVerdict check_action_against_bound(const FiniteGroup& g,
                                        const Signature& sig, int d) {
  if (teichmuller_dim(sig) != d) {
    throw std::invalid_argument("signature dimension differs from d");
  }
  GroupClass cls;
  long long p = p_group_prime(g);
  if (p != 0) {
    cls = GroupClass::prime(p);
  } else if (is_nilpotent(g)) {
    cls = GroupClass::nilpotent();
  } else {
    throw std::invalid_argument(
        "bound not applicable: group is neither nilpotent nor a p-group");
  }
  Rational genus = riemann_hurwitz_genus(sig, g.size());
  if (!is_integer(genus)) return BoundVerdict::consistent;  // no such action
  Rational bound = max_order_coefficient(cls, d) * (genus - 1);
  Rational order(g.size());
  if (order > bound) return BoundVerdict::violates;
  if (order < bound) return BoundVerdict::consistent;
  auto extremals = extremal_signatures(cls, d);
  if (std::find(extremals.begin(), extremals.end(), sig) == extremals.end()) {
    throw std::logic_error("bound attained away from an extremal signature");
  }
  return BoundVerdict::extremal;
}

}  // namespace strata
