#pragma once

#include <string>
#include <vector>

#include "strata/group.hpp"
#include "strata/rational.hpp"
#include "strata/signature.hpp"

namespace strata {

// Which class of groups a bound is about: all nilpotent groups, or p-groups
// for one prime.
struct GroupClass {
  long long p = 0;  // 0 means "nilpotent"

  static GroupClass nilpotent() { return {0}; }
  static GroupClass prime(long long p);
  bool is_nilpotent_class() const { return p == 0; }
  std::string str() const { return p == 0 ? "nilpotent" : std::to_string(p); }
};

// Largest possible group order is coefficient * (g - 1); exact rational.
//   nilpotent / p = 2 : 8 when d = 1, else 4/(d-1)
//   p = 3             : 3/d
//   p >= 5            : 2/N with N = (2/3)d + lambda_d (1/3 - 1/p),
//                       lambda_d the least non-negative residue of d mod 3.
Rational max_order_coefficient(const GroupClass& cls, int d);

// The signatures attaining the bound, in canonical order.
std::vector<Signature> extremal_signatures(const GroupClass& cls, int d);

struct BoundResult {
  GroupClass cls;
  int d = 1;
  Rational coefficient;
  std::vector<Signature> extremal;
};

// Bundles the coefficient and the extremal list; asserts that every
// extremal signature has Teichmueller dimension d.
BoundResult bound_result(const GroupClass& cls, int d);

struct MinAreaResult {
  Rational min_area;
  std::vector<Signature> argmin;  // every minimizer, canonical order
  long long searched = 0;         // candidate signatures inspected
};

enum class SearchConstraint { nilpotent_admissible, periods_p_powers };

// Exhaustive minimum of the normalized area over signatures of Teichmueller
// dimension d subject to the constraint. Genus runs over 0..[d/3]+1 (higher
// genus forces l < 0) and periods over 2..16 resp. the powers of p up to 8p;
// see the README for why the caps do not cut off any minimizer.
MinAreaResult min_area_search(int d, SearchConstraint constraint,
                              long long p = 2);

enum class BoundVerdict { consistent, violates, extremal };
std::string verdict_str(BoundVerdict v);

// Compares |G| against coefficient*(g-1) with g from Riemann-Hurwitz. A
// non-integral genus means no action exists and the pair is vacuously
// consistent. Throws when G is neither nilpotent nor a p-group.
BoundVerdict check_action_against_bound(const FiniteGroup& g,
                                        const Signature& sig, int d);

}  // namespace strata
