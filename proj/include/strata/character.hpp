#pragma once

#include <vector>

#include "strata/cyclo.hpp"
#include "strata/group.hpp"

namespace strata {

// Complete table of complex irreducible characters with exact cyclotomic
// values. Rows are characters (trivial character first, then sorted by
// degree and value strings); columns are conjugacy classes sorted by
// minimal element.
struct CharacterTable {
  const FiniteGroup* group = nullptr;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;        // element -> class index
  std::vector<int> class_rep;      // class -> minimal element
  std::vector<int> inverse_class;  // class of rep^{-1}
  std::vector<std::vector<CycNumber>> chars;
  std::vector<long long> degrees;
  long long group_exponent = 1;

  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_chars() const { return static_cast<int>(chars.size()); }
  const CycNumber& value(int chi, int element) const {
    return chars[chi][class_of[element]];
  }
};

// Generic path: class-sum (Burnside) matrices, common eigenvectors found by
// linear algebra modulo a prime l = 1 mod exp(G), then the character values
// lifted to exact cyclotomic numbers from the eigenvalue multiplicities of
// the power map. The finished table is verified exactly: sum of squared
// degrees, row orthogonality, and conjugate symmetry, all in cyclotomic
// arithmetic. Requires |G| <= 512 and every element order to lie in a
// prime-power cyclotomic field (p^a or 2 p^a).
CharacterTable character_table(const FiniteGroup& g);

// Explicit 4-dimensional representation of build_G2(n) induced from the
// dihedral rotation block: per-class character values, an independent check
// path against the generic table.
std::vector<CycNumber> g2_family_character(const CharacterTable& table, int n);

// Explicit p-dimensional little-groups representation of build_Gp(p, n):
// a acts by diag(w^{r^0}, ..., w^{r^{p-1}}), b by the cyclic shift.
std::vector<CycNumber> gp_family_character(const CharacterTable& table, int p,
                                           int n);

// True when some row of the table equals the given per-class values.
bool table_contains(const CharacterTable& table,
                    const std::vector<CycNumber>& values);

// Galois orbit of complex irreducible characters making up one rational
// irreducible representation. Schur indices are 1 across the supported
// scope (nilpotent groups), so the multiplicity in the group algebra
// decomposition equals the degree.
struct RationalIrrep {
  std::vector<int> members;  // row indices, ascending
  long long degree = 0;      // d_V
  long long field_degree = 0;  // k_V = [Q(chi_V):Q] = orbit size
  int schur_index = 1;
  long long multiplicity = 0;  // n_j = d_V / s_V
  bool trivial = false;
};

// Partition of the table rows into Galois orbits under chi -> chi(g^t).
// Refuses non-nilpotent groups (the Schur index convention would be a
// guess there).
std::vector<RationalIrrep> rational_irreps(const CharacterTable& table);

}  // namespace strata
