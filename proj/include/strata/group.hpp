#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// Finite group given by its full multiplication table over element indices
// 0..size-1. Index 0 is always the identity, and the element order is the
// canonical one fixed by the constructor (lexicographic on normal-form
// exponent tuples for the built-in families, lexicographic on permutation
// vectors for permutation groups). Immutable after construction.
class FiniteGroup {
 public:
  using Elt = int;

  static constexpr int kDefaultCap = 4096;
  static constexpr int kFullCheckLimit = 512;

  // Validates the table: two-sided identity, inverses, associativity (full
  // below kFullCheckLimit, 1e5 sampled triples above) and that the named
  // generators generate. Throws std::invalid_argument on any failure.
  FiniteGroup(std::string name, int size, std::vector<int> table,
              std::vector<std::pair<std::string, Elt>> generators,
              std::vector<std::string> labels);

  int size() const { return size_; }
  Elt identity() const { return 0; }
  Elt mul(Elt x, Elt y) const { return table_[x * size_ + y]; }
  Elt inv(Elt x) const { return inverse_[x]; }
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  Elt commutator(Elt x, Elt y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  Elt pow(Elt x, long long e) const;
  long long order(Elt x) const;

  const std::string& name() const { return name_; }
  const std::string& label(Elt x) const { return labels_[x]; }
  const std::vector<std::pair<std::string, Elt>>& generators() const {
    return generators_;
  }
  Elt generator(const std::string& name) const;  // throws if unknown

 private:
  std::string name_;
  int size_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::pair<std::string, Elt>> generators_;
  std::vector<std::string> labels_;

  void validate();
};

// Map between groups, stored as the full image vector. validate() checks
// multiplicativity on generators plus a random sample (full check when the
// source is small).
struct GroupMap {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> images;

  int apply(int x) const { return images[x]; }
  bool is_bijective() const;
  void validate() const;

  // (this o inner)(x) = this(inner(x)); both must be self-maps of one group.
  GroupMap compose(const GroupMap& inner) const;
  GroupMap inverse_map() const;

  bool operator==(const GroupMap& rhs) const { return images == rhs.images; }
  bool operator<(const GroupMap& rhs) const { return images < rhs.images; }
};

GroupMap identity_map(const FiniteGroup& g);

// --- constructors -----------------------------------------------------------

// Order 2^n group (C_2 x D_{2^{n-3}}) x| C_2 on generators r,s,b,a in normal
// form r^i s^j b^k a^l; all defining relations are asserted after the table
// is built. n <= 4 has a different structure and is rejected.
FiniteGroup build_G2(int n);

// Order p^n group C_{p^{n-1}} x| C_p = <a,b | a^{p^{n-1}} = b^p = 1,
// bab^{-1} = a^{p^{n-2}+1}> as exponent pairs (i,j). p odd, n >= 3.
FiniteGroup build_Gp(int p, int n);

// Closure of the given permutations of {1..N} (one-line images, 1-based).
// Elements are sorted by permutation vector, so the identity is index 0.
FiniteGroup from_permutations(const std::vector<std::vector<int>>& perms,
                              int cap = FiniteGroup::kDefaultCap);

FiniteGroup cyclic_group(int m, const std::string& gen_name = "g");
FiniteGroup trivial_group();

// Pairs (x,h) with (x1,h1)(x2,h2) = (x1 * act[h1](x2), h1 h2). The action
// vector must be a homomorphism H -> Aut(N); this is checked.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMap>& action,
                               const std::string& name = "");

// --- queries ----------------------------------------------------------------

std::vector<int> subgroup_generated(const FiniteGroup& g,
                                    const std::vector<int>& xs);

// Conjugacy classes sorted by minimal element; class 0 is {identity}.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

std::vector<int> center(const FiniteGroup& g);
bool is_p_group(const FiniteGroup& g, long long p);
// Size p^k for some prime p; returns p, or 0 if the size is not a prime power.
long long p_group_prime(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
long long exponent(const FiniteGroup& g);

// All automorphisms, by backtracking over generator images with order and
// partial-closure pruning; result sorted by image vector. Throws when
// size^(#generators) exceeds 1e9.
std::vector<GroupMap> automorphisms(const FiniteGroup& g);

// Isomorphism a -> b extending nothing in particular, or empty optional-like
// flag via the boolean. Same backtracking engine as automorphisms().
bool find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                      GroupMap* out = nullptr);

struct SubgroupClass {
  std::vector<std::vector<int>> members;  // each subgroup as sorted elements
  bool normal = false;
};

// Conjugacy classes of subgroups of order m, for small m (every subgroup of
// order m must be generated by at most log2(m) elements; the search runs
// generating sets of size up to 3 and rejects m that would need more).
std::vector<SubgroupClass> subgroup_classes_of_order(const FiniteGroup& g,
                                                     long long m);

}  // namespace strata
