#pragma once

#include <string>
#include <variant>
#include <vector>

#include "strata/group.hpp"
#include "strata/signature.hpp"

namespace strata {

// Images of the canonical generators of a Fuchsian group of the given
// signature: alpha_1, beta_1, ..., alpha_h, beta_h followed by
// gamma_1, ..., gamma_l. The group outlives the epimorphism.
struct SurfaceKernelEpimorphism {
  Signature signature;
  const FiniteGroup* group = nullptr;
  std::vector<int> hyperbolic_images;  // 2h entries
  std::vector<int> period_images;      // l entries

  std::vector<int> tuple() const;  // hyperbolic then period images
  bool operator==(const SurfaceKernelEpimorphism& rhs) const {
    return tuple() == rhs.tuple();
  }
};

struct SkeCheck {
  bool ok = false;
  std::string violation;  // first violated clause when !ok
};

// The three defining conditions: each period image has exactly the period's
// order, the long relation maps to the identity, and the images generate.
// Throws std::invalid_argument on an arity mismatch with the signature.
SkeCheck is_surface_kernel(const SurfaceKernelEpimorphism& theta);

// Complete enumeration by backtracking, with the last period image forced by
// the long relation. Returns an empty list when Riemann-Hurwitz does not
// produce an integer genus. Throws when |G|^{2h+l-1} exceeds 1e9.
std::vector<SurfaceKernelEpimorphism> enumerate_actions(const Signature& sig,
                                                        const FiniteGroup& g);

// --- mapping-class and automorphism moves ------------------------------------

struct BraidMove { int i = 1; };            // swap period images i, i+1 (1-based)
struct ConjugateMove { int g = 0; };        // conjugate every image by g
struct AutomorphismMove { const GroupMap* omega = nullptr; };
struct A1Move { long long n = 1; };         // beta_1 -> beta_1 alpha_1^n
struct A2Move { long long n = 1; };         // alpha_1 -> alpha_1 beta_1^n
using Move = std::variant<BraidMove, ConjugateMove, AutomorphismMove, A1Move, A2Move>;

// Applies the move and re-checks the surface-kernel conditions on the result.
// Throws std::invalid_argument when the move is undefined for the signature
// shape (braid out of range or on unequal periods, A-moves with h != 1).
SurfaceKernelEpimorphism apply_move(const SurfaceKernelEpimorphism& theta,
                                    const Move& move);

struct OrbitInfo {
  std::vector<int> representative;       // lexicographically least tuple
  std::vector<std::string> representative_words;
  long long size = 0;
};

struct EquivalenceClassReport {
  Signature signature;
  std::string group_name;
  long long total = 0;                   // epimorphisms enumerated
  std::vector<OrbitInfo> orbits;         // sorted by representative
  std::string move_set;                  // descriptor of the moves used
};

struct ClassifiedActions {
  EquivalenceClassReport report;
  std::vector<SurfaceKernelEpimorphism> all;  // enumeration order
  std::vector<int> orbit_of;  // parallel to all; index into report.orbits
};

// Orbits of the enumerated epimorphisms under Aut(G) (which subsumes global
// conjugation), Hurwitz braid moves on equal adjacent periods, and, for
// orbit genus one, the A1/A2 twists iterated to closure. BFS over the finite
// set; canonical representative is the least tuple in each orbit.
ClassifiedActions classify_with_members(const Signature& sig,
                                        const FiniteGroup& g);
EquivalenceClassReport classify(const Signature& sig, const FiniteGroup& g);

// For the order-2^n family: the central involution avoids the first three
// period images of every enumerated epimorphism for (0; 2,2,2,4).
// Requires a group with center of order 2.
bool central_element_claim(const Signature& sig, const FiniteGroup& g);

struct BranchData {
  long long genus = 0;
  std::vector<long long> branch_orders;  // sorted ramification marks > 1
};

// Genus and branch data of C -> C/H for a subgroup H of theta's group,
// computed from double cosets H \ G / <theta(gamma_k)> and Riemann-Hurwitz.
BranchData quotient_branch_data(const SurfaceKernelEpimorphism& theta,
                                const std::vector<int>& subgroup);

// True when no group of order 2p^n extends the (1; p) action of build_Gp to
// signature (0; 2,2,2,2p): every semidirect product Gp x| C_2 over every
// involutory automorphism (and the direct product) admits no surface-kernel
// epimorphism from that signature.
bool extension_witness(int p, int n);

struct MaximalityInfo {
  enum class Status { maximal, extends_to, unknown };
  Status status = Status::unknown;
  std::vector<Signature> extensions;
};

// Encoded extension facts: (0;2,2,2,4) is maximal; (1; m) extends only to
// (0; 2,2,2,2m). Everything else reports unknown.
MaximalityInfo maximality_lookup(const Signature& sig);

}  // namespace strata
