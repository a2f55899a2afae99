#pragma once

#include <string>
#include <vector>

#include "strata/actions.hpp"
#include "strata/character.hpp"

namespace strata {

// Character table plus its Galois-orbit bundling, computed once per group
// and shared across decomposition calls.
struct JacobianContext {
  CharacterTable table;
  std::vector<RationalIrrep> irreps;
};

JacobianContext make_jacobian_context(const FiniteGroup& g);

// dim of the subspace of the irreducible with character row chi fixed by
// the subgroup: (1/|H|) sum_{h in H} chi(h). Exact; throws if the average
// fails to be a non-negative integer (a broken table).
long long fixed_dim(const CharacterTable& table, int chi,
                    const std::vector<int>& subgroup);

// Isotypical factor dimension for a non-trivial rational irreducible:
// k_V [ d_V (h - 1) + 1/2 sum_k (d_V - dim fixed space of <theta(gamma_k)>) ].
long long dim_factor(const JacobianContext& ctx,
                     const SurfaceKernelEpimorphism& theta,
                     const RationalIrrep& w);

struct DecompositionFactor {
  int irrep = 0;               // index into ctx.irreps
  long long degree = 0;        // d_V
  long long field_degree = 0;  // k_V
  long long multiplicity = 0;  // n_j (or n_j^H for quotient reports)
  long long dim = 0;           // dim B_j
};

struct DecompositionReport {
  std::string group_name;
  Signature signature;
  std::string subgroup_label;  // empty for the full decomposition
  long long genus = 0;         // what the factors must sum to
  std::vector<DecompositionFactor> factors;

  long long total() const;
};

// Full group algebra decomposition of the Jacobian of the covering surface:
// the trivial factor has dimension genus(C_G) = orbit genus and multiplicity
// one; every other factor dimension comes from dim_factor. The factor
// dimensions must add up to the genus of C, otherwise this throws
// "decomposition inconsistent".
DecompositionReport group_algebra_decomposition(
    const JacobianContext& ctx, const SurfaceKernelEpimorphism& theta);
DecompositionReport group_algebra_decomposition(
    const SurfaceKernelEpimorphism& theta);

// Induced decomposition of the intermediate quotient C_H: multiplicities
// drop to the fixed-space dimensions n_j^H. The total is checked against the
// genus from quotient_branch_data (an independent Riemann-Hurwitz count).
DecompositionReport quotient_decomposition(const JacobianContext& ctx,
                                           const SurfaceKernelEpimorphism& theta,
                                           const std::vector<int>& subgroup);
DecompositionReport quotient_decomposition(const SurfaceKernelEpimorphism& theta,
                                           const std::vector<int>& subgroup);

}  // namespace strata
