#pragma once

#include <vector>

#include "strata/actions.hpp"

namespace strata {

// Reference orbit partition for cross-checking classify(): a union-find
// fixed-point closure that applies every move to every epimorphism until
// stabilization, with the tuple transforms written out independently of
// apply_move (and with explicit conjugation edges even though they are
// redundant next to the automorphism list). Returns orbits as sorted lists
// of indices into `all`, ordered by smallest member.
std::vector<std::vector<int>> naive_orbit_partition(
    const FiniteGroup& g, const std::vector<GroupMap>& automorphism_list,
    const std::vector<SurfaceKernelEpimorphism>& all);

}  // namespace strata
