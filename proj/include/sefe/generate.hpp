#pragma once

#include <cstdint>

#include "sefe/instance.hpp"

namespace sefe {

// Random instance on n vertices whose common graph is exactly k disjoint
// triangles and whose two graphs are connected and planar. Graph 1 is a random
// spanning subgraph of a stacked triangulation that keeps k vertex-disjoint
// faces; graph 2 is the same construction relabelled by a random permutation
// fixing the triangle vertices, minus the edges graph 1 already has.
// `density` is the chance of keeping an edge beyond the spanning tree.
// Deterministic in (n, k, seed). Throws MalformedInput when k triangles do not
// fit (roughly k > n / 5).
SefeInstance generate_cycle_instance(int n, int k, std::uint64_t seed, double density = 0.3);

}  // namespace sefe
