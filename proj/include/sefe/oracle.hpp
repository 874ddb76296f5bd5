#pragma once

// Brute-force ground truth: enumerate rotation systems, keep the sphere
// embeddings, and read relative positions off the traced faces. Shares only the
// graph container and face tracing with the decision procedures.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "sefe/components.hpp"
#include "sefe/embedding.hpp"
#include "sefe/graph.hpp"
#include "sefe/instance.hpp"

namespace sefe {

// SEFE_ORACLE_CAP from the environment, or `fallback`.
std::size_t oracle_cap(std::size_t fallback = 5'000'000);

// Product over vertices of (deg - 1)!, saturating at SIZE_MAX.
std::size_t rotation_candidates(const Graph& g);

// Calls visit for every rotation system of g that embeds each component on the
// sphere, in odometer order (vertex 0 slowest). Stops when visit returns false.
// Throws CapExceeded if rotation_candidates(g) > cap.
void for_each_planar_rotation(const Graph& g, std::size_t cap, const std::function<bool(const RotationSystem&)>& visit);
std::vector<RotationSystem> enumerate_planar_rotations(const Graph& g, std::size_t cap);

// Calls visit with g itself if its edges form one component, otherwise with
// every graph obtained by joining the edge components along a labelled spanning
// tree with one new edge per tree edge (new edges get ids >= g.num_edges()).
// Every embedding of g is the restriction of an embedding of one of these.
void for_each_connected_augmentation(const Graph& g, std::size_t cap, const std::function<bool(const Graph&)>& visit);

// pos_Ci(Cj) in a sphere embedding of a graph whose edges form one component.
// Throws CycleNotEmbedded when the faces do not split along a cycle and
// DisconnectedGraph when the edges form several components.
SemiEmbedding extract_semi(const Graph& g, const RotationSystem& rot, const std::vector<DirectedCycle>& cycles);

// Semi-embeddings realised by some planar embedding of g (any connectivity).
std::set<SemiEmbedding> achievable_semis(const Graph& g, const std::vector<DirectedCycle>& cycles, std::size_t cap);

struct OracleVerdict {
  bool sefe = false;
  std::optional<SemiEmbedding> witness;  // smallest common semi-embedding
};

// SEFE for a common graph of disjoint cycles: the graphs must realise a common
// semi-embedding of the cycle family.
OracleVerdict brute_force_sefe(const SefeInstance& inst, std::size_t cap);
OracleVerdict brute_force_sefe(const std::vector<Graph>& hosts, const std::vector<DirectedCycle>& cycles,
                               std::size_t cap);

FacePositions extract_face_positions(const Graph& g, const RotationSystem& rot,
                                     const std::vector<FixedComponent>& comps);

// Whether rot restricts to every component's fixed rotation.
bool keeps_component_rotations(const Graph& g, const RotationSystem& rot, const std::vector<FixedComponent>& comps);

// Positions over embeddings of g that restrict to each component's fixed rotation.
std::set<FacePositions> achievable_face_positions(const Graph& g, const std::vector<FixedComponent>& comps,
                                                  std::size_t cap);

// First embedding of the connected graph g in enumeration order that keeps the
// fixed rotations and realises `target`.
std::optional<RotationSystem> find_fixed_embedding(const Graph& g, const std::vector<FixedComponent>& comps,
                                                   const FacePositions& target, std::size_t cap);

struct FixedOracleVerdict {
  bool sefe = false;
  std::optional<FacePositions> witness;
};

FixedOracleVerdict brute_force_sefe_fixed(const SefeInstance& inst, std::size_t cap);
FixedOracleVerdict brute_force_sefe_fixed(const std::vector<Graph>& hosts, const std::vector<FixedComponent>& comps,
                                          std::size_t cap);

}  // namespace sefe
