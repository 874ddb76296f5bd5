#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "sefe/cctree.hpp"
#include "sefe/components.hpp"

namespace sefe {

// Variable of pos_Ci(Cj) is SemiEmbedding::index(k, i, j), as for cycles; its
// value is a face id of Ci.

// One variable tied to a binary choice: face0 when the choice is 0 (Side::Left),
// face1 otherwise. The choice belongs to the group holding the entry.
struct PairEntry {
  int var = -1;
  int face0 = -1;
  int face1 = -1;
};

// Face domains, equalities and groups of variables that follow one binary
// choice (the orientation of an R-node skeleton). Two entries of one group
// are the paired-inequality edges of the conflict graph: flipping the choice
// moves both to their other face.
struct FaceSystem {
  int num_vars = 0;
  std::vector<std::vector<int>> domain;  // sorted
  std::vector<std::pair<int, int>> eq;
  std::vector<std::vector<PairEntry>> groups;

  FaceSystem() = default;
  // Variable v starts with faces 0..face_count[v]-1.
  explicit FaceSystem(const std::vector<int>& face_count);

  void restrict(int var, std::vector<int> faces);
  // Conjunction with a system over the same variables.
  void merge(const FaceSystem& other);
};

bool satisfies(const FaceSystem& sys, const FacePositions& x);

// Eq classes take the intersection of their domains; classes tied to groups
// go to 2-SAT over the group choices; free classes take their smallest face.
std::optional<FacePositions> solve_faces(const FaceSystem& sys);

// Every model, sorted. Throws CapExceeded beyond `cap`.
std::vector<FacePositions> enumerate_face_models(const FaceSystem& sys, std::size_t cap);

// The quadratic system of one connected host (DisconnectedGraph otherwise).
// Components must be biconnected with at least three vertices or single
// edges (UnsupportedComponent otherwise); a fixed embedding that no embedding
// of the host restricts to throws EmbeddingConflict.
struct ComponentModel {
  int k = 0;
  FaceSystem sys;
  std::vector<Site> det;  // per variable; None for variables of single-face components
};
ComponentModel component_constraints(const Graph& host, const std::vector<FixedComponent>& comps);

// Component tree over the crucial positions (two per tree edge, as for cycles).
struct ComponentCcTree {
  CTree tree;
  FaceSystem sys;  // over tree.num_vars()
};

ComponentCcTree build_component_cctree(const Graph& host, const std::vector<FixedComponent>& comps);
// Keeps the first tree. Throws CycleFamilyMismatch when the component counts differ.
ComponentCcTree intersect_component_cctrees(const ComponentCcTree& a, const ComponentCcTree& b);

FacePositions expand_crucial_faces(const CTree& t, const std::vector<int>& crucial);
std::set<FacePositions> represented_face_set(const ComponentCcTree& t, std::size_t cap);

struct FixedDecision {
  bool sefe = false;
  std::optional<FacePositions> positions;
};

// Hosts share the vertex set and the components; each must be connected
// (PreprocessingRequired otherwise). A host that cannot keep some component's
// embedding makes the answer No. The fast path folds component CC-trees, the
// reference path merges the quadratic systems.
FixedDecision decide_sefe_fixed(const std::vector<Graph>& hosts, const std::vector<FixedComponent>& comps,
                                Path path = Path::Fast);
FixedDecision decide_sefe_fixed(const SefeInstance& inst, Path path = Path::Fast);

}  // namespace sefe
