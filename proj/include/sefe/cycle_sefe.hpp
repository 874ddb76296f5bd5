#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sefe/connectivity.hpp"
#include "sefe/embedding.hpp"
#include "sefe/instance.hpp"
#include "sefe/rooted_tree.hpp"
#include "sefe/spqr.hpp"
#include "sefe/twosat.hpp"

namespace sefe {

// Variable of pos_Ci(Cj) is SemiEmbedding::index(k, i, j); a SemiEmbedding's
// pos vector doubles as an Assignment.
inline int pos_var(int k, int i, int j) { return SemiEmbedding::index(k, i, j); }

// Where a relative position is decided in one host.
struct Site {
  enum class Kind : std::uint8_t { None, Node, Cutvertex };
  Kind kind = Kind::None;
  int block = -1;
  int node = -1;    // SPQR node in the block's tree (Node)
  int vertex = -1;  // cutvertex on the first cycle (Cutvertex)
  int key = -1;     // block next to `vertex` toward the second cycle (Cutvertex)
  auto operator<=>(const Site&) const = default;
};

// Node data kept for realisation.
struct NodeChoice {
  std::vector<std::pair<int, Side>> r_entries;  // R-node: variable and its side in the reference orientation
  int p_cycle = -1;                             // P-node: the cycle that is a cycle in the skeleton
  std::vector<int> p_kappa, p_dir;
  std::vector<std::pair<int, int>> p_entries;  // P-node: (skeleton edge, variable)
};

struct BlockModel {
  std::vector<int> edges;  // host edge ids
  std::unique_ptr<SpqrTree> tree;  // null for bridges
  RootedSpqr rooted;
  std::vector<NodeChoice> nodes;
  std::vector<int> cycles;  // cycles inside the block
};

// The constraints of one connected host over all ordered pairs of cycles,
// built node by node (quadratic). Also the data needed to realise models.
struct ReferenceModel {
  int k = 0;
  std::vector<DirectedCycle> cycles;
  std::vector<std::vector<int>> cycle_edges;  // host edge ids
  BlockCutTree bc;
  RootedTree bc_rooted;
  std::vector<int> block_of_cycle;
  std::vector<int> cycle_of_vertex;  // -1 off the cycles
  std::vector<BlockModel> blocks;
  ConstraintSet cs;
  std::vector<Site> det;  // per variable
};

// Throws DisconnectedGraph if the host's edges form several components and
// ConstraintViolation if a cycle is not in the host.
ReferenceModel build_reference(const Graph& host, const std::vector<DirectedCycle>& cycles);

// PR-node constraints of a biconnected host (NotBiconnected otherwise).
ConstraintSet pr_node_constraints(const Graph& host, const std::vector<DirectedCycle>& cycles);
// PR-node, extended PR-node and cutvertex constraints of a connected host.
ConstraintSet extended_and_cutvertex_constraints(const Graph& host, const std::vector<DirectedCycle>& cycles);

// Rotation system of the host realising a semi-embedding that satisfies the
// model's constraints; throws ConstraintViolation otherwise.
RotationSystem realize_embedding(const ReferenceModel& model, const Graph& host, const SemiEmbedding& semi);
RotationSystem realize_embedding(const Graph& host, const std::vector<DirectedCycle>& cycles, const SemiEmbedding& semi);

enum class Path : std::uint8_t { Reference, Fast };

// The fast path expands the solution to all k(k-1) positions only up to this
// many cycles unless a witness is requested.
inline constexpr int kExpandLimit = 2048;

struct CycleDecision {
  bool sefe = false;
  std::optional<SemiEmbedding> semi;
  std::vector<RotationSystem> witness;  // one per host when requested
};

// Hosts share the vertex set and the cycle family; each must be connected
// (PreprocessingRequired otherwise). Two hosts give SEFE, more give the
// k-graph version with one common graph. The fast path intersects CC-trees
// left to right; the reference path conjoins the quadratic constraint sets.
// Witnesses are realised through the quadratic model either way.
CycleDecision decide_sefe_cycles(const std::vector<Graph>& hosts, const std::vector<DirectedCycle>& cycles, Path path,
                                 bool want_witness);
CycleDecision decide_sefe_cycles(const SefeInstance& inst, Path path = Path::Fast, bool want_witness = false);

}  // namespace sefe
