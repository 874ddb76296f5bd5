#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sefe/cycle_sefe.hpp"

namespace sefe {

// Tree over the cycle ids 0..k-1, rooted at cycle 0. Every tree edge carries
// two crucial variables: 2*e is pos_a(b) and 2*e+1 is pos_b(a) for edges[e] = (a, b).
struct CTree {
  int k = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // per cycle: (neighbour, edge), sorted by neighbour
  RootedTree rooted;
  // Host provenance for trees built from a host (empty otherwise): BFS parent
  // of every host vertex after contracting the cycles, and per edge the host
  // vertex on the child cycle where the connecting path starts.
  std::vector<int> host_parent;
  std::vector<int> host_cycle;  // cycle (part) containing each host vertex, or -1
  std::vector<int> attach;

  int num_vars() const { return 2 * static_cast<int>(edges.size()); }
  // Crucial variable of pos_c(d), or -1 when {c, d} is not a tree edge.
  int var(int c, int d) const;
  std::pair<int, int> var_pair(int var) const;
  // First cycle after c on the tree path from c to x (x != c).
  int rep(int c, int x) const;
  // Host vertices of the path realising edge e, from the child cycle up to the parent cycle.
  std::vector<int> host_path(int e) const;
};

// Throws MalformedInput unless the edges form a tree on 0..k-1.
CTree make_ctree(int k, const std::vector<std::pair<int, int>>& edges);

// Contract the cycles, take the BFS tree from cycle 0 (smaller vertex ids
// first) and contract every other vertex into its nearest cycle ancestor.
CTree build_ctree(const Graph& host, const std::vector<DirectedCycle>& cycles);
// Same over arbitrary disjoint connected vertex sets (common components).
CTree build_ctree(const Graph& host, const std::vector<std::vector<int>>& parts);

struct CcTree {
  CTree tree;
  ConstraintSet cs;  // over tree.num_vars()
};

// Four-phase bookkeeping of one block.
struct BlockPhases {
  int block = -1;
  std::unique_ptr<SpqrTree> tree;
  RootedSpqr rooted;
  std::vector<int> cycles;                // cycles of the block
  std::vector<std::vector<int>> cyc;      // per node: cycles that are cycles in its skeleton, ascending
  std::vector<int> bel;                   // per node: cycle owning the parent edge, or -1
  std::vector<int> root;                  // per cycles[i]: root of its induced subtree
  std::vector<std::vector<int>> members;  // per cycles[i]: induced subtree, in preorder
  std::vector<int> high;                  // per node: top node of the induced-tree-free run above it, or -1
  std::vector<std::vector<std::pair<int, int>>> at_node;  // per node: (skeleton edge, crucial var) determined there
};

struct CcTreeBuild {
  CcTree cct;
  std::vector<Site> det;  // per crucial var
  std::vector<BlockPhases> blocks;
};

// Phase 1: induced subtrees as Steiner trees of the Q-nodes of each cycle.
// `cycle_edges[i]` are the host edges of cycles[i]; all lie in the tree's block.
void phase1_induced(BlockPhases& ph, const std::vector<std::vector<int>>& cycle_edges);
// Phase 2: high(mu) is -1 if mu's parent edge lies in an induced subtree,
// otherwise the topmost node v above mu such that no edge from mu up to v's
// parent edge lies in one.
void phase2_high(BlockPhases& ph);

// CC-tree of a connected host (DisconnectedGraph otherwise).
CcTreeBuild build_cctree_detailed(const Graph& host, const std::vector<DirectedCycle>& cycles);
CcTree build_cctree(const Graph& host, const std::vector<DirectedCycle>& cycles);

// Expand a crucial assignment to every ordered pair by tree propagation.
SemiEmbedding expand_crucial(const CTree& t, const Assignment& crucial);
// Throws CapExceeded when the constraint system has more than `cap` models.
std::set<SemiEmbedding> represented_set(const CcTree& t, std::size_t cap);

// Equalities between crucial variables of t that every assignment also
// represented by `other` satisfies: pos_c(x) = pos_c(y) whenever x and y are
// t-neighbours of c in one branch of c in `other`. Both trees span 0..k-1.
std::vector<std::pair<int, int>> common_face_pairs(const CTree& t, const CTree& other);

// Embeddings represented by both; keeps the first tree. Throws
// CycleFamilyMismatch when the cycle counts differ.
CcTree intersect(const CcTree& a, const CcTree& b);

std::string cctree_to_dot(const CcTree& t);

}  // namespace sefe
