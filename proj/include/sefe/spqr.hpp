#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sefe/embedding.hpp"
#include "sefe/graph.hpp"
#include "sefe/rooted_tree.hpp"

namespace sefe {

enum class NodeKind : std::uint8_t { S, P, R, Q };
const char* node_kind_name(NodeKind k);

struct SkelEdge {
  int u = -1;  // host vertex ids
  int v = -1;
  int twin_node = -1;  // -1 only for the real edge of a Q-node
  int twin_edge = -1;  // index of the twin in twin_node's skeleton
  int real_edge = -1;  // host edge id for the real edge of a Q-node
};

struct SpqrNode {
  NodeKind kind = NodeKind::S;
  std::vector<SkelEdge> edges;
  std::vector<int> vertices;  // sorted host vertex ids
  int local_vertex(int host_vertex) const;  // index into vertices, or -1
};

// SPQR-tree of a biconnected (sub)graph. Every real edge sits in its own
// Q-node whose skeleton is {real edge, virtual edge to the neighbour}.
struct SpqrTree {
  std::vector<SpqrNode> nodes;
  std::vector<int> block_edges;
  std::unordered_map<int, int> q_index;  // host edge -> Q-node

  int q_of(int host_edge) const;  // -1 outside the block
};

// Decomposes the subgraph of `host` formed by `edges`, which must be
// biconnected with at least three edges; throws NotBiconnected otherwise.
SpqrTree build_spqr(const Graph& host, std::span<const int> edges);
SpqrTree build_spqr(const Graph& g);

// Skeleton as a standalone multigraph: vertex i is node.vertices[i], edge i is
// skeleton edge i.
Graph skeleton_graph(const SpqrNode& node);

// Planar rotation of an R-node skeleton in a canonical orientation: at the
// smallest vertex, the edge to the smallest neighbour is followed by a smaller
// neighbour than it is preceded by.
RotationSystem reference_rotation(const SpqrNode& node);

struct RootedSpqr {
  const SpqrTree* tree = nullptr;
  RootedTree shape;
  std::vector<int> parent_edge;  // skeleton edge index leading to the parent; -1 at the root

  int edge_to_child(int child) const {
    return tree->nodes[child].edges[parent_edge[child]].twin_edge;
  }
  // Skeleton edge of mu whose expansion contains the given node (node != mu).
  int edge_toward(int mu, int node) const;
  // Skeleton edge of mu whose expansion contains the host edge.
  int edge_of(int mu, int host_edge) const;
  // Child node behind skeleton edge i of mu, or -1 (parent edge / real edge).
  int child_behind(int mu, int i) const;
};

RootedSpqr root_spqr(const SpqrTree& t, int root);

// Host edges in the expansion graph of virtual edge i of node mu; throws
// NotVirtual for the real edge of a Q-node.
std::vector<int> expansion_edges(const SpqrTree& t, int mu, int i);

struct CycleInSkeleton {
  bool as_cycle = false;
  int contracted_edge = -1;    // when !as_cycle
  std::vector<int> kappa;      // skeleton edges in cycle order when as_cycle
  std::vector<int> kappa_dir;  // 0: traversed u->v, 1: v->u
};

// How a directed host cycle (vertex sequence + host edge ids) appears in
// skel(mu). Throws CycleNotInBlock when the cycle has edges outside the block.
CycleInSkeleton classify_cycle(const RootedSpqr& rt, int mu, const std::vector<int>& cycle_vertices,
                               const std::vector<int>& cycle_edges);

std::string spqr_to_dot(const SpqrTree& t);

}  // namespace sefe
