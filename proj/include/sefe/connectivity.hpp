#pragma once

#include <vector>

#include "sefe/graph.hpp"
#include "sefe/rooted_tree.hpp"

namespace sefe {

// Blocks and cutvertices of a graph. Tree nodes 0..B-1 are blocks, node B+i is
// cutvertices[i]. Bridges are blocks with one edge.
struct BlockCutTree {
  std::vector<std::vector<int>> block_edges;
  std::vector<std::vector<int>> block_vertices;  // sorted
  std::vector<int> edge_block;
  std::vector<int> cutvertices;  // sorted
  std::vector<int> cut_index;    // vertex -> index into cutvertices, or -1
  std::vector<int> home_block;   // some block containing the vertex, or -1 when isolated
  std::vector<std::vector<int>> tree_adj;

  int num_blocks() const { return static_cast<int>(block_edges.size()); }
  int cut_node(int v) const { return num_blocks() + cut_index[v]; }
  bool is_cutvertex(int v) const { return cut_index[v] >= 0; }
};

BlockCutTree block_cut_tree(const Graph& g);

// Rooting of a BC-tree of a connected graph at block `root_block`.
RootedTree root_bc_tree(const BlockCutTree& bc, int root_block = 0);

// Block of a vertex that is closest to `from_block` in the BC-tree; for a
// non-cutvertex this is its only block.
int block_toward(const BlockCutTree& bc, const RootedTree& t, int vertex, int from_block);

// Edge sets of the subgraphs that meet only in the cutvertex v.
std::vector<std::vector<int>> cut_components(const Graph& g, int v);

bool is_biconnected(const Graph& g);

}  // namespace sefe
