#pragma once

#include <vector>

#include "sefe/instance.hpp"

namespace sefe {

struct AugmentationRecord {
  int source_edge = -1;  // instance edge {v1, v2}, exclusive to the other graph
  int v1 = -1;
  int v2 = -1;
  int v12 = -1;             // new vertex
  int common_edge = -1;     // {v1, v12}
  int exclusive_edge = -1;  // {v12, v2}
  int target_graph = 1;     // graph that gained the exclusive edge
};

// Adds v12 with a common edge {v1, v12} and an edge {v12, v2} exclusive to
// target_graph. The new common edge gets no rotation line: its position at v1
// is free in the other graph, where v12 is a leaf.
// Throws EdgeNotExclusive unless the edge is exclusive to the other graph and
// SameComponent if v1 and v2 are already connected in the target graph.
SefeInstance augment_edge(const SefeInstance& inst, int edge, int target_graph, AugmentationRecord* record = nullptr);

struct ConnectedInstance {
  SefeInstance instance;
  std::vector<AugmentationRecord> records;
  int original_vertices = 0;
};

// Connects graph 1 and then graph 2 along BFS spanning trees of the contracted
// components (smallest component first, ties by vertex and edge id). Throws
// UnionDisconnected if the union graph has several components with edges.
ConnectedInstance connect_instance(const SefeInstance& inst);

// Part of an instance induced by one component of the union graph.
struct InstancePart {
  SefeInstance instance;
  std::vector<int> vertex_of;  // part vertex -> original vertex
  std::vector<int> edge_of;    // part edge -> original instance edge
};

// Components of the union graph that contain edges, in order of smallest vertex.
std::vector<InstancePart> split_union(const SefeInstance& inst);

}  // namespace sefe
