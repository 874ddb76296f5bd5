#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sefe/embedding.hpp"
#include "sefe/graph.hpp"
#include "sefe/instance.hpp"

namespace sefe {

// A connected component of the common graph with a fixed rotation. Local ids
// are independent of either host: local vertex i is vertices[i], local edge i
// is edges[i], and edges are sorted (min, max) endpoint pairs. Faces are traced
// in `local` with `rot` and numbered by their smallest local dart.
struct FixedComponent {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  Graph local;
  RotationSystem rot;
  Faces faces;

  int local_vertex(int v) const;         // -1 if absent
  int local_edge(int u, int v) const;    // -1 if absent
  // Face to the left of the directed edge u->v (instance vertex ids).
  int left_face(int u, int v) const;
};

// Face-valued positions: entry SemiEmbedding::index(k, i, j) is the face of
// component i (its own face numbering) containing component j.
using FacePositions = std::vector<int>;

// Common components with at least one edge, sorted by smallest vertex. Vertices
// of common degree >= 3 need a `rot` line; smaller degrees have a forced order.
// Throws MalformedInput for missing or incomplete rotation lines and for
// rotations that are not planar.
std::vector<FixedComponent> fixed_components(const SefeInstance& inst);

// Component from endpoint pairs and, per vertex, the cyclic order of its
// neighbours. Vertices without an entry must have degree <= 2.
FixedComponent make_component(std::vector<std::pair<int, int>> edges,
                              const std::map<int, std::vector<int>>& neighbour_order);

// The fixed rotation of a component expressed on a host graph containing all
// of its edges: order[v] lists host edge ids. Throws ConstraintViolation if an
// edge is missing.
RotationSystem host_order(const FixedComponent& c, const Graph& host);

}  // namespace sefe
