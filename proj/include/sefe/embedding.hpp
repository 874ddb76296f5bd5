#pragma once

#include <optional>
#include <vector>

#include "sefe/graph.hpp"

namespace sefe {

// Cyclic order of incident edge ids per vertex. The face to the left of dart
// u->v continues at v with the successor of the edge in rot[v].
using RotationSystem = std::vector<std::vector<int>>;

struct Faces {
  int count = 0;
  std::vector<int> of_dart;  // face id per dart; faces numbered by smallest dart
};

// Position of each edge in the rotation of each endpoint: index 2e for u, 2e+1 for v.
std::vector<int> rotation_positions(const Graph& g, const RotationSystem& rot);

// Next dart on the same face.
int face_successor(const Graph& g, const RotationSystem& rot, const std::vector<int>& pos, int dart);

Faces trace_faces(const Graph& g, const RotationSystem& rot);

// Structural check that rot lists every incident edge exactly once per vertex.
bool is_rotation_of(const Graph& g, const RotationSystem& rot);

// Euler check per connected component (V - E + F = 2 for components with edges).
bool is_sphere_embedding(const Graph& g, const RotationSystem& rot);

RotationSystem mirror(const RotationSystem& rot);

// Rotation restricted to an edge subset (keep[e] true) of the same graph.
RotationSystem restrict_rotation(const RotationSystem& rot, const std::vector<char>& keep);

bool same_cyclic_order(const std::vector<int>& a, const std::vector<int>& b);

bool is_planar(const Graph& g);
// Some planar rotation system of g (parallel edges allowed), or nullopt.
std::optional<RotationSystem> planar_embedding(const Graph& g);

}  // namespace sefe
