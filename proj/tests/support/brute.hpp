#pragma once

// Test-side reference routines and generators. They favour obviousness over
// speed; the generators use the library's planarity test to reject edges.

#include <random>
#include <vector>

#include "sefe/components.hpp"
#include "sefe/graph.hpp"
#include "sefe/instance.hpp"

namespace brute {

using Rng = std::mt19937_64;

int components_without(const sefe::Graph& g, const std::vector<int>& removed);
std::vector<int> cutvertices(const sefe::Graph& g);
bool biconnected(const sefe::Graph& g);
bool triconnected(const sefe::Graph& g);

// Random simple planar graph: random candidate edges kept while planar.
sefe::Graph random_planar(int n, int m, Rng& rng);
// Random biconnected simple planar graph with n >= 3 vertices.
sefe::Graph random_biconnected_planar(int n, int extra, Rng& rng);

void add_cycle(sefe::Graph& g, const std::vector<int>& vs);
// Up to `ncycles` disjoint cycles of length 3 or 4 on a random vertex order,
// then random planar extra edges until `extra` were added and the graph is
// connected (when possible). Cycles come out sorted by vertex list.
sefe::Graph random_cycle_host(Rng& rng, int n, int ncycles, int extra, std::vector<sefe::DirectedCycle>& cycles);
// A further host on the same cycles: random planar edges, stopping at a random
// point once connected.
sefe::Graph random_cycle_cohost(Rng& rng, int n, const std::vector<sefe::DirectedCycle>& cycles);

// Disjoint components (edge, triangle, square, square with a chord, K4, wheel,
// an edge with three parallel paths of length two)
// on a random vertex order, then extra edges as above. Each component keeps,
// at random, either the host's own rotation or an arbitrary planar one the host
// may not be able to keep. Components come out sorted by vertex list.
sefe::Graph random_component_host(Rng& rng, int n, int ncomps, int extra, std::vector<sefe::FixedComponent>& comps);
sefe::Graph random_component_cohost(Rng& rng, int n, const std::vector<sefe::FixedComponent>& comps);

}  // namespace brute
