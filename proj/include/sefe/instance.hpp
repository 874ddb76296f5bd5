#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sefe/graph.hpp"

namespace sefe {

enum class EdgeTag : std::uint8_t { Common, Excl1, Excl2 };

enum class Side : std::uint8_t { Left = 0, Right = 1 };
inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* side_name(Side s);

struct TaggedEdge {
  int u = -1;
  int v = -1;
  EdgeTag tag = EdgeTag::Common;
};

// Two graphs on a shared vertex set 0..n-1. Edge ids index `edges`; each host
// graph is the subgraph of its edges with its own dense ids.
struct SefeInstance {
  int n = 0;
  std::vector<TaggedEdge> edges;
  // Fixed cyclic order of common edges (instance ids) around a vertex.
  std::map<int, std::vector<int>> rotation_lines;

  Graph unified;
  Graph hosts[2];
  Graph common;
  std::vector<int> host_to_instance[2];
  std::vector<int> instance_to_host[2];  // -1 when absent
  std::vector<int> common_to_instance;

  const Graph& graph(int i) const { return hosts[i - 1]; }
  bool in_graph(int e, int i) const { return edges[e].tag == EdgeTag::Common || edges[e].tag == (i == 1 ? EdgeTag::Excl1 : EdgeTag::Excl2); }
};

// Validates endpoints, rejects loops and repeated pairs, checks both graphs are planar.
SefeInstance build_instance(int n, const std::vector<TaggedEdge>& edges,
                            const std::map<int, std::vector<int>>& rotation_lines = {});

// Cycle starting at its smallest vertex, continuing toward the smaller neighbour.
struct DirectedCycle {
  std::vector<int> vertices;
  auto operator<=>(const DirectedCycle&) const = default;
};

DirectedCycle canonical_cycle(std::vector<int> vertices);

// Components of a graph whose every vertex has degree 0 or 2, sorted by smallest vertex.
std::vector<DirectedCycle> cycles_of(const Graph& g);

// Common graph as disjoint cycles; throws CommonGraphNotCycles otherwise.
std::vector<DirectedCycle> common_cycles(const SefeInstance& inst);

// Edge ids of `g` along the cycle: edge i joins vertices[i] and vertices[i+1 mod len].
std::vector<int> cycle_edges(const Graph& g, const DirectedCycle& c);

// pos_C_i(C_j) for ordered pairs i != j of k cycles.
struct SemiEmbedding {
  int k = 0;
  std::vector<Side> pos;

  SemiEmbedding() = default;
  explicit SemiEmbedding(int k_) : k(k_), pos(static_cast<size_t>(k_ > 0 ? k_ * (k_ - 1) : 0), Side::Left) {}
  static int index(int k, int i, int j) { return i * (k - 1) + (j < i ? j : j - 1); }
  Side at(int i, int j) const { return pos[static_cast<size_t>(index(k, i, j))]; }
  void set(int i, int j, Side s) { pos[static_cast<size_t>(index(k, i, j))] = s; }
  auto operator<=>(const SemiEmbedding&) const = default;
};

SefeInstance parse_instance(std::istream& in);
SefeInstance load_instance(const std::string& path);
std::string format_instance(const SefeInstance& inst);

}  // namespace sefe
