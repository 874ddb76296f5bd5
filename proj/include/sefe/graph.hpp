#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sefe {

struct Edge {
  int u = -1;
  int v = -1;
};

// Undirected multigraph on vertices 0..n-1. Edge ids are dense and stable.
// Darts: 2e is u->v, 2e+1 is v->u.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<size_t>(n)) {}

  int add_vertex() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> incident(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  int other(int e, int v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }
  // First edge joining u and v, or -1.
  int find_edge(int u, int v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline int dart_of(int e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline int dart_edge(int d) { return d >> 1; }
inline int dart_twin(int d) { return d ^ 1; }
inline int dart_tail(const Graph& g, int d) { return (d & 1) ? g.edge(d >> 1).v : g.edge(d >> 1).u; }
inline int dart_head(const Graph& g, int d) { return (d & 1) ? g.edge(d >> 1).u : g.edge(d >> 1).v; }
// Dart of e leaving `from`.
inline int dart_from(const Graph& g, int e, int from) { return dart_of(e, g.edge(e).u != from); }

// Connected component label per vertex; isolated vertices get their own label.
std::vector<int> component_labels(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Subgraph on the same vertex set keeping the listed edges; map[new] = old.
Graph edge_subgraph(const Graph& g, std::span<const int> edges, std::vector<int>* map = nullptr);

}  // namespace sefe
