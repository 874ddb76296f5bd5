#include "sefe/graph.hpp"

#include "sefe/error.hpp"

namespace sefe {

int Graph::add_edge(int u, int v) {
  SEFE_ASSERT(u >= 0 && v >= 0 && u < num_vertices() && v < num_vertices(), "edge endpoint out of range");
  const int id = num_edges();
  edges_.push_back({u, v});
  adj_[static_cast<size_t>(u)].push_back(id);
  if (u != v) adj_[static_cast<size_t>(v)].push_back(id);
  return id;
}

int Graph::find_edge(int u, int v) const {
  const auto& a = adj_[static_cast<size_t>(u)];
  const auto& b = adj_[static_cast<size_t>(v)];
  const auto& s = a.size() <= b.size() ? a : b;
  for (int e : s) {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
  }
  return -1;
}

std::vector<int> component_labels(const Graph& g, int* count) {
  const int n = g.num_vertices();
  std::vector<int> label(static_cast<size_t>(n), -1);
  std::vector<int> stack;
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : g.incident(v)) {
        int w = g.other(e, v);
        if (label[w] < 0) {
          label[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

bool is_connected(const Graph& g) {
  int c = 0;
  component_labels(g, &c);
  return c <= 1;
}

Graph edge_subgraph(const Graph& g, std::span<const int> edges, std::vector<int>* map) {
  Graph h(g.num_vertices());
  if (map) map->clear();
  for (int e : edges) {
    h.add_edge(g.edge(e).u, g.edge(e).v);
    if (map) map->push_back(e);
  }
  return h;
}

}  // namespace sefe
