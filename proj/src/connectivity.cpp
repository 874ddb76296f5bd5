#include "sefe/connectivity.hpp"

#include <algorithm>

#include "sefe/error.hpp"

namespace sefe {

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.num_vertices();
  BlockCutTree bc;
  bc.edge_block.assign(static_cast<size_t>(g.num_edges()), -1);
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  struct Frame {
    int v, parent_edge, next;
  };
  std::vector<Frame> stack;
  std::vector<int> estack;
  int timer = 0;
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0 || g.degree(s) == 0) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const int v = f.v;
      if (f.next < g.degree(v)) {
        const int e = g.incident(v)[f.next++];
        if (e == f.parent_edge) continue;
        const int w = g.other(e, v);
        if (disc[w] < 0) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          estack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const int pe = f.parent_edge;
      stack.pop_back();
      if (pe < 0) continue;
      const int u = g.other(pe, v);
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        const int b = bc.num_blocks();
        bc.block_edges.emplace_back();
        int e;
        do {
          e = estack.back();
          estack.pop_back();
          bc.edge_block[e] = b;
          bc.block_edges[b].push_back(e);
        } while (e != pe);
        std::reverse(bc.block_edges[b].begin(), bc.block_edges[b].end());
      }
    }
  }
  bc.home_block.assign(static_cast<size_t>(n), -1);
  std::vector<int> count(static_cast<size_t>(n), 0), stamp(static_cast<size_t>(n), -1);
  bc.block_vertices.resize(bc.block_edges.size());
  for (int b = 0; b < bc.num_blocks(); ++b) {
    auto& vs = bc.block_vertices[b];
    for (int e : bc.block_edges[b])
      for (int x : {g.edge(e).u, g.edge(e).v})
        if (stamp[x] != b) {
          stamp[x] = b;
          vs.push_back(x);
          ++count[x];
          if (bc.home_block[x] < 0) bc.home_block[x] = b;
        }
    std::sort(vs.begin(), vs.end());
  }
  bc.cut_index.assign(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (count[v] >= 2) {
      bc.cut_index[v] = static_cast<int>(bc.cutvertices.size());
      bc.cutvertices.push_back(v);
    }
  bc.tree_adj.assign(static_cast<size_t>(bc.num_blocks()) + bc.cutvertices.size(), {});
  for (int b = 0; b < bc.num_blocks(); ++b)
    for (int v : bc.block_vertices[b])
      if (bc.cut_index[v] >= 0) {
        bc.tree_adj[b].push_back(bc.cut_node(v));
        bc.tree_adj[bc.cut_node(v)].push_back(b);
      }
  return bc;
}

RootedTree root_bc_tree(const BlockCutTree& bc, int root_block) {
  const int total = static_cast<int>(bc.tree_adj.size());
  std::vector<int> parent(static_cast<size_t>(total), -2);
  if (total == 0) return RootedTree(std::vector<int>{});
  parent[root_block] = -1;
  std::vector<int> queue{root_block};
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (int y : bc.tree_adj[x])
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (static_cast<int>(queue.size()) != total) fail(ErrorCode::DisconnectedGraph, "block-cut tree is a forest");
  return RootedTree(std::move(parent));
}

int block_toward(const BlockCutTree& bc, const RootedTree& t, int vertex, int from_block) {
  if (!bc.is_cutvertex(vertex)) return bc.home_block[vertex];
  const int c = bc.cut_node(vertex);
  if (t.is_ancestor(c, from_block)) return t.child_toward(c, from_block);
  return t.parent(c);
}

std::vector<std::vector<int>> cut_components(const Graph& g, int v) {
  BlockCutTree bc = block_cut_tree(g);
  if (v < 0 || v >= g.num_vertices() || !bc.is_cutvertex(v))
    fail(ErrorCode::NotACutvertex, "vertex " + std::to_string(v) + " is not a cutvertex");
  const int cv = bc.cut_node(v);
  std::vector<std::vector<int>> out;
  std::vector<char> seen(bc.tree_adj.size(), 0);
  seen[cv] = 1;
  for (int start : bc.tree_adj[cv]) {
    std::vector<int> edges, queue{start};
    seen[start] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      if (x < bc.num_blocks()) edges.insert(edges.end(), bc.block_edges[x].begin(), bc.block_edges[x].end());
      for (int y : bc.tree_adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
    }
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  }
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return false;
  return block_cut_tree(g).num_blocks() == 1;
}

}  // namespace sefe
