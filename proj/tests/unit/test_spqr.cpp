#include <algorithm>
#include <map>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "sefe/connectivity.hpp"
#include "sefe/embedding.hpp"
#include "sefe/error.hpp"
#include "sefe/spqr.hpp"

using namespace sefe;

namespace {

std::pair<int, int> ends(const SkelEdge& se) { return std::minmax(se.u, se.v); }

// Structural invariants of an SPQR-tree, checked against definitions only.
void check_tree(const Graph& g, const std::vector<int>& block, const SpqrTree& t) {
  const int n = static_cast<int>(t.nodes.size());
  int tree_edges = 0;
  std::vector<int> q_count(static_cast<size_t>(g.num_edges()), 0);
  for (int mu = 0; mu < n; ++mu) {
    const auto& node = t.nodes[mu];
    for (int i = 0; i < static_cast<int>(node.edges.size()); ++i) {
      const auto& se = node.edges[i];
      if (se.twin_node < 0) {
        REQUIRE(node.kind == NodeKind::Q);
        ++q_count[se.real_edge];
        CHECK(t.q_of(se.real_edge) == mu);
        continue;
      }
      const auto& tw = t.nodes[se.twin_node].edges[se.twin_edge];
      CHECK(tw.twin_node == mu);
      CHECK(tw.twin_edge == i);
      CHECK(ends(tw) == ends(se));
      if (se.twin_node > mu) ++tree_edges;
      const NodeKind other = t.nodes[se.twin_node].kind;
      if (node.kind == NodeKind::S || node.kind == NodeKind::P) CHECK(other != node.kind);
    }
    Graph sk = skeleton_graph(node);
    switch (node.kind) {
      case NodeKind::Q:
        CHECK(node.edges.size() == 2);
        CHECK(ends(node.edges[0]) == ends(node.edges[1]));
        break;
      case NodeKind::S: {
        CHECK(node.edges.size() >= 3);
        CHECK(sk.num_vertices() == sk.num_edges());
        for (int v = 0; v < sk.num_vertices(); ++v) CHECK(sk.degree(v) == 2);
        CHECK(is_connected(sk));
        break;
      }
      case NodeKind::P:
        CHECK(node.edges.size() >= 3);
        CHECK(node.vertices.size() == 2);
        break;
      case NodeKind::R: {
        std::set<std::pair<int, int>> pairs;
        for (const auto& se : node.edges) pairs.insert(ends(se));
        CHECK(pairs.size() == node.edges.size());
        CHECK(brute::triconnected(sk));
        break;
      }
    }
  }
  CHECK(tree_edges == n - 1);
  for (int e = 0; e < g.num_edges(); ++e) {
    const bool in_block = std::binary_search(block.begin(), block.end(), e);
    CHECK(q_count[e] == (in_block ? 1 : 0));
  }
  // every skeleton edge expands to a subgraph meeting the skeleton only in its
  // poles, and the expansions of one skeleton partition the block
  for (int mu = 0; mu < n; ++mu) {
    const auto& node = t.nodes[mu];
    std::vector<int> all;
    for (int i = 0; i < static_cast<int>(node.edges.size()); ++i) {
      if (node.edges[i].twin_node < 0) {
        all.push_back(node.edges[i].real_edge);
        continue;
      }
      auto ex = expansion_edges(t, mu, i);
      std::set<int> touched;
      for (int e : ex)
        for (int x : {g.edge(e).u, g.edge(e).v})
          if (std::binary_search(node.vertices.begin(), node.vertices.end(), x)) touched.insert(x);
      CHECK(touched == std::set<int>{node.edges[i].u, node.edges[i].v});
      all.insert(all.end(), ex.begin(), ex.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == block);
  }
}

Graph random_biconnected(int n, int extra, brute::Rng& rng) {
  Graph g(n);
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<int, int>> have;
  for (int i = 0; i < n; ++i) {
    auto p = std::minmax(perm[i], perm[(i + 1) % n]);
    have.insert(p);
    g.add_edge(p.first, p.second);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < extra; ++k) {
    const int a = pick(rng), b = pick(rng);
    const std::pair<int, int> p = std::minmax(a, b);
    if (p.first == p.second || have.count(p)) continue;
    have.insert(p);
    g.add_edge(p.first, p.second);
  }
  return g;
}

std::vector<int> all_edges(const Graph& g) {
  std::vector<int> v(static_cast<size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) v[e] = e;
  return v;
}

std::map<NodeKind, int> kind_count(const SpqrTree& t) {
  std::map<NodeKind, int> m;
  for (const auto& n : t.nodes) ++m[n.kind];
  return m;
}

}  // namespace

TEST_CASE("cycle is a single S-node") {
  Graph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  auto t = build_spqr(g);
  check_tree(g, all_edges(g), t);
  auto k = kind_count(t);
  CHECK(k[NodeKind::S] == 1);
  CHECK(k[NodeKind::Q] == 5);
  CHECK(k[NodeKind::P] == 0);
}

TEST_CASE("K4 is a single R-node") {
  Graph g(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  auto t = build_spqr(g);
  check_tree(g, all_edges(g), t);
  auto k = kind_count(t);
  CHECK(k[NodeKind::R] == 1);
  CHECK(k[NodeKind::S] == 0);
}

TEST_CASE("theta graph has one P-node and three S-nodes") {
  // three paths of length two between 0 and 1
  Graph g(5);
  for (int m = 2; m < 5; ++m) {
    g.add_edge(0, m);
    g.add_edge(m, 1);
  }
  auto t = build_spqr(g);
  check_tree(g, all_edges(g), t);
  auto k = kind_count(t);
  CHECK(k[NodeKind::P] == 1);
  CHECK(k[NodeKind::S] == 3);
}

TEST_CASE("triangle with a chord-free parallel path") {
  // edge {0,1} plus two paths 0-2-1 and 0-3-1: P-node with a real edge
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(2, 1);
  g.add_edge(0, 3);
  g.add_edge(3, 1);
  auto t = build_spqr(g);
  check_tree(g, all_edges(g), t);
  CHECK(kind_count(t)[NodeKind::P] == 1);
}

TEST_CASE("five-node chain P-R-P-S-P") {
  // K4 on 0..3 with {0,1} doubled, {2,3} bypassed by the path 2-4-5-3 whose
  // middle edge is doubled; P-nodes with a single virtual edge need parallel
  // real edges, so this is a multigraph
  Graph g(6);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  g.add_edge(0, 1);
  g.add_edge(2, 4);
  g.add_edge(4, 5);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  auto t = build_spqr(g);
  auto k = kind_count(t);
  CHECK(k[NodeKind::P] == 3);
  CHECK(k[NodeKind::R] == 1);
  CHECK(k[NodeKind::S] == 1);
  CHECK(k[NodeKind::Q] == g.num_edges());
  // P-nodes are not adjacent to each other; the non-Q nodes form a path
  for (int mu = 0; mu < static_cast<int>(t.nodes.size()); ++mu) {
    if (t.nodes[mu].kind == NodeKind::Q) continue;
    int inner = 0;
    for (const auto& se : t.nodes[mu].edges)
      if (se.twin_node >= 0 && t.nodes[se.twin_node].kind != NodeKind::Q) ++inner;
    CHECK(inner <= 2);
  }
}

TEST_CASE("expansion of a real edge is rejected") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  auto t = build_spqr(g);
  const int q = t.q_of(1);
  try {
    expansion_edges(t, q, 0);
    FAIL("expected NotVirtual");
  } catch (const SefeError& e) {
    CHECK(e.code() == ErrorCode::NotVirtual);
  }
  CHECK(expansion_edges(t, q, 1) == std::vector<int>{0, 2});
}

TEST_CASE("skeleton sizes stay linear") {
  brute::Rng rng(23);
  for (int round = 0; round < 100; ++round) {
    const int n = 5 + static_cast<int>(rng() % 30);
    Graph g = brute::random_biconnected_planar(n, n, rng);
    auto t = build_spqr(g);
    size_t total = 0;
    for (const auto& node : t.nodes) total += node.edges.size();
    CHECK(total <= 8 * static_cast<size_t>(g.num_edges()));
  }
}

TEST_CASE("non-biconnected input is rejected") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 2);
  try {
    build_spqr(g);
    FAIL("expected NotBiconnected");
  } catch (const SefeError& e) {
    CHECK(e.code() == ErrorCode::NotBiconnected);
  }
  std::vector<int> tri{0, 1, 2};
  check_tree(g, tri, build_spqr(g, tri));
}

TEST_CASE("random biconnected graphs satisfy the SPQR invariants") {
  brute::Rng rng(7);
  for (int round = 0; round < 400; ++round) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const int extra = static_cast<int>(rng() % (2 * n));
    Graph g = round % 2 ? random_biconnected(n, extra, rng) : brute::random_biconnected_planar(n, extra, rng);
    CAPTURE(round);
    auto t = build_spqr(g);
    check_tree(g, all_edges(g), t);
  }
}

TEST_CASE("blocks of random planar graphs") {
  brute::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const int n = 4 + static_cast<int>(rng() % 10);
    Graph g = brute::random_planar(n, n + static_cast<int>(rng() % n), rng);
    auto bc = block_cut_tree(g);
    for (int b = 0; b < bc.num_blocks(); ++b) {
      auto edges = bc.block_edges[b];
      if (edges.size() < 3) continue;
      std::sort(edges.begin(), edges.end());
      check_tree(g, edges, build_spqr(g, edges));
    }
  }
}

TEST_CASE("rooting, edge lookup and cycle classification") {
  brute::Rng rng(3);
  for (int round = 0; round < 100; ++round) {
    const int n = 4 + static_cast<int>(rng() % 8);
    Graph g = brute::random_biconnected_planar(n, n, rng);
    auto t = build_spqr(g);
    const int root = t.q_of(0);
    auto rt = root_spqr(t, root);
    CHECK(rt.shape.root() == root);
    for (int mu = 0; mu < static_cast<int>(t.nodes.size()); ++mu) {
      for (int e = 0; e < g.num_edges(); ++e) {
        const int i = rt.edge_of(mu, e);
        if (t.nodes[mu].edges[i].twin_node < 0) {
          CHECK(t.nodes[mu].edges[i].real_edge == e);
          continue;
        }
        auto ex = expansion_edges(t, mu, i);
        CHECK(std::binary_search(ex.begin(), ex.end(), e));
      }
      for (int i = 0; i < static_cast<int>(t.nodes[mu].edges.size()); ++i) {
        const int c = rt.child_behind(mu, i);
        if (c >= 0) CHECK(rt.shape.parent(c) == mu);
      }
    }
    // the Hamiltonian cycle 0..n-1 is not guaranteed; use a face of an embedding
    auto rot = planar_embedding(g);
    REQUIRE(rot);
    auto faces = trace_faces(g, *rot);
    const auto pos = rotation_positions(g, *rot);
    std::vector<int> face_darts;
    for (int d = 0; d < 2 * g.num_edges(); ++d)
      if (faces.of_dart[d] == 0) face_darts.push_back(d);
    // walk face 0 in order
    std::vector<int> cyc_v, cyc_e;
    int d = face_darts[0];
    do {
      cyc_v.push_back(dart_tail(g, d));
      cyc_e.push_back(dart_edge(d));
      d = face_successor(g, *rot, pos, d);
    } while (d != face_darts[0]);
    std::set<int> distinct(cyc_v.begin(), cyc_v.end());
    if (distinct.size() != cyc_v.size()) continue;  // faces of biconnected graphs are cycles
    for (int mu = 0; mu < static_cast<int>(t.nodes.size()); ++mu) {
      auto cls = classify_cycle(rt, mu, cyc_v, cyc_e);
      if (!cls.as_cycle) {
        auto ex = expansion_edges(t, mu, cls.contracted_edge);
        for (int e : cyc_e) CHECK(std::binary_search(ex.begin(), ex.end(), e));
        continue;
      }
      // consecutive skeleton edges share the expected vertex
      const auto& es = t.nodes[mu].edges;
      const int k = static_cast<int>(cls.kappa.size());
      CHECK(k >= 2);
      for (int j = 0; j < k; ++j) {
        const auto& a = es[cls.kappa[j]];
        const auto& b = es[cls.kappa[(j + 1) % k]];
        const int a_exit = cls.kappa_dir[j] == 0 ? a.v : a.u;
        const int b_entry = cls.kappa_dir[(j + 1) % k] == 0 ? b.u : b.v;
        CHECK(a_exit == b_entry);
      }
    }
  }
}

TEST_CASE("reference rotation is canonical and planar") {
  Graph g(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
  auto t = build_spqr(g);
  for (const auto& node : t.nodes) {
    if (node.kind != NodeKind::R) continue;
    Graph sk = skeleton_graph(node);
    auto rot = reference_rotation(node);
    CHECK(is_sphere_embedding(sk, rot));
    const auto& r = rot[0];
    // smallest neighbour first, then the successor beats the predecessor
    int p = 0;
    for (int i = 1; i < static_cast<int>(r.size()); ++i)
      if (sk.other(r[i], 0) < sk.other(r[p], 0)) p = i;
    const int d = static_cast<int>(r.size());
    CHECK(sk.other(r[(p + 1) % d], 0) < sk.other(r[(p + d - 1) % d], 0));
  }
  CHECK(spqr_to_dot(t).find("graph spqr") == 0);
}

TEST_CASE("large path-like graph does not overflow the stack") {
  // ladder with 20000 rungs: deep DFS, many S- and P-free R-nodes
  const int rungs = 20000;
  Graph g(2 * rungs);
  for (int i = 0; i < rungs; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    if (i + 1 < rungs) {
      g.add_edge(2 * i, 2 * i + 2);
      g.add_edge(2 * i + 1, 2 * i + 3);
    }
  }
  auto t = build_spqr(g);
  int q = 0;
  for (const auto& node : t.nodes) q += node.kind == NodeKind::Q;
  CHECK(q == g.num_edges());
  auto rt = root_spqr(t, t.q_of(0));
  CHECK(rt.shape.size() == static_cast<int>(t.nodes.size()));
}

TEST_CASE("medium random graphs satisfy the SPQR invariants") {
  brute::Rng rng(19);
  for (int round = 0; round < 60; ++round) {
    const int n = 20 + static_cast<int>(rng() % 40);
    const int extra = static_cast<int>(rng() % (n / 2 + 1));
    Graph g = round % 2 ? random_biconnected(n, extra, rng) : brute::random_biconnected_planar(n, extra, rng);
    CAPTURE(round);
    check_tree(g, all_edges(g), build_spqr(g));
  }
}
