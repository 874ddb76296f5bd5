#include <algorithm>
#include <map>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "sefe/cctree.hpp"
#include "sefe/error.hpp"
#include "sefe/oracle.hpp"

using namespace sefe;
using brute::add_cycle;

namespace {

constexpr std::size_t kCap = 2'000'000;

std::set<Assignment> models(const ConstraintSet& cs) {
  const auto all = enumerate_models(cs, 1 << 20);
  return {all.begin(), all.end()};
}

// Reference models restricted to the crucial variables of the tree.
std::set<Assignment> projected_reference(const ReferenceModel& m, const CTree& t) {
  std::set<Assignment> out;
  for (const auto& a : enumerate_models(m.cs, 1 << 20)) {
    Assignment c(static_cast<size_t>(t.num_vars()));
    for (int v = 0; v < t.num_vars(); ++v) {
      const auto [x, y] = t.var_pair(v);
      c[v] = a[pos_var(m.k, x, y)];
    }
    out.insert(c);
  }
  return out;
}

CcTree random_cctree(brute::Rng& rng, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < k; ++v) edges.push_back({static_cast<int>(rng() % v), v});
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto& e : edges)
    if (rng() % 2) std::swap(e.first, e.second);
  CcTree t{make_ctree(k, edges), ConstraintSet(2 * (k - 1))};
  const int nv = t.tree.num_vars();
  const int count = nv == 0 ? 0 : static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    const int a = static_cast<int>(rng() % nv), b = static_cast<int>(rng() % nv);
    if (a == b) continue;
    if (rng() % 2)
      t.cs.add_eq(a, b);
    else
      t.cs.add_neq(a, b);
  }
  return t;
}

std::set<SemiEmbedding> meet(const std::set<SemiEmbedding>& a, const std::set<SemiEmbedding>& b) {
  std::set<SemiEmbedding> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

}  // namespace

TEST_CASE("C-tree shapes") {
  Graph g(6);
  add_cycle(g, {0, 1, 2});
  add_cycle(g, {3, 4, 5});
  g.add_edge(2, 3);
  const auto t = build_ctree(g, {canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5})});
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(t.host_path(0) == std::vector<int>{3, 2});

  Graph star(13);
  add_cycle(star, {0, 1, 2});
  std::vector<DirectedCycle> cs{canonical_cycle({0, 1, 2})};
  for (int i = 0; i < 3; ++i) {
    const int b = 3 + 3 * i;
    add_cycle(star, {b, b + 1, b + 2});
    cs.push_back(canonical_cycle({b, b + 1, b + 2}));
    star.add_edge(12, b);
  }
  star.add_edge(0, 12);
  const auto s = build_ctree(star, cs);
  CHECK(s.edges.size() == 3);
  for (const auto& [a, b] : s.edges) CHECK(a == 0);
  CHECK(s.host_path(0) == std::vector<int>{3, 12, 0});

  Graph one(3);
  add_cycle(one, {0, 1, 2});
  CHECK(build_ctree(one, {canonical_cycle({0, 1, 2})}).edges.empty());
  const auto single = build_cctree(one, {canonical_cycle({0, 1, 2})});
  CHECK(single.cs.list.empty());
  CHECK(represented_set(single, 10).size() == 1);

  CHECK_THROWS_AS(make_ctree(3, {{0, 1}, {1, 0}}), SefeError);
}

TEST_CASE("C-tree paths are host paths through non-cycle vertices") {
  brute::Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    std::vector<DirectedCycle> cycles;
    const Graph g = brute::random_cycle_host(rng, 14, 3 + static_cast<int>(rng() % 2), 3, cycles);
    if (!is_connected(g)) continue;
    const auto t = build_ctree(g, cycles);
    REQUIRE(static_cast<int>(t.edges.size()) == t.k - 1);
    for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
      const auto p = t.host_path(e);
      REQUIRE(p.size() >= 2);
      CHECK(t.host_cycle[p.front()] == t.edges[e].second);
      CHECK(t.host_cycle[p.back()] == t.edges[e].first);
      for (size_t i = 1; i + 1 < p.size(); ++i) CHECK(t.host_cycle[p[i]] == -1);
      for (size_t i = 1; i < p.size(); ++i) CHECK(g.find_edge(p[i - 1], p[i]) >= 0);
    }
  }
}

TEST_CASE("phase data matches direct recomputation") {
  brute::Rng rng(7);
  int blocks = 0;
  for (int round = 0; round < 300; ++round) {
    std::vector<DirectedCycle> cycles;
    const int n = 8 + static_cast<int>(rng() % 12);
    const Graph g = brute::random_cycle_host(rng, n, 2 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 10),
                                             cycles);
    if (!is_connected(g) || cycles.size() < 2) continue;
    const auto built = build_cctree_detailed(g, cycles);
    for (const auto& ph : built.blocks) {
      const SpqrTree& t = *ph.tree;
      const RootedTree& shape = ph.rooted.shape;
      const int nn = static_cast<int>(t.nodes.size());
      std::map<int, std::set<int>> induced;
      for (size_t i = 0; i < ph.cycles.size(); ++i) {
        const int c = ph.cycles[i];
        const auto ce = cycle_edges(g, cycles[c]);
        for (int mu = 0; mu < nn; ++mu) {
          bool as_cycle;
          if (t.nodes[mu].kind == NodeKind::Q) {
            const int real = t.nodes[mu].edges[0].real_edge;
            as_cycle = std::find(ce.begin(), ce.end(), real) != ce.end();
          } else {
            as_cycle = classify_cycle(ph.rooted, mu, cycles[c].vertices, ce).as_cycle;
          }
          const bool listed = std::count(ph.cyc[mu].begin(), ph.cyc[mu].end(), c) == 1;
          CHECK(as_cycle == listed);
          if (as_cycle) induced[c].insert(mu);
        }
        // root: the induced node whose parent is not induced
        int roots = 0;
        for (int mu : induced[c])
          if (shape.parent(mu) < 0 || !induced[c].count(shape.parent(mu))) {
            ++roots;
            CHECK(ph.root[i] == mu);
          }
        CHECK(roots == 1);
      }
      for (int mu = 0; mu < nn; ++mu) {
        const int p = shape.parent(mu);
        int owners = 0, owner = -1;
        for (const auto& [c, set] : induced)
          if (p >= 0 && set.count(mu) && set.count(p)) {
            ++owners;
            owner = c;
          }
        CHECK(owners <= 1);  // induced subtrees are edge-disjoint
        CHECK(ph.bel[mu] == owner);
        // high by rescanning the path to the root
        int want = -1;
        if (p >= 0 && owner < 0)
          for (int v = mu; shape.parent(v) >= 0 && ph.bel[v] < 0; v = shape.parent(v)) want = v;
        CHECK(ph.high[mu] == want);
      }
      ++blocks;
    }
  }
  CHECK(blocks >= 100);
}

TEST_CASE("four-phase system equals the reference system on crucial positions") {
  brute::Rng rng(13);
  int tested = 0;
  for (int round = 0; round < 1500 && tested < 400; ++round) {
    std::vector<DirectedCycle> cycles;
    const int n = 7 + static_cast<int>(rng() % 10);
    const Graph g = brute::random_cycle_host(rng, n, 2 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 10),
                                             cycles);
    if (!is_connected(g) || cycles.size() < 2) continue;
    const auto built = build_cctree_detailed(g, cycles);
    const auto ref = build_reference(g, cycles);
    const CTree& t = built.cct.tree;
    for (int v = 0; v < t.num_vars(); ++v) {
      const auto [c, d] = t.var_pair(v);
      CHECK(built.det[v] == ref.det[pos_var(ref.k, c, d)]);
    }
    CHECK(models(built.cct.cs) == projected_reference(ref, t));
    ++tested;
  }
  CHECK(tested >= 300);
}

TEST_CASE("represented sets equal the oracle's semi-embeddings") {
  brute::Rng rng(19);
  int tested = 0;
  for (int round = 0; round < 600 && tested < 120; ++round) {
    std::vector<DirectedCycle> cycles;
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = brute::random_cycle_host(rng, n, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 5),
                                             cycles);
    if (!is_connected(g) || rotation_candidates(g) > kCap) continue;
    CHECK(represented_set(build_cctree(g, cycles), 1 << 20) == achievable_semis(g, cycles, kCap));
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("two triangles joined by an edge admit all four crucial assignments") {
  Graph g(6);
  add_cycle(g, {0, 1, 2});
  add_cycle(g, {3, 4, 5});
  g.add_edge(0, 3);
  const auto t = build_cctree(g, {canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5})});
  CHECK(enumerate_models(t.cs, 100).size() == 4);
}

TEST_CASE("tree propagation and a single equality") {
  // star centred at 0: pos_1(2) follows pos_1(0)
  CcTree star{make_ctree(3, {{0, 1}, {0, 2}}), ConstraintSet(4)};
  const auto set = represented_set(star, 100);
  CHECK(set.size() == 16);
  for (const auto& s : set) CHECK(s.at(1, 2) == s.at(1, 0));
  // path 0-1-2 with pos_1(0) = pos_1(2)
  CcTree path{make_ctree(3, {{0, 1}, {1, 2}}), ConstraintSet(4)};
  path.cs.add_eq(path.tree.var(1, 0), path.tree.var(1, 2));
  CHECK(enumerate_models(path.cs, 100).size() == 8);
  CHECK(represented_set(path, 100).size() == 8);
  CHECK_THROWS_AS(represented_set(star, 3), SefeError);
}

TEST_CASE("intersection adds the common-face equality on the host path") {
  // first tree: path 0 - 2 - 1; second tree has the edge {0, 1}
  CcTree a{make_ctree(3, {{0, 2}, {2, 1}}), ConstraintSet(4)};
  CcTree b{make_ctree(3, {{0, 1}, {1, 2}}), ConstraintSet(4)};
  const auto x = intersect(a, b);
  bool found = false;
  for (const auto& con : x.cs.list) {
    const std::set<int> vars{con.x.var, con.y.var};
    found = found || (con.kind == RelKind::Eq && vars == std::set<int>{a.tree.var(2, 0), a.tree.var(2, 1)});
  }
  CHECK(found);
  CHECK(models(intersect(a, a).cs) == models(a.cs));
  CHECK_THROWS_AS(intersect(a, CcTree{make_ctree(2, {{0, 1}}), ConstraintSet(2)}), SefeError);
}

TEST_CASE("intersection is exact, commutative and associative on random trees") {
  brute::Rng rng(29);
  for (int round = 0; round < 600; ++round) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto a = random_cctree(rng, k), b = random_cctree(rng, k), c = random_cctree(rng, k);
    const auto ra = represented_set(a, 1 << 20), rb = represented_set(b, 1 << 20), rc = represented_set(c, 1 << 20);
    const auto ab = represented_set(intersect(a, b), 1 << 20);
    CHECK(ab == meet(ra, rb));
    CHECK(ab == represented_set(intersect(b, a), 1 << 20));
    CHECK(represented_set(intersect(intersect(a, b), c), 1 << 20) ==
          represented_set(intersect(a, intersect(b, c)), 1 << 20));
    CHECK(represented_set(intersect(intersect(a, b), c), 1 << 20) == meet(meet(ra, rb), rc));
  }
}

TEST_CASE("fast and reference decisions agree") {
  brute::Rng rng(37);
  int tested = 0, no = 0;
  for (int round = 0; round < 2000 && tested < 300; ++round) {
    std::vector<DirectedCycle> cycles;
    const int n = 8 + static_cast<int>(rng() % 8);
    std::vector<Graph> hosts{brute::random_cycle_host(rng, n, 3 + static_cast<int>(rng() % 2), 4, cycles)};
    if (cycles.size() < 2 || !is_connected(hosts[0])) continue;
    const int extra_hosts = 1 + static_cast<int>(rng() % 2);
    bool ok = true;
    for (int h = 0; h < extra_hosts && ok; ++h) {
      hosts.push_back(brute::random_cycle_cohost(rng, n, cycles));
      ok = is_connected(hosts.back());
    }
    if (!ok) continue;
    const auto fast = decide_sefe_cycles(hosts, cycles, Path::Fast, true);
    const auto ref = decide_sefe_cycles(hosts, cycles, Path::Reference, false);
    CHECK(fast.sefe == ref.sefe);
    if (fast.sefe)
      for (size_t i = 0; i < hosts.size(); ++i) CHECK(extract_semi(hosts[i], fast.witness[i], cycles) == *fast.semi);
    else
      ++no;
    ++tested;
  }
  CHECK(tested >= 200);
  CHECK(no >= 20);
}

TEST_CASE("long chain of cycles builds without deep recursion") {
  // 3000 triangles in a row, each joined to the next by two edges
  const int k = 3000;
  Graph g(3 * k);
  std::vector<DirectedCycle> cycles;
  for (int i = 0; i < k; ++i) {
    add_cycle(g, {3 * i, 3 * i + 1, 3 * i + 2});
    cycles.push_back(canonical_cycle({3 * i, 3 * i + 1, 3 * i + 2}));
    if (i > 0) {
      g.add_edge(3 * i - 3, 3 * i);
      g.add_edge(3 * i - 2, 3 * i + 1);
    }
  }
  const auto t = build_cctree(g, cycles);
  CHECK(t.tree.num_vars() == 2 * (k - 1));
  const auto a = solve_2sat(intersect(t, t).cs);
  CHECK(a.has_value());
}
