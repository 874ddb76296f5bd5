#include <algorithm>

#include "brute.hpp"
#include "doctest.h"
#include "sefe/components.hpp"
#include "sefe/error.hpp"
#include "sefe/oracle.hpp"

using namespace sefe;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Triangles {0,1,2}, {3,4,5} and optional extra edges.
Graph two_triangles(std::initializer_list<std::pair<int, int>> extra, int n = 6) {
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  for (auto [u, v] : extra) g.add_edge(u, v);
  return g;
}

std::vector<DirectedCycle> tri_cycles() { return {canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5})}; }

FixedComponent cycle_component(const DirectedCycle& c) {
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < c.vertices.size(); ++i) edges.push_back({c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]});
  return make_component(edges, {});
}

}  // namespace

TEST_CASE("rotation counts of small graphs") {
  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(enumerate_planar_rotations(tri, 100).size() == 1);
  CHECK(enumerate_planar_rotations(complete(4), 100).size() == 2);
  Graph star(4);
  for (int i = 1; i < 4; ++i) star.add_edge(0, i);
  CHECK(enumerate_planar_rotations(star, 100).size() == 2);
  CHECK(enumerate_planar_rotations(complete(5), 100000).empty());
  // every rotation of K4 (2^4 candidates) is traced; exactly the two mirror images survive
  auto k4 = enumerate_planar_rotations(complete(4), 100);
  CHECK(same_cyclic_order(mirror(k4[0])[0], k4[1][0]));
  CHECK(rotation_candidates(complete(4)) == 16);
}

TEST_CASE("cap is enforced") {
  try {
    enumerate_planar_rotations(complete(4), 15);
    FAIL("expected CapExceeded");
  } catch (const SefeError& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("two triangles joined by a bridge realise all four semi-embeddings") {
  Graph g = two_triangles({{2, 3}});
  auto s = achievable_semis(g, tri_cycles(), 1000);
  CHECK(s.size() == 4);
}

TEST_CASE("disconnected hosts are augmented") {
  Graph g = two_triangles({});
  CHECK(achievable_semis(g, tri_cycles(), 1000).size() == 4);
  // isolated vertices do not matter
  Graph h = two_triangles({}, 8);
  CHECK(achievable_semis(h, tri_cycles(), 1000).size() == 4);
  int count = 0;
  for_each_connected_augmentation(g, 1000, [&](const Graph& aug) {
    CHECK(is_connected(aug));
    ++count;
    return true;
  });
  CHECK(count == 9);
}

TEST_CASE("nested triangles: the inner one must lie on a fixed side") {
  // triangle 3-4-5 inside triangle 0-1-2, joined by 0-3, 1-4, 2-5 (prism)
  Graph g = two_triangles({{0, 3}, {1, 4}, {2, 5}});
  auto s = achievable_semis(g, tri_cycles(), 1000);
  // the prism has two embeddings, mirror images of each other
  CHECK(s.size() == 2);
  for (const auto& e : s) CHECK(e.at(0, 1) != e.at(1, 0));
}

TEST_CASE("mirror flips every position and extraction is vertex independent") {
  brute::Rng rng(5);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    Graph g = two_triangles({}, 6 + static_cast<int>(rng() % 3));
    // random extra planar edges keeping the triangles
    std::vector<std::pair<int, int>> cand;
    for (int u = 0; u < g.num_vertices(); ++u)
      for (int v = u + 1; v < g.num_vertices(); ++v)
        if (g.find_edge(u, v) < 0) cand.push_back({u, v});
    std::shuffle(cand.begin(), cand.end(), rng);
    for (size_t i = 0; i < cand.size() && i < 4; ++i) {
      g.add_edge(cand[i].first, cand[i].second);
      if (!is_planar(g)) g = edge_subgraph(g, [&] {
          std::vector<int> keep(static_cast<size_t>(g.num_edges() - 1));
          for (int e = 0; e + 1 < g.num_edges(); ++e) keep[e] = e;
          return keep;
        }());
    }
    if (!is_connected(g)) continue;
    for_each_planar_rotation(g, 100000, [&](const RotationSystem& rot) {
      auto a = extract_semi(g, rot, tri_cycles());
      auto b = extract_semi(g, mirror(rot), tri_cycles());
      for (auto& p : a.pos) p = flip(p);
      CHECK(a == b);
      ++checked;
      return true;
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("three nested cycles obey transitivity") {
  // triangles 0-1-2, 3-4-5, 6-7-8 in a chain of prisms
  Graph g(9);
  for (int t = 0; t < 3; ++t)
    for (int i = 0; i < 3; ++i) g.add_edge(3 * t + i, 3 * t + (i + 1) % 3);
  for (int i = 0; i < 3; ++i) {
    g.add_edge(i, 3 + i);
    g.add_edge(3 + i, 6 + i);
  }
  std::vector<DirectedCycle> cs{canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5}), canonical_cycle({6, 7, 8})};
  // try every rotation of a sparser variant too, to exercise non-nested layouts
  Graph h(9);
  for (int t = 0; t < 3; ++t)
    for (int i = 0; i < 3; ++i) h.add_edge(3 * t + i, 3 * t + (i + 1) % 3);
  h.add_edge(0, 3);
  h.add_edge(4, 6);
  for (const Graph* host : {&g, &h}) {
    for (const auto& s : achievable_semis(*host, cs, 1000000)) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) {
            if (i == j || j == k || i == k) continue;
            if (s.at(i, j) == Side::Left && s.at(j, k) == Side::Left && s.at(j, i) == Side::Right)
              CHECK(s.at(i, k) == Side::Left);
          }
    }
  }
}

TEST_CASE("brute-force SEFE on tiny instances") {
  // k = 1 is always a yes
  auto inst = build_instance(4, {{0, 1, EdgeTag::Common}, {1, 2, EdgeTag::Common}, {2, 0, EdgeTag::Common},
                                 {0, 3, EdgeTag::Excl1}, {1, 3, EdgeTag::Excl2}});
  CHECK(brute_force_sefe(inst, 1000).sefe);
  // graph 1 nests the triangles (prism), graph 2 joins them with a single edge
  std::vector<TaggedEdge> e;
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}) e.push_back({u, v, EdgeTag::Common});
  e.push_back({0, 3, EdgeTag::Excl1});
  e.push_back({1, 4, EdgeTag::Excl1});
  e.push_back({2, 5, EdgeTag::Excl1});
  e.push_back({0, 5, EdgeTag::Excl2});
  auto two = build_instance(6, e);
  auto v = brute_force_sefe(two, 1000);
  CHECK(v.sefe);
  REQUIRE(v.witness);
  CHECK(v.witness->at(0, 1) != v.witness->at(1, 0));
}

TEST_CASE("face positions agree with semi-embeddings on cycles") {
  Graph g = two_triangles({{0, 3}, {1, 4}});
  auto cs = tri_cycles();
  std::vector<FixedComponent> comps{cycle_component(cs[0]), cycle_component(cs[1])};
  for_each_planar_rotation(g, 1000, [&](const RotationSystem& rot) {
    auto semi = extract_semi(g, rot, cs);
    auto faces = extract_face_positions(g, rot, comps);
    for (int i = 0; i < 2; ++i) {
      const int j = 1 - i;
      const auto& c = cs[i].vertices;
      const int left = comps[i].left_face(c[0], c[1]);
      CHECK((faces[SemiEmbedding::index(2, i, j)] == left) == (semi.at(i, j) == Side::Left));
    }
    return true;
  });
  // a fixed component with a degree-3 vertex
  Graph h(6);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_edge(0, 3);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_edge(4, 5);
  h.add_edge(1, 4);
  h.add_edge(3, 5);
  auto comp = make_component({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}, {{0, {1, 2, 3}}, {2, {0, 1, 3}}});
  CHECK(comp.faces.count == 3);
  auto edge = make_component({{4, 5}}, {});
  auto pos = achievable_face_positions(h, {comp, edge}, 10000);
  // the edge {4,5} joins 1 and 3, so it lies in a face containing both
  for (const auto& p : pos) {
    const int f = p[SemiEmbedding::index(2, 0, 1)];
    CHECK(f >= 0);
    CHECK(p[SemiEmbedding::index(2, 1, 0)] == 0);
  }
  CHECK(pos.size() == 1);
}
