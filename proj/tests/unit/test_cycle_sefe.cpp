#include <algorithm>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "sefe/cycle_sefe.hpp"
#include "sefe/error.hpp"
#include "sefe/oracle.hpp"

using namespace sefe;

namespace {

constexpr std::size_t kCap = 2'000'000;

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    FAIL("expected an error");
  } catch (const SefeError& e) {
    CHECK(e.code() == code);
  }
}

using brute::add_cycle;

std::set<SemiEmbedding> model_semis(const ConstraintSet& cs, int k) {
  std::set<SemiEmbedding> out;
  for (const auto& a : enumerate_models(cs, 1 << 20)) {
    SemiEmbedding s(k);
    s.pos = a;
    out.insert(s);
  }
  return out;
}

// Host edges inside skeleton edge i of node mu.
std::set<int> expansion(const SpqrTree& t, int mu, int i) {
  const SkelEdge& se = t.nodes[mu].edges[i];
  if (se.twin_node < 0) return {se.real_edge};
  const auto e = expansion_edges(t, mu, i);
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("constraint models equal the oracle's semi-embeddings and realise exactly") {
  brute::Rng rng(5);
  int tested = 0, with_cut = 0;
  for (int round = 0; round < 600 && tested < 150; ++round) {
    std::vector<DirectedCycle> cycles;
    const int n = 6 + static_cast<int>(rng() % 4);
    const Graph g = brute::random_cycle_host(rng, n, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 5), cycles);
    if (!is_connected(g) || rotation_candidates(g) > kCap) continue;
    const auto m = build_reference(g, cycles);
    const auto expect = achievable_semis(g, cycles, kCap);
    const auto got = model_semis(m.cs, m.k);
    CHECK(got == expect);
    for (const auto& s : got) {
      const auto rot = realize_embedding(m, g, s);
      CHECK(is_sphere_embedding(g, rot));
      CHECK(extract_semi(g, rot, cycles) == s);
    }
    if (!is_biconnected(g)) ++with_cut;
    ++tested;
  }
  CHECK(tested >= 100);
  CHECK(with_cut >= 20);
}

TEST_CASE("each relative position has exactly one determining node in a biconnected host") {
  brute::Rng rng(11);
  int tested = 0;
  for (int round = 0; round < 800 && tested < 120; ++round) {
    std::vector<DirectedCycle> cycles;
    const int n = 7 + static_cast<int>(rng() % 6);
    const Graph g = brute::random_cycle_host(rng, n, 2 + static_cast<int>(rng() % 2), 4 + static_cast<int>(rng() % 6), cycles);
    if (!is_biconnected(g)) continue;
    const auto m = build_reference(g, cycles);
    REQUIRE(m.blocks.size() == 1);
    const SpqrTree& t = *m.blocks[0].tree;
    for (int c = 0; c < m.k; ++c)
      for (int d = 0; d < m.k; ++d) {
        if (c == d) continue;
        const std::set<int> ec(m.cycle_edges[c].begin(), m.cycle_edges[c].end());
        const std::set<int> ed(m.cycle_edges[d].begin(), m.cycle_edges[d].end());
        int count = 0, where = -1;
        for (int mu = 0; mu < static_cast<int>(t.nodes.size()); ++mu) {
          int touched = 0;
          bool separated = false;
          for (int i = 0; i < static_cast<int>(t.nodes[mu].edges.size()); ++i) {
            const auto x = expansion(t, mu, i);
            const bool has_c = std::any_of(ec.begin(), ec.end(), [&](int e) { return x.count(e) > 0; });
            const bool has_d = std::any_of(ed.begin(), ed.end(), [&](int e) { return x.count(e) > 0; });
            touched += has_c ? 1 : 0;
            separated = separated || (has_d && !has_c);
          }
          if (touched >= 2 && separated) {
            ++count;
            where = mu;
          }
        }
        CHECK(count == 1);
        const Site& s = m.det[pos_var(m.k, c, d)];
        CHECK(s.kind == Site::Kind::Node);
        CHECK(s.node == where);
      }
    ++tested;
  }
  CHECK(tested >= 60);
}

TEST_CASE("cutvertex and extended rules") {
  // C = (0,1,2) with cutvertex 0; C' = (3,4,5) and C'' = (6,7,8) form one cut component at 0
  Graph g(9);
  add_cycle(g, {0, 1, 2});
  add_cycle(g, {3, 4, 5});
  add_cycle(g, {6, 7, 8});
  g.add_edge(0, 3);
  g.add_edge(5, 6);
  const std::vector<DirectedCycle> cycles{canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5}), canonical_cycle({6, 7, 8})};
  const auto models = model_semis(extended_and_cutvertex_constraints(g, cycles), 3);
  CHECK(models == achievable_semis(g, cycles, kCap));
  for (const auto& s : models) {
    CHECK(s.at(0, 1) == s.at(0, 2));  // cutvertex rule at 0
    CHECK(s.at(2, 0) == s.at(2, 1));  // extended rule: both sit behind 6
  }
  const auto m = build_reference(g, cycles);
  CHECK(m.det[pos_var(3, 0, 1)].kind == Site::Kind::Cutvertex);
  CHECK(m.det[pos_var(3, 0, 1)].vertex == 0);
  expect_error(ErrorCode::NotBiconnected, [&] { pr_node_constraints(g, cycles); });
}

TEST_CASE("P-node rule ties cycles inside one parallel edge") {
  // poles 0 and 1; C = 0-2-1-3; parallel paths 0-4..1 and 0-7..1 carry triangles
  Graph g(10);
  add_cycle(g, {0, 2, 1, 3});
  g.add_edge(0, 4);
  add_cycle(g, {4, 5, 6});
  g.add_edge(6, 1);
  g.add_edge(0, 7);
  add_cycle(g, {7, 8, 9});
  g.add_edge(9, 1);
  const std::vector<DirectedCycle> cycles{canonical_cycle({0, 2, 1, 3}), canonical_cycle({4, 5, 6}),
                                          canonical_cycle({7, 8, 9})};
  const auto m = build_reference(g, cycles);
  const auto models = model_semis(m.cs, 3);
  CHECK(models == achievable_semis(g, cycles, kCap));
  bool split = false;
  for (const auto& s : models) split = split || s.at(0, 1) != s.at(0, 2);
  CHECK(split);  // separate parallel edges stay independent
  bool p_node = false;
  const SpqrTree& t = *m.blocks[m.block_of_cycle[0]].tree;
  for (size_t mu = 0; mu < t.nodes.size(); ++mu)
    p_node = p_node || (t.nodes[mu].kind == NodeKind::P && m.blocks[m.block_of_cycle[0]].nodes[mu].p_cycle == 0);
  CHECK(p_node);
}

TEST_CASE("two triangles joined by a bridge realise every position pair") {
  Graph g(6);
  add_cycle(g, {0, 1, 2});
  add_cycle(g, {3, 4, 5});
  g.add_edge(2, 3);
  const std::vector<DirectedCycle> cycles{canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5})};
  for (Side a : {Side::Left, Side::Right})
    for (Side b : {Side::Left, Side::Right}) {
      SemiEmbedding s(2);
      s.set(0, 1, a);
      s.set(1, 0, b);
      CHECK(extract_semi(g, realize_embedding(g, cycles, s), cycles) == s);
    }
}

TEST_CASE("assignments outside the model set are rejected") {
  brute::Rng rng(23);
  int rejected = 0;
  for (int round = 0; round < 300 && rejected < 20; ++round) {
    std::vector<DirectedCycle> cycles;
    const Graph g = brute::random_cycle_host(rng, 9, 3, 6, cycles);
    if (!is_connected(g) || cycles.size() < 3) continue;
    const auto m = build_reference(g, cycles);
    const auto models = model_semis(m.cs, m.k);
    for (unsigned bits = 0; bits < (1u << m.cs.num_vars); ++bits) {
      SemiEmbedding s(m.k);
      for (int v = 0; v < m.cs.num_vars; ++v) s.pos[v] = (bits >> v) & 1 ? Side::Right : Side::Left;
      if (models.count(s)) continue;
      expect_error(ErrorCode::ConstraintViolation, [&] { realize_embedding(m, g, s); });
      ++rejected;
      break;
    }
  }
  CHECK(rejected >= 20);
}

TEST_CASE("nested cycles: left-left-right forces the outer pair") {
  // three nested triangles joined by edges: 0-1-2 inside 3-4-5 inside 6-7-8
  Graph g(9);
  add_cycle(g, {0, 1, 2});
  add_cycle(g, {3, 4, 5});
  add_cycle(g, {6, 7, 8});
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(4, 7);
  g.add_edge(5, 8);
  const std::vector<DirectedCycle> cycles{canonical_cycle({0, 1, 2}), canonical_cycle({3, 4, 5}),
                                          canonical_cycle({6, 7, 8})};
  const auto m = build_reference(g, cycles);
  int hits = 0;
  for (const auto& s : model_semis(m.cs, 3)) {
    if (s.at(0, 1) != Side::Left || s.at(1, 2) != Side::Left || s.at(1, 0) != Side::Right) continue;
    CHECK(s.at(0, 2) == Side::Left);
    ++hits;
  }
  CHECK(hits > 0);
}

TEST_CASE("decision agrees with the joint oracle for two and three hosts") {
  brute::Rng rng(31);
  int tested = 0, yes = 0;
  for (int round = 0; round < 3000 && tested < 200; ++round) {
    const int hosts_n = tested % 4 == 3 ? 3 : 2;
    std::vector<DirectedCycle> cycles;
    const int n = 6 + static_cast<int>(rng() % 3);
    std::vector<Graph> hosts{brute::random_cycle_host(rng, n, 2 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 4), cycles)};
    const std::vector<DirectedCycle> family = cycles;
    if (family.size() < 2) continue;
    bool ok = is_connected(hosts[0]);
    for (int h = 1; h < hosts_n && ok; ++h) {
      hosts.push_back(brute::random_cycle_cohost(rng, n, family));
      ok = is_connected(hosts.back());
    }
    if (!ok) continue;
    bool capped = false;
    for (const auto& h : hosts) capped = capped || rotation_candidates(h) > kCap;
    if (capped) continue;
    const auto want = brute_force_sefe(hosts, family, kCap);
    const auto got = decide_sefe_cycles(hosts, family, Path::Reference, true);
    CHECK(got.sefe == want.sefe);
    if (got.sefe) {
      ++yes;
      REQUIRE(got.witness.size() == hosts.size());
      for (size_t i = 0; i < hosts.size(); ++i) CHECK(extract_semi(hosts[i], got.witness[i], family) == *got.semi);
    }
    ++tested;
  }
  CHECK(tested >= 150);
  CHECK(yes >= 20);
  CHECK(tested - yes >= 5);
}

TEST_CASE("single cycle and disconnected hosts") {
  Graph g(4);
  add_cycle(g, {0, 1, 2});
  g.add_edge(2, 3);
  const auto d = decide_sefe_cycles({g, g}, {canonical_cycle({0, 1, 2})}, Path::Reference, true);
  CHECK(d.sefe);
  CHECK(d.semi->pos.empty());
  Graph h(6);
  add_cycle(h, {0, 1, 2});
  h.add_edge(3, 4);
  expect_error(ErrorCode::PreprocessingRequired,
               [&] { decide_sefe_cycles({g, h}, {canonical_cycle({0, 1, 2})}, Path::Reference, false); });
}
