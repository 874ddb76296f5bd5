#include "sefe/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <unordered_set>

#include "sefe/error.hpp"
#include "sefe/union_find.hpp"

namespace sefe {

namespace {

using Pair = std::pair<int, int>;

std::uint64_t key(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

// Spanning subgraph: all of `forced`, then `pool` in random order, keeping an
// edge when it joins two components or with probability `density`. Empty when
// the result is disconnected.
std::vector<Pair> spanning_part(int n, const std::vector<Pair>& forced, std::vector<Pair> pool,
                                const std::unordered_set<std::uint64_t>& forbidden, double density, std::mt19937_64& rng) {
  UnionFind uf(n);
  int parts = n;
  std::vector<Pair> out = forced;
  for (auto [u, v] : forced)
    if (!uf.same(u, v)) {
      uf.unite(u, v);
      --parts;
    }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::bernoulli_distribution keep(density);
  for (auto [u, v] : pool) {
    if (forbidden.count(key(n, u, v))) continue;
    if (!uf.same(u, v)) {
      uf.unite(u, v);
      --parts;
      out.push_back({u, v});
    } else if (keep(rng)) {
      out.push_back({u, v});
    }
  }
  if (parts != 1) out.clear();
  return out;
}

}  // namespace

SefeInstance generate_cycle_instance(int n, int k, std::uint64_t seed, double density) {
  if (n < 3 || k < 0) fail(ErrorCode::MalformedInput, "need n >= 3 and k >= 0");
  std::mt19937_64 rng(seed);
  // stacked triangulation: every new vertex goes into a random face
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  std::vector<Pair> tri{{0, 1}, {1, 2}, {0, 2}};
  for (int v = 3; v < n; ++v) {
    const size_t f = std::uniform_int_distribution<size_t>(0, faces.size() - 1)(rng);
    const auto [a, b, c] = faces[f];
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
    tri.push_back({a, v});
    tri.push_back({b, v});
    tri.push_back({c, v});
  }
  std::vector<size_t> order(faces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<Pair> cycle_edges;
  std::unordered_set<std::uint64_t> on_cycle;
  int found = 0;
  for (size_t i = 0; i < order.size() && found < k; ++i) {
    const auto& f = faces[order[i]];
    if (used[f[0]] || used[f[1]] || used[f[2]]) continue;
    for (int j = 0; j < 3; ++j) {
      used[f[j]] = 1;
      cycle_edges.push_back({f[j], f[(j + 1) % 3]});
      on_cycle.insert(key(n, f[j], f[(j + 1) % 3]));
    }
    ++found;
  }
  if (found < k) fail(ErrorCode::MalformedInput, "only " + std::to_string(found) + " disjoint triangles fit in " + std::to_string(n) + " vertices");
  std::vector<Pair> rest;
  for (auto [u, v] : tri)
    if (!on_cycle.count(key(n, u, v))) rest.push_back({u, v});

  std::vector<int> loose;
  for (int v = 0; v < n; ++v)
    if (!used[v]) loose.push_back(v);
  for (int attempt = 0; attempt < 50; ++attempt) {
    const auto g1 = spanning_part(n, cycle_edges, rest, {}, density, rng);
    if (g1.empty()) continue;
    std::unordered_set<std::uint64_t> taken;
    for (auto [u, v] : g1) taken.insert(key(n, u, v));
    // relabel the vertices off the triangles
    std::vector<int> pi(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) pi[v] = v;
    std::vector<int> shuffled = loose;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (size_t i = 0; i < loose.size(); ++i) pi[loose[i]] = shuffled[i];
    std::vector<Pair> moved;
    for (auto [u, v] : rest) moved.push_back({pi[u], pi[v]});
    const auto g2 = spanning_part(n, cycle_edges, moved, taken, density, rng);
    if (g2.empty()) continue;
    std::vector<TaggedEdge> edges;
    for (auto [u, v] : cycle_edges) edges.push_back({u, v, EdgeTag::Common});
    for (size_t i = cycle_edges.size(); i < g1.size(); ++i) edges.push_back({g1[i].first, g1[i].second, EdgeTag::Excl1});
    for (size_t i = cycle_edges.size(); i < g2.size(); ++i) edges.push_back({g2[i].first, g2[i].second, EdgeTag::Excl2});
    return build_instance(n, edges);
  }
  fail(ErrorCode::MalformedInput, "could not draw two connected graphs; try another seed");
}

}  // namespace sefe
