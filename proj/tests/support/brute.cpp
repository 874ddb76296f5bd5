#include "brute.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sefe/embedding.hpp"
#include "sefe/oracle.hpp"

namespace brute {

int components_without(const sefe::Graph& g, const std::vector<int>& removed) {
  const int n = g.num_vertices();
  std::vector<char> gone(n, 0), seen(n, 0);
  for (int v : removed) gone[v] = 1;
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++comps;
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int e : g.incident(v)) {
        int w = g.other(e, v);
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
      }
    }
  }
  return comps;
}

std::vector<int> cutvertices(const sefe::Graph& g) {
  std::vector<int> out;
  const int base = components_without(g, {});
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    if (components_without(g, {v}) > base) out.push_back(v);
  }
  return out;
}

bool biconnected(const sefe::Graph& g) {
  if (g.num_vertices() < 2 || components_without(g, {}) != 1) return false;
  if (g.num_vertices() == 2) return g.num_edges() >= 1;
  return cutvertices(g).empty();
}

bool triconnected(const sefe::Graph& g) {
  const int n = g.num_vertices();
  if (n < 4 || !biconnected(g)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (components_without(g, {a, b}) != 1) return false;
  return true;
}

sefe::Graph random_planar(int n, int m, Rng& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  sefe::Graph g(n);
  for (auto [a, b] : pairs) {
    if (g.num_edges() >= m) break;
    sefe::Graph h = g;
    h.add_edge(a, b);
    if (sefe::is_planar(h)) g = std::move(h);
  }
  return g;
}

sefe::Graph random_biconnected_planar(int n, int extra, Rng& rng) {
  // start from a Hamiltonian cycle on a random permutation, then add chords
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  sefe::Graph g(n);
  std::set<std::pair<int, int>> used;
  for (int i = 0; i < n; ++i) {
    int a = perm[i], b = perm[(i + 1) % n];
    g.add_edge(a, b);
    used.insert(std::minmax(a, b));
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; tries < 20 * (extra + 1) && extra > 0; ++tries) {
    int a = pick(rng), b = pick(rng);
    if (a == b || used.count(std::minmax(a, b))) continue;
    sefe::Graph h = g;
    h.add_edge(a, b);
    if (!sefe::is_planar(h)) continue;
    g = std::move(h);
    used.insert(std::minmax(a, b));
    --extra;
  }
  return g;
}

void add_cycle(sefe::Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i) g.add_edge(vs[i], vs[(i + 1) % vs.size()]);
}

sefe::Graph random_cycle_host(Rng& rng, int n, int ncycles, int extra, std::vector<sefe::DirectedCycle>& cycles) {
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  sefe::Graph g(n);
  cycles.clear();
  size_t at = 0;
  for (int c = 0; c < ncycles; ++c) {
    const size_t len = 3 + rng() % 2;
    if (at + len > perm.size()) break;
    std::vector<int> vs(perm.begin() + static_cast<long>(at), perm.begin() + static_cast<long>(at + len));
    at += len;
    add_cycle(g, vs);
    cycles.push_back(sefe::canonical_cycle(vs));
  }
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.find_edge(u, v) < 0) cand.push_back({u, v});
  std::shuffle(cand.begin(), cand.end(), rng);
  int added = 0;
  for (auto [u, v] : cand) {
    if (added >= extra && sefe::is_connected(g)) break;
    sefe::Graph h = g;
    h.add_edge(u, v);
    if (!sefe::is_planar(h)) continue;
    g = std::move(h);
    ++added;
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
  return g;
}

sefe::Graph random_cycle_cohost(Rng& rng, int n, const std::vector<sefe::DirectedCycle>& cycles) {
  sefe::Graph g(n);
  for (const auto& c : cycles) add_cycle(g, c.vertices);
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.find_edge(u, v) < 0) cand.push_back({u, v});
  std::shuffle(cand.begin(), cand.end(), rng);
  for (auto [u, v] : cand) {
    if (sefe::is_connected(g) && rng() % 5 == 0) break;
    sefe::Graph h = g;
    h.add_edge(u, v);
    if (sefe::is_planar(h)) g = std::move(h);
  }
  return g;
}

namespace {

// Edges of a small component shape on the given vertices.
std::vector<std::pair<int, int>> shape_edges(int shape, const std::vector<int>& v) {
  switch (shape) {
    case 0: return {{v[0], v[1]}};
    case 1: return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}};
    case 2: return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[0]}};
    case 3: return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[0]}, {v[0], v[2]}};
    case 4: return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[0]}, {v[0], v[2]}, {v[1], v[3]}};
    case 5: return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[0]}, {v[4], v[0]}, {v[4], v[1]}, {v[4], v[2]}, {v[4], v[3]}};
    default: return {{v[0], v[1]}, {v[0], v[2]}, {v[2], v[1]}, {v[0], v[3]}, {v[3], v[1]}, {v[0], v[4]}, {v[4], v[1]}};
  }
}

constexpr int kShapeSize[] = {2, 3, 4, 4, 4, 5, 5};

// Neighbour order per vertex of a rotation of `g` restricted to the given edges.
std::map<int, std::vector<int>> neighbour_orders(const sefe::Graph& g, const sefe::RotationSystem& rot,
                                                 const std::vector<int>& edges) {
  std::map<int, std::vector<int>> out;
  for (int e : edges)
    for (int x : {g.edge(e).u, g.edge(e).v}) out[x];
  for (auto& [v, order] : out)
    for (int e : rot[v])
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) order.push_back(g.other(e, v));
  return out;
}

}  // namespace

sefe::Graph random_component_host(Rng& rng, int n, int ncomps, int extra, std::vector<sefe::FixedComponent>& comps) {
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  sefe::Graph g(n);
  std::vector<std::vector<int>> parts;
  size_t at = 0;
  for (int c = 0; c < ncomps; ++c) {
    const int shape = static_cast<int>(rng() % 7);
    const size_t len = static_cast<size_t>(kShapeSize[shape]);
    if (at + len > perm.size()) break;
    std::vector<int> vs(perm.begin() + static_cast<long>(at), perm.begin() + static_cast<long>(at + len));
    at += len;
    std::vector<int> es;
    for (auto [u, v] : shape_edges(shape, vs)) es.push_back(g.add_edge(u, v));
    parts.push_back(es);
  }
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.find_edge(u, v) < 0) cand.push_back({u, v});
  std::shuffle(cand.begin(), cand.end(), rng);
  int added = 0;
  for (auto [u, v] : cand) {
    if (added >= extra && sefe::is_connected(g)) break;
    sefe::Graph h = g;
    h.add_edge(u, v);
    if (!sefe::is_planar(h)) continue;
    g = std::move(h);
    ++added;
  }
  const auto host_rot = sefe::planar_embedding(g);
  comps.clear();
  for (const auto& es : parts) {
    std::vector<std::pair<int, int>> pairs;
    for (int e : es) pairs.push_back({g.edge(e).u, g.edge(e).v});
    auto order = neighbour_orders(g, *host_rot, es);
    if (rng() % 2 == 0) {
      // any planar rotation of the shape, possibly one the host cannot keep
      const sefe::FixedComponent plain = sefe::make_component(pairs, order);
      const auto all = sefe::enumerate_planar_rotations(plain.local, 1 << 16);
      const auto& pick = all[rng() % all.size()];
      std::vector<int> local_edges(plain.edges.size());
      for (size_t i = 0; i < local_edges.size(); ++i) local_edges[i] = static_cast<int>(i);
      order.clear();
      for (auto& [lv, ord] : neighbour_orders(plain.local, pick, local_edges)) {
        for (int& w : ord) w = plain.vertices[w];
        order[plain.vertices[lv]] = ord;
      }
    }
    comps.push_back(sefe::make_component(pairs, order));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
  return g;
}

sefe::Graph random_component_cohost(Rng& rng, int n, const std::vector<sefe::FixedComponent>& comps) {
  sefe::Graph g(n);
  for (const auto& c : comps)
    for (auto [u, v] : c.edges) g.add_edge(u, v);
  std::vector<std::pair<int, int>> cand;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.find_edge(u, v) < 0) cand.push_back({u, v});
  std::shuffle(cand.begin(), cand.end(), rng);
  for (auto [u, v] : cand) {
    if (sefe::is_connected(g) && rng() % 5 == 0) break;
    sefe::Graph h = g;
    h.add_edge(u, v);
    if (sefe::is_planar(h)) g = std::move(h);
  }
  return g;
}

}  // namespace brute
