#include "sefe/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "sefe/error.hpp"
#include "sefe/union_find.hpp"

namespace sefe {

std::size_t oracle_cap(std::size_t fallback) {
  if (const char* s = std::getenv("SEFE_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

std::size_t rotation_candidates(const Graph& g) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int f = 2; f < g.degree(v); ++f) {
      if (total > kMax / static_cast<std::size_t>(f)) return kMax;
      total *= static_cast<std::size_t>(f);
    }
  return total;
}

namespace {

// Vertex labels of the components that contain edges; -1 for isolated vertices.
std::vector<int> edge_component_labels(const Graph& g, int* count) {
  int all = 0;
  auto label = component_labels(g, &all);
  std::vector<int> remap(static_cast<size_t>(all), -1);
  int c = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      label[v] = -1;
      continue;
    }
    if (remap[label[v]] < 0) remap[label[v]] = c++;
    label[v] = remap[label[v]];
  }
  *count = c;
  return label;
}

int count_faces(const Graph& g, const RotationSystem& rot, std::vector<int>& pos, std::vector<char>& seen) {
  pos = rotation_positions(g, rot);
  seen.assign(2 * static_cast<size_t>(g.num_edges()), 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * g.num_edges(); ++d0) {
    if (seen[d0]) continue;
    ++faces;
    int d = d0;
    while (!seen[d]) {
      seen[d] = 1;
      d = face_successor(g, rot, pos, d);
    }
  }
  return faces;
}

// Region of each face after merging faces across edges not in `barrier`.
std::vector<int> regions(const Graph& g, const Faces& f, const std::vector<char>& barrier) {
  UnionFind uf(f.count);
  for (int e = 0; e < g.num_edges(); ++e)
    if (!barrier[e]) uf.unite(f.of_dart[2 * e], f.of_dart[2 * e + 1]);
  std::vector<int> r(static_cast<size_t>(f.count));
  for (int i = 0; i < f.count; ++i) r[i] = uf.find(i);
  return r;
}

}  // namespace

void for_each_planar_rotation(const Graph& g, std::size_t cap, const std::function<bool(const RotationSystem&)>& visit) {
  const std::size_t total = rotation_candidates(g);
  if (total > cap)
    fail(ErrorCode::CapExceeded, std::to_string(total) + " rotation candidates exceed the cap of " + std::to_string(cap));
  int comps = 0;
  const auto label = edge_component_labels(g, &comps);
  int target = 2 * comps;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (label[v] >= 0) --target;
  target += g.num_edges();

  RotationSystem rot(static_cast<size_t>(g.num_vertices()));
  std::vector<int> spin;  // vertices whose order varies
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    rot[v].assign(inc.begin(), inc.end());
    std::sort(rot[v].begin() + (rot[v].empty() ? 0 : 1), rot[v].end());
    if (g.degree(v) >= 3) spin.push_back(v);
  }
  std::vector<int> pos;
  std::vector<char> seen;
  while (true) {
    if (count_faces(g, rot, pos, seen) == target && !visit(rot)) return;
    // odometer: the last spinning vertex turns fastest
    int i = static_cast<int>(spin.size()) - 1;
    for (; i >= 0; --i) {
      auto& r = rot[spin[i]];
      if (std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (i < 0) return;
  }
}

std::vector<RotationSystem> enumerate_planar_rotations(const Graph& g, std::size_t cap) {
  std::vector<RotationSystem> out;
  for_each_planar_rotation(g, cap, [&](const RotationSystem& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

void for_each_connected_augmentation(const Graph& g, std::size_t cap, const std::function<bool(const Graph&)>& visit) {
  int c = 0;
  const auto label = edge_component_labels(g, &c);
  if (c <= 1) {
    visit(g);
    return;
  }
  std::vector<std::vector<int>> members(static_cast<size_t>(c));
  for (int v = 0; v < g.num_vertices(); ++v)
    if (label[v] >= 0) members[label[v]].push_back(v);
  std::size_t visited = 0;
  // labelled trees on c nodes via Pruefer sequences
  std::vector<int> seq(static_cast<size_t>(c - 2), 0);
  while (true) {
    std::vector<int> degree(static_cast<size_t>(c), 1);
    for (int x : seq) ++degree[x];
    std::vector<std::pair<int, int>> tree;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      tree.push_back({leaf, x});
      --degree[leaf];
      --degree[x];
    }
    int a = -1, b = -1;
    for (int i = 0; i < c; ++i)
      if (degree[i] == 1) (a < 0 ? a : b) = i;
    tree.push_back({a, b});
    std::vector<std::size_t> choice(tree.size(), 0);
    while (true) {
      if (++visited > cap) fail(ErrorCode::CapExceeded, "too many connected augmentations");
      Graph aug = g;
      for (size_t t = 0; t < tree.size(); ++t) {
        const auto& A = members[tree[t].first];
        const auto& B = members[tree[t].second];
        aug.add_edge(A[choice[t] / B.size()], B[choice[t] % B.size()]);
      }
      if (!visit(aug)) return;
      size_t t = 0;
      for (; t < tree.size(); ++t) {
        const size_t span = members[tree[t].first].size() * members[tree[t].second].size();
        if (++choice[t] < span) break;
        choice[t] = 0;
      }
      if (t == tree.size()) break;
    }
    size_t i = 0;
    for (; i < seq.size(); ++i) {
      if (++seq[i] < c) break;
      seq[i] = 0;
    }
    if (i == seq.size()) break;
  }
}

SemiEmbedding extract_semi(const Graph& g, const RotationSystem& rot, const std::vector<DirectedCycle>& cycles) {
  int comps = 0;
  edge_component_labels(g, &comps);
  if (comps > 1) fail(ErrorCode::DisconnectedGraph, "extract_semi needs a connected host");
  if (!is_sphere_embedding(g, rot)) fail(ErrorCode::CycleNotEmbedded, "rotation is not a sphere embedding");
  const int k = static_cast<int>(cycles.size());
  SemiEmbedding s(k);
  const Faces f = trace_faces(g, rot);
  for (int i = 0; i < k; ++i) {
    const auto& cv = cycles[i].vertices;
    const auto ce = cycle_edges(g, cycles[i]);
    std::vector<char> barrier(static_cast<size_t>(g.num_edges()), 0);
    for (int e : ce) barrier[e] = 1;
    const auto reg = regions(g, f, barrier);
    const int left = reg[f.of_dart[dart_from(g, ce[0], cv[0])]];
    const int right = reg[f.of_dart[dart_twin(dart_from(g, ce[0], cv[0]))]];
    if (left == right) fail(ErrorCode::CycleNotEmbedded, "cycle does not separate the sphere");
    for (size_t j = 0; j < ce.size(); ++j) {
      const int d = dart_from(g, ce[j], cv[j]);
      if (reg[f.of_dart[d]] != left || reg[f.of_dart[dart_twin(d)]] != right)
        fail(ErrorCode::CycleNotEmbedded, "cycle sides are inconsistent");
    }
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      int side = -1;
      for (int x : cycles[j].vertices)
        for (int e : g.incident(x)) {
          const int r = reg[f.of_dart[dart_from(g, e, x)]];
          const int here = r == left ? 0 : r == right ? 1 : -1;
          if (here < 0 || (side >= 0 && here != side))
            fail(ErrorCode::CycleNotEmbedded, "cycle straddles another cycle");
          side = here;
        }
      s.set(i, j, side == 0 ? Side::Left : Side::Right);
    }
  }
  return s;
}

std::set<SemiEmbedding> achievable_semis(const Graph& g, const std::vector<DirectedCycle>& cycles, std::size_t cap) {
  std::set<SemiEmbedding> out;
  for_each_connected_augmentation(g, cap, [&](const Graph& aug) {
    for_each_planar_rotation(aug, cap, [&](const RotationSystem& rot) {
      out.insert(extract_semi(aug, rot, cycles));
      return true;
    });
    return true;
  });
  return out;
}

OracleVerdict brute_force_sefe(const std::vector<Graph>& hosts, const std::vector<DirectedCycle>& cycles,
                               std::size_t cap) {
  OracleVerdict v;
  std::set<SemiEmbedding> common;
  for (size_t i = 0; i < hosts.size(); ++i) {
    auto s = achievable_semis(hosts[i], cycles, cap);
    if (i == 0) {
      common = std::move(s);
    } else {
      std::set<SemiEmbedding> both;
      std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::inserter(both, both.end()));
      common = std::move(both);
    }
    if (common.empty()) return v;
  }
  v.sefe = true;
  v.witness = *common.begin();
  return v;
}

OracleVerdict brute_force_sefe(const SefeInstance& inst, std::size_t cap) {
  return brute_force_sefe(std::vector<Graph>{inst.hosts[0], inst.hosts[1]}, common_cycles(inst), cap);
}

FacePositions extract_face_positions(const Graph& g, const RotationSystem& rot,
                                     const std::vector<FixedComponent>& comps) {
  int ec = 0;
  edge_component_labels(g, &ec);
  if (ec > 1) fail(ErrorCode::DisconnectedGraph, "extract_face_positions needs a connected host");
  const int k = static_cast<int>(comps.size());
  FacePositions out(static_cast<size_t>(k > 0 ? k * (k - 1) : 0), -1);
  const Faces f = trace_faces(g, rot);
  for (int i = 0; i < k; ++i) {
    const FixedComponent& c = comps[i];
    std::vector<char> barrier(static_cast<size_t>(g.num_edges()), 0);
    std::vector<int> host_edge(c.edges.size());
    for (size_t e = 0; e < c.edges.size(); ++e) {
      host_edge[e] = g.find_edge(c.edges[e].first, c.edges[e].second);
      if (host_edge[e] < 0) fail(ErrorCode::ConstraintViolation, "component edge missing from host");
      barrier[host_edge[e]] = 1;
    }
    const auto reg = regions(g, f, barrier);
    std::vector<int> face_of_region(static_cast<size_t>(f.count), -1);
    for (size_t e = 0; e < c.edges.size(); ++e)
      for (int x : {c.edges[e].first, c.edges[e].second}) {
        const int r = reg[f.of_dart[dart_from(g, host_edge[e], x)]];
        const int cf = c.left_face(x, x == c.edges[e].first ? c.edges[e].second : c.edges[e].first);
        if (face_of_region[r] >= 0 && face_of_region[r] != cf)
          fail(ErrorCode::CycleNotEmbedded, "host rotation does not restrict to the component's embedding");
        face_of_region[r] = cf;
      }
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      int face = -1;
      for (int x : comps[j].vertices)
        for (int e : g.incident(x)) {
          const int here = face_of_region[reg[f.of_dart[dart_from(g, e, x)]]];
          if (here < 0 || (face >= 0 && here != face))
            fail(ErrorCode::CycleNotEmbedded, "component straddles another component");
          face = here;
        }
      out[static_cast<size_t>(SemiEmbedding::index(k, i, j))] = face;
    }
  }
  return out;
}

namespace {

bool keeps_orders(const RotationSystem& rot, const std::vector<FixedComponent>& comps,
                  const std::vector<RotationSystem>& fixed) {
  for (size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i].vertices) {
      std::vector<int> restricted;
      for (int e : rot[v])
        if (std::find(fixed[i][v].begin(), fixed[i][v].end(), e) != fixed[i][v].end()) restricted.push_back(e);
      if (!same_cyclic_order(restricted, fixed[i][v])) return false;
    }
  return true;
}

std::vector<RotationSystem> fixed_orders(const Graph& g, const std::vector<FixedComponent>& comps) {
  std::vector<RotationSystem> fixed;
  for (const auto& c : comps) fixed.push_back(host_order(c, g));
  return fixed;
}

}  // namespace

bool keeps_component_rotations(const Graph& g, const RotationSystem& rot, const std::vector<FixedComponent>& comps) {
  return keeps_orders(rot, comps, fixed_orders(g, comps));
}

std::set<FacePositions> achievable_face_positions(const Graph& g, const std::vector<FixedComponent>& comps,
                                                  std::size_t cap) {
  std::set<FacePositions> out;
  const auto fixed = fixed_orders(g, comps);
  for_each_connected_augmentation(g, cap, [&](const Graph& aug) {
    for_each_planar_rotation(aug, cap, [&](const RotationSystem& rot) {
      if (keeps_orders(rot, comps, fixed)) out.insert(extract_face_positions(aug, rot, comps));
      return true;
    });
    return true;
  });
  return out;
}

std::optional<RotationSystem> find_fixed_embedding(const Graph& g, const std::vector<FixedComponent>& comps,
                                                   const FacePositions& target, std::size_t cap) {
  const auto fixed = fixed_orders(g, comps);
  std::optional<RotationSystem> found;
  for_each_planar_rotation(g, cap, [&](const RotationSystem& rot) {
    if (keeps_orders(rot, comps, fixed) && extract_face_positions(g, rot, comps) == target) found = rot;
    return !found;
  });
  return found;
}

FixedOracleVerdict brute_force_sefe_fixed(const std::vector<Graph>& hosts, const std::vector<FixedComponent>& comps,
                                          std::size_t cap) {
  FixedOracleVerdict v;
  std::set<FacePositions> common;
  for (size_t i = 0; i < hosts.size(); ++i) {
    auto s = achievable_face_positions(hosts[i], comps, cap);
    if (i == 0) {
      common = std::move(s);
    } else {
      std::set<FacePositions> both;
      std::set_intersection(common.begin(), common.end(), s.begin(), s.end(), std::inserter(both, both.end()));
      common = std::move(both);
    }
    if (common.empty()) return v;
  }
  v.sefe = true;
  v.witness = *common.begin();
  return v;
}

FixedOracleVerdict brute_force_sefe_fixed(const SefeInstance& inst, std::size_t cap) {
  return brute_force_sefe_fixed(std::vector<Graph>{inst.hosts[0], inst.hosts[1]}, fixed_components(inst), cap);
}

}  // namespace sefe
