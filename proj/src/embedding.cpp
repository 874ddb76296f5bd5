#include "sefe/embedding.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sefe/error.hpp"

namespace sefe {

std::vector<int> rotation_positions(const Graph& g, const RotationSystem& rot) {
  std::vector<int> pos(2 * static_cast<size_t>(g.num_edges()), -1);
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
    const auto& r = rot[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
      const Edge& ed = g.edge(r[i]);
      pos[2 * r[i] + (ed.u == v ? 0 : 1)] = i;
    }
  }
  return pos;
}

int face_successor(const Graph& g, const RotationSystem& rot, const std::vector<int>& pos, int dart) {
  const int e = dart_edge(dart);
  const int h = dart_head(g, dart);
  const auto& r = rot[h];
  const int at = pos[2 * e + (g.edge(e).u == h ? 0 : 1)];
  const int next = r[(at + 1) % static_cast<int>(r.size())];
  return dart_from(g, next, h);
}

Faces trace_faces(const Graph& g, const RotationSystem& rot) {
  Faces f;
  const auto pos = rotation_positions(g, rot);
  const int darts = 2 * g.num_edges();
  f.of_dart.assign(static_cast<size_t>(darts), -1);
  for (int d0 = 0; d0 < darts; ++d0) {
    if (f.of_dart[d0] >= 0) continue;
    int d = d0;
    while (f.of_dart[d] < 0) {
      f.of_dart[d] = f.count;
      d = face_successor(g, rot, pos, d);
    }
    SEFE_ASSERT(d == d0, "face walk did not close");
    ++f.count;
  }
  return f;
}

bool is_rotation_of(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.size()) != g.num_vertices()) return false;
  std::vector<int> seen(2 * static_cast<size_t>(g.num_edges()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (rot[v].size() != g.incident(v).size()) return false;
    for (int e : rot[v]) {
      if (e < 0 || e >= g.num_edges()) return false;
      const Edge& ed = g.edge(e);
      if (ed.u != v && ed.v != v) return false;
      if (seen[2 * e + (ed.u == v ? 0 : 1)]++) return false;
    }
  }
  return true;
}

bool is_sphere_embedding(const Graph& g, const RotationSystem& rot) {
  if (!is_rotation_of(g, rot)) return false;
  if (g.num_edges() == 0) return true;
  int comps = 0;
  const auto label = component_labels(g, &comps);
  const Faces f = trace_faces(g, rot);
  std::vector<long long> chi(static_cast<size_t>(comps), 0);
  std::vector<char> has_edge(static_cast<size_t>(comps), 0);
  for (int v = 0; v < g.num_vertices(); ++v) chi[label[v]] += 1;
  for (const Edge& e : g.edges()) {
    chi[label[e.u]] -= 1;
    has_edge[label[e.u]] = 1;
  }
  std::vector<int> face_comp(static_cast<size_t>(f.count), -1);
  for (int d = 0; d < 2 * g.num_edges(); ++d) face_comp[f.of_dart[d]] = label[dart_tail(g, d)];
  for (int c : face_comp) chi[c] += 1;
  for (int c = 0; c < comps; ++c)
    if (has_edge[c] && chi[c] != 2) return false;
  return true;
}

RotationSystem mirror(const RotationSystem& rot) {
  RotationSystem m = rot;
  for (auto& r : m) std::reverse(r.begin(), r.end());
  return m;
}

RotationSystem restrict_rotation(const RotationSystem& rot, const std::vector<char>& keep) {
  RotationSystem out(rot.size());
  for (size_t v = 0; v < rot.size(); ++v)
    for (int e : rot[v])
      if (keep[e]) out[v].push_back(e);
  return out;
}

bool same_cyclic_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const size_t off = static_cast<size_t>(it - b.begin());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

// Simple underlying graph: one representative per vertex pair.
struct Simplified {
  BGraph bg;
  std::vector<std::vector<int>> bundle;  // representative index -> original edges
};

Simplified simplify(const Graph& g) {
  Simplified s{BGraph(static_cast<size_t>(g.num_vertices())), {}};
  std::map<std::pair<int, int>, int> rep;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) fail(ErrorCode::MalformedEdge, "self-loop in planarity test");
    auto key = std::minmax(ed.u, ed.v);
    auto [it, fresh] = rep.try_emplace({key.first, key.second}, static_cast<int>(s.bundle.size()));
    if (fresh) {
      s.bundle.push_back({});
      boost::add_edge(static_cast<size_t>(ed.u), static_cast<size_t>(ed.v), it->second, s.bg);
    }
    s.bundle[it->second].push_back(e);
  }
  return s;
}

}  // namespace

bool is_planar(const Graph& g) {
  Simplified s = simplify(g);
  return boost::boyer_myrvold_planarity_test(s.bg);
}

std::optional<RotationSystem> planar_embedding(const Graph& g) {
  Simplified s = simplify(g);
  std::vector<std::vector<BEdge>> emb(boost::num_vertices(s.bg));
  const bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = s.bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, s.bg)));
  if (!ok) return std::nullopt;
  auto index = boost::get(boost::edge_index, s.bg);
  RotationSystem rot(static_cast<size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const BEdge& be : emb[v]) {
      const auto& b = s.bundle[boost::get(index, be)];
      // a bundle appears in reverse order at its second endpoint so copies bound 2-gons
      const bool forward = std::min(g.edge(b[0]).u, g.edge(b[0]).v) == v;
      if (forward)
        rot[v].insert(rot[v].end(), b.begin(), b.end());
      else
        rot[v].insert(rot[v].end(), b.rbegin(), b.rend());
    }
  }
  SEFE_ASSERT(is_sphere_embedding(g, rot), "planar embedding failed the Euler check");
  return rot;
}

}  // namespace sefe
