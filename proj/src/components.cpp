#include "sefe/components.hpp"

#include <algorithm>

#include "sefe/error.hpp"

namespace sefe {

int FixedComponent::local_vertex(int v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  return (it != vertices.end() && *it == v) ? static_cast<int>(it - vertices.begin()) : -1;
}

int FixedComponent::local_edge(int u, int v) const {
  const std::pair<int, int> key = std::minmax(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  return (it != edges.end() && *it == key) ? static_cast<int>(it - edges.begin()) : -1;
}

int FixedComponent::left_face(int u, int v) const {
  const int e = local_edge(u, v);
  SEFE_ASSERT(e >= 0, "left_face: not a component edge");
  return faces.of_dart[dart_of(e, u > v)];
}

FixedComponent make_component(std::vector<std::pair<int, int>> edges,
                              const std::map<int, std::vector<int>>& neighbour_order) {
  FixedComponent c;
  for (auto& p : edges)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(edges.begin(), edges.end());
  c.edges = std::move(edges);
  for (auto [u, v] : c.edges) {
    c.vertices.push_back(u);
    c.vertices.push_back(v);
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
  c.local = Graph(static_cast<int>(c.vertices.size()));
  for (auto [u, v] : c.edges) c.local.add_edge(c.local_vertex(u), c.local_vertex(v));
  c.rot.assign(c.vertices.size(), {});
  for (int i = 0; i < static_cast<int>(c.vertices.size()); ++i) {
    const int v = c.vertices[i];
    auto it = neighbour_order.find(v);
    if (it == neighbour_order.end()) {
      if (c.local.degree(i) > 2)
        fail(ErrorCode::MalformedInput, "vertex " + std::to_string(v) + " has common degree " +
                                            std::to_string(c.local.degree(i)) + " but no rotation line");
      auto inc = c.local.incident(i);
      c.rot[i].assign(inc.begin(), inc.end());
      continue;
    }
    if (static_cast<int>(it->second.size()) != c.local.degree(i))
      fail(ErrorCode::MalformedInput, "rotation line of vertex " + std::to_string(v) + " does not list every common edge");
    for (int w : it->second) {
      const int e = c.local_edge(v, w);
      if (e < 0) fail(ErrorCode::MalformedInput, "rotation line of vertex " + std::to_string(v) + " names a non-edge");
      c.rot[i].push_back(e);
    }
  }
  if (!is_rotation_of(c.local, c.rot) || !is_sphere_embedding(c.local, c.rot))
    fail(ErrorCode::MalformedInput, "fixed rotation of the component at vertex " + std::to_string(c.vertices.front()) +
                                        " is not planar");
  c.faces = trace_faces(c.local, c.rot);
  return c;
}

std::vector<FixedComponent> fixed_components(const SefeInstance& inst) {
  const Graph& g = inst.common;
  int count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::vector<std::pair<int, int>>> parts(static_cast<size_t>(count));
  for (int e = 0; e < g.num_edges(); ++e) parts[label[g.edge(e).u]].push_back({g.edge(e).u, g.edge(e).v});
  std::vector<FixedComponent> out;
  for (auto& part : parts) {
    if (part.empty()) continue;
    std::map<int, std::vector<int>> order;
    for (auto [u, v] : part)
      for (int x : {u, v}) {
        auto it = inst.rotation_lines.find(x);
        if (it == inst.rotation_lines.end() || order.count(x)) continue;
        auto& o = order[x];
        for (int ie : it->second) o.push_back(inst.edges[ie].u == x ? inst.edges[ie].v : inst.edges[ie].u);
      }
    out.push_back(make_component(std::move(part), order));
  }
  std::sort(out.begin(), out.end(),
            [](const FixedComponent& a, const FixedComponent& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

RotationSystem host_order(const FixedComponent& c, const Graph& host) {
  RotationSystem out(static_cast<size_t>(host.num_vertices()));
  for (int i = 0; i < static_cast<int>(c.vertices.size()); ++i)
    for (int e : c.rot[i]) {
      const int he = host.find_edge(c.edges[e].first, c.edges[e].second);
      if (he < 0) fail(ErrorCode::ConstraintViolation, "component edge missing from host");
      out[c.vertices[i]].push_back(he);
    }
  return out;
}

}  // namespace sefe
