#include "sefe/connector.hpp"

#include <algorithm>
#include <string>

#include "sefe/error.hpp"

namespace sefe {

namespace {

EdgeTag exclusive_tag(int graph) { return graph == 1 ? EdgeTag::Excl1 : EdgeTag::Excl2; }

}  // namespace

SefeInstance augment_edge(const SefeInstance& inst, int edge, int target_graph, AugmentationRecord* record) {
  SEFE_ASSERT(target_graph == 1 || target_graph == 2, "target graph must be 1 or 2");
  if (edge < 0 || edge >= static_cast<int>(inst.edges.size()) || inst.edges[edge].tag != exclusive_tag(3 - target_graph))
    fail(ErrorCode::EdgeNotExclusive, "edge " + std::to_string(edge) + " is not exclusive to graph " +
                                          std::to_string(3 - target_graph));
  const TaggedEdge src = inst.edges[edge];
  const auto label = component_labels(inst.graph(target_graph));
  if (label[src.u] == label[src.v])
    fail(ErrorCode::SameComponent, "endpoints of edge " + std::to_string(edge) + " are connected in graph " +
                                       std::to_string(target_graph));
  auto edges = inst.edges;
  const int v12 = inst.n;
  edges.push_back({src.u, v12, EdgeTag::Common});
  edges.push_back({v12, src.v, exclusive_tag(target_graph)});
  if (record) {
    *record = {edge, src.u, src.v, v12, static_cast<int>(edges.size()) - 2, static_cast<int>(edges.size()) - 1,
               target_graph};
  }
  return build_instance(inst.n + 1, edges, inst.rotation_lines);
}

ConnectedInstance connect_instance(const SefeInstance& inst) {
  {
    int all = 0;
    const auto label = component_labels(inst.unified, &all);
    int with_edges = -1;
    for (int v = 0; v < inst.n; ++v) {
      if (inst.unified.degree(v) == 0) continue;
      if (with_edges >= 0 && label[v] != with_edges)
        fail(ErrorCode::UnionDisconnected, "the union graph is disconnected; split it first");
      with_edges = label[v];
    }
    for (int v = 0; v < inst.n; ++v)
      if (inst.unified.degree(v) == 0 && inst.n > 1)
        fail(ErrorCode::UnionDisconnected, "vertex " + std::to_string(v) + " is isolated in the union graph");
  }
  ConnectedInstance out;
  out.instance = inst;
  out.original_vertices = inst.n;
  for (int target = 1; target <= 2; ++target) {
    const SefeInstance cur = out.instance;
    const Graph& host = cur.graph(target);
    int count = 0;
    const auto label = component_labels(host, &count);
    if (count <= 1) continue;
    std::vector<std::vector<int>> members(static_cast<size_t>(count));
    for (int v = 0; v < cur.n; ++v) members[label[v]].push_back(v);
    std::vector<int> order(static_cast<size_t>(count));
    for (int c = 0; c < count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return members[a][0] < members[b][0]; });
    std::vector<char> seen(static_cast<size_t>(count), 0);
    std::vector<int> tree_edges;
    const EdgeTag other = exclusive_tag(3 - target);
    for (int start : order) {
      if (seen[start]) continue;
      // the union is connected, so a single BFS reaches everything
      SEFE_ASSERT(tree_edges.empty() && start == order[0], "union graph unexpectedly disconnected");
      seen[start] = 1;
      std::vector<int> queue{start};
      for (size_t i = 0; i < queue.size(); ++i)
        for (int v : members[queue[i]]) {
          std::vector<int> inc(cur.unified.incident(v).begin(), cur.unified.incident(v).end());
          std::sort(inc.begin(), inc.end());
          for (int e : inc) {
            if (cur.edges[e].tag != other) continue;
            const int w = cur.unified.other(e, v);
            if (seen[label[w]]) continue;
            seen[label[w]] = 1;
            queue.push_back(label[w]);
            tree_edges.push_back(e);
          }
        }
    }
    for (int e : tree_edges) {
      AugmentationRecord rec;
      out.instance = augment_edge(out.instance, e, target, &rec);
      out.records.push_back(rec);
    }
  }
  return out;
}

std::vector<InstancePart> split_union(const SefeInstance& inst) {
  int count = 0;
  const auto label = component_labels(inst.unified, &count);
  std::vector<InstancePart> parts;
  std::vector<int> part_of_label(static_cast<size_t>(count), -1);
  std::vector<int> local(static_cast<size_t>(inst.n), -1);
  for (int v = 0; v < inst.n; ++v) {
    if (inst.unified.degree(v) == 0) continue;
    int& p = part_of_label[label[v]];
    if (p < 0) {
      p = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    local[v] = static_cast<int>(parts[p].vertex_of.size());
    parts[p].vertex_of.push_back(v);
  }
  std::vector<std::vector<TaggedEdge>> edges(parts.size());
  std::vector<int> local_edge(inst.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
    const TaggedEdge& t = inst.edges[e];
    const int p = part_of_label[label[t.u]];
    local_edge[e] = static_cast<int>(edges[p].size());
    edges[p].push_back({local[t.u], local[t.v], t.tag});
    parts[p].edge_of.push_back(e);
  }
  for (size_t p = 0; p < parts.size(); ++p) {
    std::map<int, std::vector<int>> rot;
    for (const auto& [v, list] : inst.rotation_lines) {
      if (local[v] < 0 || part_of_label[label[v]] != static_cast<int>(p)) continue;
      auto& r = rot[local[v]];
      for (int e : list) r.push_back(local_edge[e]);
    }
    parts[p].instance = build_instance(static_cast<int>(parts[p].vertex_of.size()), edges[p], rot);
  }
  return parts;
}

}  // namespace sefe
