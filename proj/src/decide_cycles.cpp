#include <string>

#include "sefe/cctree.hpp"
#include "sefe/cycle_sefe.hpp"
#include "sefe/error.hpp"

namespace sefe {

namespace {

void require_connected(const Graph& g, int index) {
  int count = 0;
  const auto label = component_labels(g, &count);
  int seen = -1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    if (seen >= 0 && label[v] != seen)
      fail(ErrorCode::PreprocessingRequired, "graph " + std::to_string(index + 1) + " is disconnected");
    seen = label[v];
  }
}

}  // namespace

CycleDecision decide_sefe_cycles(const std::vector<Graph>& hosts, const std::vector<DirectedCycle>& cycles, Path path,
                                 bool want_witness) {
  if (hosts.empty()) fail(ErrorCode::MalformedInput, "no graphs to decide");
  for (size_t i = 0; i < hosts.size(); ++i) require_connected(hosts[i], static_cast<int>(i));
  const int k = static_cast<int>(cycles.size());
  CycleDecision out;
  if (path == Path::Fast) {
    CcTree acc = build_cctree(hosts[0], cycles);
    for (size_t i = 1; i < hosts.size(); ++i) acc = intersect(acc, build_cctree(hosts[i], cycles));
    const auto a = solve_2sat(acc.cs);
    if (!a) return out;
    out.sefe = true;
    if (want_witness || k <= kExpandLimit) out.semi = expand_crucial(acc.tree, *a);
    if (want_witness)
      for (const Graph& h : hosts) out.witness.push_back(realize_embedding(h, cycles, *out.semi));
    return out;
  }
  std::vector<ReferenceModel> models;
  ConstraintSet all(k > 0 ? k * (k - 1) : 0);
  for (const Graph& h : hosts) {
    models.push_back(build_reference(h, cycles));
    all.append(models.back().cs);
  }
  const auto a = solve_parity(all);
  if (!a) return out;
  SemiEmbedding semi(k);
  semi.pos = *a;
  out.sefe = true;
  out.semi = semi;
  if (want_witness)
    for (size_t i = 0; i < hosts.size(); ++i) out.witness.push_back(realize_embedding(models[i], hosts[i], semi));
  return out;
}

CycleDecision decide_sefe_cycles(const SefeInstance& inst, Path path, bool want_witness) {
  return decide_sefe_cycles(std::vector<Graph>{inst.hosts[0], inst.hosts[1]}, common_cycles(inst), path, want_witness);
}

}  // namespace sefe
