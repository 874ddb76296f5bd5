#include "cli_json.hpp"

#include <sstream>

#include "sefe/error.hpp"

namespace sefe::cli {

namespace {

const char* side_json(Side s) { return s == Side::Left ? "left" : "right"; }

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::ConstraintViolation, "witness check failed: " + what);
}

// Rotation of an original graph: the connected part's order with added
// vertices dropped, in original vertex ids.
void restrict_into(Json& graph, const PartDecision& pd, int host) {
  const Graph& g = pd.conn.instance.hosts[host];
  const RotationSystem& rot = (*pd.witness)[host];
  for (int v = 0; v < pd.conn.original_vertices; ++v) {
    Json list = Json::array();
    for (int e : rot[v]) {
      const int w = g.other(e, v);
      if (w < pd.conn.original_vertices) list.push_back(pd.part.vertex_of[w]);
    }
    graph[pd.part.vertex_of[v]] = std::move(list);
  }
}

}  // namespace

Json rotation_json(const Graph& g, const RotationSystem& rot) {
  Json out = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    Json list = Json::array();
    for (int e : rot[v]) list.push_back(g.other(e, v));
    out.push_back(std::move(list));
  }
  return out;
}

RotationSystem rotation_from_json(const Graph& g, const Json& j) {
  require(j.is_array() && static_cast<int>(j.size()) == g.num_vertices(), "rotation needs one list per vertex");
  RotationSystem rot(static_cast<size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const auto& w : j[v]) {
      const int e = g.find_edge(v, w.get<int>());
      require(e >= 0, "vertex " + std::to_string(v) + " has no edge to " + w.dump());
      rot[v].push_back(e);
    }
  }
  return rot;
}

Json witness_json(const SefeInstance& inst, const InstanceDecision& d) {
  Json out;
  out["mode"] = mode_name(d.mode);
  Json graphs = Json::array({Json::array(), Json::array()});
  for (auto& g : graphs)
    for (int v = 0; v < inst.n; ++v) g.push_back(Json::array());
  Json parts = Json::array();
  for (const auto& pd : d.parts) {
    Json p;
    p["vertices"] = pd.part.vertex_of;
    Json added = Json::array();
    for (const auto& r : pd.conn.records)
      added.push_back({{"v1", r.v1}, {"v2", r.v2}, {"v12", r.v12}, {"target_graph", r.target_graph}});
    p["added"] = std::move(added);
    p["rotations"] = Json::array();
    for (int h = 0; h < 2; ++h) {
      p["rotations"].push_back(rotation_json(pd.conn.instance.hosts[h], (*pd.witness)[h]));
      restrict_into(graphs[h], pd, h);
    }
    parts.push_back(std::move(p));
  }
  out["graphs"] = std::move(graphs);
  out["parts"] = std::move(parts);
  return out;
}

void check_witness_json(const SefeInstance& inst, const Json& w) {
  require(w.contains("parts") && w.contains("graphs") && w.contains("mode"), "missing mode, graphs or parts");
  const Mode mode = detect_mode(inst);
  require(w["mode"] == mode_name(mode), "mode differs from the instance's");
  auto split = split_union(inst);
  require(w["parts"].size() == split.size(), "part count differs from the instance's");
  Json graphs = Json::array({Json::array(), Json::array()});
  for (auto& g : graphs)
    for (int v = 0; v < inst.n; ++v) g.push_back(Json::array());
  for (size_t i = 0; i < split.size(); ++i) {
    const Json& p = w["parts"][i];
    PartDecision pd;
    pd.conn = connect_instance(split[i].instance);
    pd.part = std::move(split[i]);
    require(p["vertices"] == Json(pd.part.vertex_of), "part " + std::to_string(i) + " has other vertices");
    std::array<RotationSystem, 2> rot;
    for (int h = 0; h < 2; ++h) rot[h] = rotation_from_json(pd.conn.instance.hosts[h], p["rotations"][h]);
    verify_witness(pd, mode, rot);
    pd.witness = rot;
    for (int h = 0; h < 2; ++h) restrict_into(graphs[h], pd, h);
  }
  require(graphs == w["graphs"], "restricted rotations do not match the part rotations");
}

Json constraints_json(const ConstraintSet& cs) {
  Json out = Json::array();
  for (const auto& c : cs.list) {
    switch (c.kind) {
      case RelKind::Eq: out.push_back({{"kind", "eq"}, {"x", c.x.var}, {"y", c.y.var}}); break;
      case RelKind::Neq: out.push_back({{"kind", "neq"}, {"x", c.x.var}, {"y", c.y.var}}); break;
      case RelKind::Fix: out.push_back({{"kind", "fix"}, {"x", c.x.var}, {"value", side_json(c.x.value)}}); break;
      case RelKind::Clause:
        out.push_back({{"kind", "or"},
                       {"x", c.x.var},
                       {"x_value", side_json(c.x.value)},
                       {"y", c.y.var},
                       {"y_value", side_json(c.y.value)}});
        break;
    }
  }
  return out;
}

namespace {

Json tree_json(const CTree& t) {
  Json edges = Json::array(), vars = Json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  for (int v = 0; v < t.num_vars(); ++v) {
    const auto [c, d] = t.var_pair(v);
    vars.push_back({{"var", v}, {"position_of", d}, {"relative_to", c}});
  }
  return {{"k", t.k}, {"edges", std::move(edges)}, {"variables", std::move(vars)}};
}

}  // namespace

Json cctree_json(const CcTree& t, const std::vector<DirectedCycle>& cycles, std::size_t sample) {
  Json out = tree_json(t.tree);
  Json cyc = Json::array();
  for (const auto& c : cycles) cyc.push_back(c.vertices);
  out["cycles"] = std::move(cyc);
  out["constraints"] = constraints_json(t.cs);
  out["models"] = model_count_json(t.cs, sample);
  if (sample > 0) {
    Json models = Json::array();
    try {
      for (const auto& a : enumerate_models(t.cs, sample)) {
        Json m = Json::array();
        for (Side s : a) m.push_back(side_json(s));
        models.push_back(std::move(m));
      }
    } catch (const SefeError& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      out["sample_truncated"] = true;
    }
    out["sample"] = std::move(models);
  }
  return out;
}

Json component_cctree_json(const ComponentCcTree& t, const std::vector<FixedComponent>& comps, std::size_t sample) {
  Json out = tree_json(t.tree);
  Json cs = Json::array();
  for (const auto& c : comps) cs.push_back({{"vertices", c.vertices}, {"faces", c.faces.count}});
  out["components"] = std::move(cs);
  out["domains"] = t.sys.domain;
  Json eq = Json::array();
  for (const auto& [a, b] : t.sys.eq) eq.push_back({a, b});
  out["eq"] = std::move(eq);
  Json groups = Json::array();
  for (const auto& g : t.sys.groups) {
    Json entries = Json::array();
    for (const auto& e : g) entries.push_back({{"var", e.var}, {"face0", e.face0}, {"face1", e.face1}});
    groups.push_back(std::move(entries));
  }
  out["groups"] = std::move(groups);
  out["models"] = model_count_json(t.sys, std::max<std::size_t>(sample, 100000));
  if (sample > 0) {
    try {
      out["sample"] = enumerate_face_models(t.sys, sample);
    } catch (const SefeError& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      out["sample_truncated"] = true;
    }
  }
  return out;
}

Json model_count_json(const ConstraintSet& cs, std::size_t cap) {
  for (const auto& c : cs.list)
    if (c.kind == RelKind::Clause) {
      try {
        const auto n = enumerate_models(cs, cap).size();
        return {{"satisfiable", n > 0}, {"count", n}};
      } catch (const SefeError& e) {
        if (e.code() != ErrorCode::CapExceeded) throw;
        return {{"satisfiable", true}, {"count_exceeds", cap}};
      }
    }
  const auto free = parity_free_classes(cs);
  if (!free) return {{"satisfiable", false}, {"log2", nullptr}};
  return {{"satisfiable", true}, {"log2", *free}};
}

Json model_count_json(const FaceSystem& sys, std::size_t cap) {
  if (!solve_faces(sys)) return {{"satisfiable", false}, {"count", 0}};
  try {
    return {{"satisfiable", true}, {"count", enumerate_face_models(sys, cap).size()}};
  } catch (const SefeError& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    return {{"satisfiable", true}, {"count_exceeds", cap}};
  }
}

std::string cctree_dot(const ComponentCcTree& t) {
  std::ostringstream os;
  os << "graph cctree {\n  node [shape=circle];\n";
  for (int c = 0; c < t.tree.k; ++c) os << "  c" << c << " [label=\"H" << c << "\"];\n";
  for (int e = 0; e < static_cast<int>(t.tree.edges.size()); ++e) {
    const auto [a, b] = t.tree.edges[e];
    os << "  c" << a << " -- c" << b << " [label=\"x" << 2 * e << ", x" << 2 * e + 1 << "\"];\n";
  }
  os << "  constraints [shape=box, label=\"";
  for (int v = 0; v < t.sys.num_vars; ++v) {
    os << "x" << v << " in {";
    for (size_t i = 0; i < t.sys.domain[v].size(); ++i) os << (i ? "," : "") << t.sys.domain[v][i];
    os << "}\\l";
  }
  for (const auto& [a, b] : t.sys.eq) os << "x" << a << " = x" << b << "\\l";
  for (size_t g = 0; g < t.sys.groups.size(); ++g) {
    os << "group " << g << ":";
    for (const auto& e : t.sys.groups[g]) os << " x" << e.var << "->" << e.face0 << "|" << e.face1;
    os << "\\l";
  }
  os << "\"];\n}\n";
  return os.str();
}

}  // namespace sefe::cli
