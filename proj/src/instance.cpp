#include "sefe/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "sefe/embedding.hpp"
#include "sefe/error.hpp"

namespace sefe {

const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

SefeInstance build_instance(int n, const std::vector<TaggedEdge>& edges,
                            const std::map<int, std::vector<int>>& rotation_lines) {
  if (n < 0) fail(ErrorCode::MalformedInput, "negative vertex count");
  SefeInstance inst;
  inst.n = n;
  inst.edges = edges;
  inst.rotation_lines = rotation_lines;
  inst.unified = Graph(n);
  for (auto& h : inst.hosts) h = Graph(n);
  inst.common = Graph(n);
  for (int i = 0; i < 2; ++i) inst.instance_to_host[i].assign(edges.size(), -1);
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const TaggedEdge& t = edges[e];
    if (t.u < 0 || t.v < 0 || t.u >= n || t.v >= n)
      fail(ErrorCode::MalformedEdge, "edge " + std::to_string(e) + " has an endpoint out of range");
    if (t.u == t.v) fail(ErrorCode::MalformedEdge, "edge " + std::to_string(e) + " is a self-loop");
    if (!seen.insert(std::minmax(t.u, t.v)).second)
      fail(ErrorCode::MalformedEdge, "edge " + std::to_string(e) + " repeats a vertex pair");
    inst.unified.add_edge(t.u, t.v);
    for (int i = 0; i < 2; ++i) {
      if (!inst.in_graph(e, i + 1)) continue;
      inst.instance_to_host[i][e] = inst.hosts[i].add_edge(t.u, t.v);
      inst.host_to_instance[i].push_back(e);
    }
    if (t.tag == EdgeTag::Common) {
      inst.common.add_edge(t.u, t.v);
      inst.common_to_instance.push_back(e);
    }
  }
  for (const auto& [v, list] : rotation_lines) {
    if (v < 0 || v >= n) fail(ErrorCode::MalformedInput, "rotation line for unknown vertex " + std::to_string(v));
    std::set<int> uniq;
    for (int e : list) {
      if (e < 0 || e >= static_cast<int>(edges.size()) || edges[e].tag != EdgeTag::Common ||
          (edges[e].u != v && edges[e].v != v) || !uniq.insert(e).second)
        fail(ErrorCode::MalformedInput, "rotation line of vertex " + std::to_string(v) + " lists edge " + std::to_string(e));
    }
  }
  for (int i = 0; i < 2; ++i)
    if (!is_planar(inst.hosts[i])) fail(ErrorCode::NonPlanarInput, "graph " + std::to_string(i + 1) + " is not planar");
  return inst;
}

DirectedCycle canonical_cycle(std::vector<int> vertices) {
  if (vertices.empty()) return {};
  auto it = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), it, vertices.end());
  if (vertices.size() >= 3 && vertices.back() < vertices[1]) std::reverse(vertices.begin() + 1, vertices.end());
  return {std::move(vertices)};
}

std::vector<DirectedCycle> cycles_of(const Graph& g) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 0 && g.degree(v) != 2)
      fail(ErrorCode::CommonGraphNotCycles, "vertex " + std::to_string(v) + " has common degree " + std::to_string(g.degree(v)));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<DirectedCycle> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    std::vector<int> cyc;
    int prev_edge = -1;
    int v = s;
    while (!seen[v]) {
      seen[v] = 1;
      cyc.push_back(v);
      int e = g.incident(v)[0] == prev_edge ? g.incident(v)[1] : g.incident(v)[0];
      prev_edge = e;
      v = g.other(e, v);
    }
    if (cyc.size() < 3) fail(ErrorCode::CommonGraphNotCycles, "common cycle shorter than three");
    out.push_back(canonical_cycle(std::move(cyc)));
  }
  std::sort(out.begin(), out.end(), [](const DirectedCycle& a, const DirectedCycle& b) { return a.vertices[0] < b.vertices[0]; });
  return out;
}

std::vector<DirectedCycle> common_cycles(const SefeInstance& inst) { return cycles_of(inst.common); }

std::vector<int> cycle_edges(const Graph& g, const DirectedCycle& c) {
  const auto& vs = c.vertices;
  std::vector<int> out(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) {
    int e = g.find_edge(vs[i], vs[(i + 1) % vs.size()]);
    if (e < 0) fail(ErrorCode::ConstraintViolation, "cycle edge missing from graph");
    out[i] = e;
  }
  return out;
}

SefeInstance parse_instance(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<TaggedEdge> edges;
  std::map<int, std::vector<int>> rot;
  int lineno = 0;
  auto bad = [&](const std::string& why) { fail(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": " + why); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (n < 0) {
      if (head != "sefe" || !(ls >> n) || n < 0) bad("expected header 'sefe <n>'");
      continue;
    }
    if (head == "rot") {
      std::string vtok;
      if (!(ls >> vtok)) bad("rotation line without vertex");
      if (!vtok.empty() && vtok.back() == ':') vtok.pop_back();
      else {
        std::string colon;
        if (!(ls >> colon) || colon != ":") bad("rotation line needs ':'");
      }
      int v = 0;
      try {
        v = std::stoi(vtok);
      } catch (...) {
        bad("bad rotation vertex");
      }
      std::vector<int> list;
      int e = 0;
      while (ls >> e) list.push_back(e);
      if (!ls.eof()) bad("bad rotation entry");
      if (!rot.emplace(v, std::move(list)).second) bad("repeated rotation line");
      continue;
    }
    TaggedEdge t;
    std::string tag;
    try {
      t.u = std::stoi(head);
    } catch (...) {
      bad("expected edge 'u v tag'");
    }
    if (!(ls >> t.v >> tag)) bad("expected edge 'u v tag'");
    if (tag == "c")
      t.tag = EdgeTag::Common;
    else if (tag == "1")
      t.tag = EdgeTag::Excl1;
    else if (tag == "2")
      t.tag = EdgeTag::Excl2;
    else
      bad("edge tag must be c, 1 or 2");
    std::string extra;
    if (ls >> extra) bad("trailing tokens");
    edges.push_back(t);
  }
  if (n < 0) fail(ErrorCode::MalformedInput, "missing header");
  return build_instance(n, edges, rot);
}

SefeInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedInput, "cannot open " + path);
  return parse_instance(in);
}

std::string format_instance(const SefeInstance& inst) {
  std::ostringstream out;
  out << "sefe " << inst.n << "\n";
  for (const auto& e : inst.edges)
    out << e.u << " " << e.v << " " << (e.tag == EdgeTag::Common ? "c" : e.tag == EdgeTag::Excl1 ? "1" : "2") << "\n";
  for (const auto& [v, list] : inst.rotation_lines) {
    out << "rot " << v << ":";
    for (int e : list) out << " " << e;
    out << "\n";
  }
  return out.str();
}

}  // namespace sefe
