#include "sefe/cycle_sefe.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sefe/error.hpp"
#include "sefe/union_find.hpp"

namespace sefe {

namespace {

// Side of every skeleton edge off kappa, for the given rotation of the skeleton.
std::vector<Side> edge_sides(const Graph& sk, const RotationSystem& rot, const CycleInSkeleton& cls) {
  const Faces f = trace_faces(sk, rot);
  std::vector<char> barrier(static_cast<size_t>(sk.num_edges()), 0);
  for (int e : cls.kappa) barrier[e] = 1;
  UnionFind uf(f.count);
  for (int e = 0; e < sk.num_edges(); ++e)
    if (!barrier[e]) uf.unite(f.of_dart[2 * e], f.of_dart[2 * e + 1]);
  const int d0 = 2 * cls.kappa[0] + cls.kappa_dir[0];
  const int left = uf.find(f.of_dart[d0]);
  SEFE_ASSERT(left != uf.find(f.of_dart[d0 ^ 1]), "skeleton cycle does not separate its faces");
  std::vector<Side> out(static_cast<size_t>(sk.num_edges()), Side::Left);
  for (int e = 0; e < sk.num_edges(); ++e)
    if (!barrier[e]) out[e] = uf.find(f.of_dart[2 * e]) == left ? Side::Left : Side::Right;
  return out;
}

void add_chain(ConstraintSet& cs, const std::vector<int>& vars) {
  for (size_t i = 1; i < vars.size(); ++i) cs.add_eq(vars[i - 1], vars[i]);
}

void check_edges_connected(const Graph& host) {
  int count = 0;
  const auto label = component_labels(host, &count);
  int seen = -1;
  for (int v = 0; v < host.num_vertices(); ++v) {
    if (host.degree(v) == 0) continue;
    if (seen >= 0 && label[v] != seen) fail(ErrorCode::DisconnectedGraph, "host graph is disconnected");
    seen = label[v];
  }
}

// Next node from a BC-tree node toward another node.
int step_toward(const RootedTree& t, int from, int to) {
  return t.is_ancestor(from, to) ? t.child_toward(from, to) : t.parent(from);
}

}  // namespace

ReferenceModel build_reference(const Graph& host, const std::vector<DirectedCycle>& cycles) {
  check_edges_connected(host);
  ReferenceModel m;
  const int k = static_cast<int>(cycles.size());
  m.k = k;
  m.cycles = cycles;
  m.cycle_of_vertex.assign(static_cast<size_t>(host.num_vertices()), -1);
  for (int i = 0; i < k; ++i) {
    m.cycle_edges.push_back(cycle_edges(host, cycles[i]));
    for (int v : cycles[i].vertices) {
      if (m.cycle_of_vertex[v] >= 0) fail(ErrorCode::ConstraintViolation, "cycles are not disjoint");
      m.cycle_of_vertex[v] = i;
    }
  }
  m.cs = ConstraintSet(k > 0 ? k * (k - 1) : 0);
  m.det.assign(static_cast<size_t>(m.cs.num_vars), Site{});
  m.bc = block_cut_tree(host);
  const int nb = m.bc.num_blocks();
  if (nb == 0) return m;
  m.bc_rooted = root_bc_tree(m.bc, 0);
  m.blocks.resize(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) m.blocks[b].edges = m.bc.block_edges[b];
  for (int i = 0; i < k; ++i) {
    const int b = m.bc.edge_block[m.cycle_edges[i][0]];
    m.block_of_cycle.push_back(b);
    m.blocks[b].cycles.push_back(i);
  }
  auto set_det = [&](int var, const Site& s) {
    if (m.det[var].kind != Site::Kind::None)
      fail(ErrorCode::InternalInvariant, "relative position " + std::to_string(var) + " is determined twice");
    m.det[var] = s;
  };

  for (int b = 0; b < nb; ++b) {
    BlockModel& bm = m.blocks[b];
    if (bm.cycles.empty()) continue;
    // cycles outside b, grouped by the cutvertex of b through which they hang
    std::map<int, std::vector<int>> group;
    for (int d = 0; d < k; ++d) {
      const int bd = m.block_of_cycle[d];
      if (bd == b) continue;
      const int c = step_toward(m.bc_rooted, b, bd);
      group[m.bc.cutvertices[c - nb]].push_back(d);
    }
    for (int c : bm.cycles) {
      for (const auto& [w, ds] : group) {
        std::vector<int> vars;
        for (int d : ds) vars.push_back(pos_var(k, c, d));
        if (m.cycle_of_vertex[w] != c) {
          add_chain(m.cs, vars);  // extended constraint: everything behind w shares w's side
          continue;
        }
        // cutvertex constraint: one equality class per cut component at w
        std::map<int, std::vector<int>> by_key;
        const int cw = m.bc.cut_node(w);
        for (int d : ds) {
          const int key = step_toward(m.bc_rooted, cw, m.block_of_cycle[d]);
          by_key[key].push_back(pos_var(k, c, d));
          set_det(pos_var(k, c, d), Site{Site::Kind::Cutvertex, b, -1, w, key});
        }
        for (const auto& [key, vs] : by_key) add_chain(m.cs, vs);
      }
    }

    bm.tree = std::make_unique<SpqrTree>(build_spqr(host, bm.edges));
    const SpqrTree& t = *bm.tree;
    std::vector<char> on_cycle(static_cast<size_t>(host.num_edges()), 0);
    for (int c : bm.cycles)
      for (int e : m.cycle_edges[c]) on_cycle[e] = 1;
    int root_edge = bm.edges[0];
    for (int e : bm.edges)
      if (!on_cycle[e]) {
        root_edge = e;
        break;
      }
    bm.rooted = root_spqr(t, t.q_of(root_edge));
    bm.nodes.assign(t.nodes.size(), {});

    // vertex objects: cutvertices of b with something hanging behind them
    std::vector<int> wv;
    std::vector<int> w_edge;
    for (const auto& [w, ds] : group) {
      wv.push_back(w);
      int e0 = -1;
      for (int e : host.incident(w))
        if (m.bc.edge_block[e] == b) {
          e0 = e;
          break;
        }
      w_edge.push_back(e0);
    }

    const int nc = static_cast<int>(bm.cycles.size());
    std::vector<CycleInSkeleton> cls(static_cast<size_t>(nc));
    for (int mu = 0; mu < static_cast<int>(t.nodes.size()); ++mu) {
      const SpqrNode& node = t.nodes[mu];
      if (node.kind == NodeKind::Q || node.kind == NodeKind::S) continue;
      bool any = false;
      for (int i = 0; i < nc; ++i) {
        const int c = bm.cycles[i];
        cls[i] = classify_cycle(bm.rooted, mu, m.cycles[c].vertices, m.cycle_edges[c]);
        any = any || cls[i].as_cycle;
      }
      if (!any) continue;
      // where each vertex object sits: skeleton vertex (-1) or inside a skeleton edge
      std::vector<int> w_eps(wv.size(), -1);
      for (size_t x = 0; x < wv.size(); ++x)
        if (node.local_vertex(wv[x]) < 0) w_eps[x] = bm.rooted.edge_of(mu, w_edge[x]);
      NodeChoice& choice = bm.nodes[mu];

      if (node.kind == NodeKind::P) {
        for (int i = 0; i < nc; ++i) {
          if (!cls[i].as_cycle) continue;
          const int c = bm.cycles[i];
          SEFE_ASSERT(choice.p_cycle < 0, "two cycles in one P-node skeleton");
          choice.p_cycle = c;
          choice.p_kappa = cls[i].kappa;
          choice.p_dir = cls[i].kappa_dir;
          std::map<int, std::vector<int>> per_eps;
          for (int j = 0; j < nc; ++j)
            if (j != i && !cls[j].as_cycle) per_eps[cls[j].contracted_edge].push_back(pos_var(k, c, bm.cycles[j]));
          for (size_t x = 0; x < wv.size(); ++x) {
            if (m.cycle_of_vertex[wv[x]] == c) continue;
            SEFE_ASSERT(w_eps[x] >= 0, "P-node pole off the skeleton cycle");
            for (int d : group[wv[x]]) per_eps[w_eps[x]].push_back(pos_var(k, c, d));
          }
          for (const auto& [eps, vars] : per_eps) {
            if (std::find(cls[i].kappa.begin(), cls[i].kappa.end(), eps) != cls[i].kappa.end()) continue;
            for (int v : vars) {
              set_det(v, Site{Site::Kind::Node, b, mu, -1, -1});
              choice.p_entries.push_back({eps, v});
            }
            add_chain(m.cs, vars);
          }
        }
        continue;
      }

      // R-node: sides in the reference orientation, all cycles of the skeleton at once
      const Graph sk = skeleton_graph(node);
      const RotationSystem ref = reference_rotation(node);
      std::vector<int> incident_edge(node.vertices.size(), -1);
      for (int e = 0; e < sk.num_edges(); ++e) {
        incident_edge[sk.edge(e).u] = e;
        incident_edge[sk.edge(e).v] = e;
      }
      std::vector<int> left_vars, right_vars;
      for (int i = 0; i < nc; ++i) {
        if (!cls[i].as_cycle) continue;
        const int c = bm.cycles[i];
        const auto sides = edge_sides(sk, ref, cls[i]);
        std::vector<char> in_kappa(static_cast<size_t>(sk.num_edges()), 0);
        for (int e : cls[i].kappa) in_kappa[e] = 1;
        auto record = [&](int var, Side s) {
          set_det(var, Site{Site::Kind::Node, b, mu, -1, -1});
          choice.r_entries.push_back({var, s});
          (s == Side::Left ? left_vars : right_vars).push_back(var);
        };
        for (int j = 0; j < nc; ++j) {
          if (j == i) continue;
          const int var = pos_var(k, c, bm.cycles[j]);
          if (cls[j].as_cycle)
            record(var, sides[cls[j].kappa[0]]);
          else if (!in_kappa[cls[j].contracted_edge])
            record(var, sides[cls[j].contracted_edge]);
        }
        for (size_t x = 0; x < wv.size(); ++x) {
          if (m.cycle_of_vertex[wv[x]] == c) continue;
          int eps = w_eps[x];
          if (eps < 0) {
            eps = incident_edge[node.local_vertex(wv[x])];
          } else if (in_kappa[eps]) {
            continue;
          }
          for (int d : group[wv[x]]) record(pos_var(k, c, d), sides[eps]);
        }
      }
      add_chain(m.cs, left_vars);
      add_chain(m.cs, right_vars);
      if (!left_vars.empty() && !right_vars.empty()) m.cs.add_neq(left_vars[0], right_vars[0]);
    }
  }
  for (int v = 0; v < m.cs.num_vars; ++v)
    if (m.det[v].kind == Site::Kind::None)
      fail(ErrorCode::InternalInvariant, "relative position " + std::to_string(v) + " has no determining site");
  return m;
}

ConstraintSet pr_node_constraints(const Graph& host, const std::vector<DirectedCycle>& cycles) {
  if (block_cut_tree(host).num_blocks() != 1) fail(ErrorCode::NotBiconnected, "host is not biconnected");
  return build_reference(host, cycles).cs;
}

ConstraintSet extended_and_cutvertex_constraints(const Graph& host, const std::vector<DirectedCycle>& cycles) {
  return build_reference(host, cycles).cs;
}

namespace {

// Rotation of each block at its vertices; index by position in block_vertices.
using BlockRotation = std::vector<std::vector<int>>;

BlockRotation embed_plain_block(const Graph& host, const std::vector<int>& edges, const std::vector<int>& verts) {
  auto local = [&](int x) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()); };
  Graph g(static_cast<int>(verts.size()));
  for (int e : edges) g.add_edge(local(host.edge(e).u), local(host.edge(e).v));
  auto rot = planar_embedding(g);
  if (!rot) fail(ErrorCode::NonPlanarInput, "block is not planar");
  BlockRotation out(verts.size());
  for (size_t x = 0; x < verts.size(); ++x)
    for (int le : (*rot)[x]) out[x].push_back(edges[le]);
  return out;
}

BlockRotation embed_spqr_block(const BlockModel& bm, const std::vector<int>& verts, const SemiEmbedding& semi) {
  const SpqrTree& t = *bm.tree;
  const RootedSpqr& rt = bm.rooted;
  const int n = static_cast<int>(t.nodes.size());
  std::vector<RotationSystem> srot(static_cast<size_t>(n));
  for (int mu = 0; mu < n; ++mu) {
    const SpqrNode& node = t.nodes[mu];
    RotationSystem& r = srot[mu];
    r.assign(node.vertices.size(), {});
    switch (node.kind) {
      case NodeKind::Q:
      case NodeKind::S:
        for (int e = 0; e < static_cast<int>(node.edges.size()); ++e) {
          r[node.local_vertex(node.edges[e].u)].push_back(e);
          r[node.local_vertex(node.edges[e].v)].push_back(e);
        }
        break;
      case NodeKind::P: {
        const NodeChoice& ch = bm.nodes[mu];
        const int m = static_cast<int>(node.edges.size());
        std::vector<int> order;
        if (ch.p_cycle < 0) {
          for (int e = 0; e < m; ++e) order.push_back(e);
        } else {
          const int s = node.vertices[0];
          const auto& e0 = node.edges[ch.p_kappa[0]];
          const int entry0 = ch.p_dir[0] == 0 ? e0.u : e0.v;
          const int out = entry0 == s ? ch.p_kappa[0] : ch.p_kappa[1];
          const int in = entry0 == s ? ch.p_kappa[1] : ch.p_kappa[0];
          std::vector<Side> side(static_cast<size_t>(m), Side::Left);
          for (auto [eps, var] : ch.p_entries) side[eps] = semi.pos[var];
          order.push_back(in);
          for (int e = 0; e < m; ++e)
            if (e != in && e != out && side[e] == Side::Left) order.push_back(e);
          order.push_back(out);
          for (int e = 0; e < m; ++e)
            if (e != in && e != out && side[e] == Side::Right) order.push_back(e);
        }
        r[0] = order;
        r[1].assign(order.rbegin(), order.rend());
        break;
      }
      case NodeKind::R: {
        r = reference_rotation(node);
        const auto& entries = bm.nodes[mu].r_entries;
        if (!entries.empty()) {
          const bool flipped = semi.pos[entries[0].first] != entries[0].second;
          for (auto [var, s] : entries)
            if ((semi.pos[var] != s) != flipped)
              fail(ErrorCode::ConstraintViolation, "R-node positions disagree on the skeleton orientation");
          if (flipped) r = mirror(r);
        }
        break;
      }
    }
  }
  // topmost node of every vertex
  std::vector<int> top(verts.size(), -1);
  auto vidx = [&](int x) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()); };
  for (int mu = 0; mu < n; ++mu) {
    const SpqrNode& node = t.nodes[mu];
    const int pe = rt.parent_edge[mu];
    for (int x : node.vertices) {
      if (pe >= 0 && (node.edges[pe].u == x || node.edges[pe].v == x)) continue;
      top[vidx(x)] = mu;
    }
  }
  BlockRotation out(verts.size());
  struct Frame {
    int mu;
    std::vector<int> seq;
    size_t idx;
  };
  std::vector<Frame> stack;
  for (size_t xi = 0; xi < verts.size(); ++xi) {
    const int v = verts[xi];
    const int mu0 = top[xi];
    SEFE_ASSERT(mu0 >= 0, "vertex without a topmost SPQR node");
    stack.push_back({mu0, srot[mu0][t.nodes[mu0].local_vertex(v)], 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx == f.seq.size()) {
        stack.pop_back();
        continue;
      }
      const int i = f.seq[f.idx++];
      const SkelEdge& se = t.nodes[f.mu].edges[i];
      if (se.twin_node < 0) {
        out[xi].push_back(se.real_edge);
        continue;
      }
      const int nu = se.twin_node;
      const auto& rv = srot[nu][t.nodes[nu].local_vertex(v)];
      const auto at = std::find(rv.begin(), rv.end(), se.twin_edge);
      SEFE_ASSERT(at != rv.end(), "twin edge missing from the child's rotation");
      std::vector<int> seq;
      for (auto it = std::next(at); it != rv.end(); ++it) seq.push_back(*it);
      for (auto it = rv.begin(); it != at; ++it) seq.push_back(*it);
      stack.push_back({nu, std::move(seq), 0});
    }
  }
  return out;
}

}  // namespace

RotationSystem realize_embedding(const ReferenceModel& m, const Graph& host, const SemiEmbedding& semi) {
  if (semi.k != m.k || !satisfies(m.cs, semi.pos))
    fail(ErrorCode::ConstraintViolation, "semi-embedding violates the host's constraints");
  const BlockCutTree& bc = m.bc;
  const int nb = bc.num_blocks();
  std::vector<BlockRotation> brot(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    const auto& verts = bc.block_vertices[b];
    if (m.blocks[b].tree)
      brot[b] = embed_spqr_block(m.blocks[b], verts, semi);
    else
      brot[b] = embed_plain_block(host, m.blocks[b].edges, verts);
  }
  auto block_rot = [&](int b, int v) -> const std::vector<int>& {
    const auto& verts = bc.block_vertices[b];
    return brot[b][std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()];
  };
  RotationSystem rot(static_cast<size_t>(host.num_vertices()));
  for (int v = 0; v < host.num_vertices(); ++v) {
    if (host.degree(v) == 0) continue;
    if (!bc.is_cutvertex(v)) {
      rot[v] = block_rot(bc.home_block[v], v);
      continue;
    }
    const int cv = bc.cut_node(v);
    const int c = m.cycle_of_vertex[v];
    const int center = c >= 0 ? m.block_of_cycle[c] : bc.tree_adj[cv][0];
    std::vector<int> left_runs, right_runs;
    std::map<int, Side> side_of_block;
    int in = -1, out = -1;
    if (c >= 0) {
      const auto& cvs = m.cycles[c].vertices;
      const int len = static_cast<int>(cvs.size());
      const int j = static_cast<int>(std::find(cvs.begin(), cvs.end(), v) - cvs.begin());
      out = m.cycle_edges[c][j];
      in = m.cycle_edges[c][(j + len - 1) % len];
      for (int d = 0; d < m.k; ++d) {
        if (d == c) continue;
        const Site& s = m.det[pos_var(m.k, c, d)];
        if (s.kind == Site::Kind::Cutvertex && s.vertex == v) side_of_block[s.key] = semi.at(c, d);
      }
    }
    for (int x : bc.tree_adj[cv]) {
      if (x == center) continue;
      auto it = side_of_block.find(x);
      const auto& run = block_rot(x, v);
      auto& dst = (it != side_of_block.end() && it->second == Side::Right) ? right_runs : left_runs;
      dst.insert(dst.end(), run.begin(), run.end());
    }
    const auto& base = block_rot(center, v);
    if (c < 0) in = base[0];
    for (int e : base) {
      rot[v].push_back(e);
      if (e == in) rot[v].insert(rot[v].end(), left_runs.begin(), left_runs.end());
      if (e == out) rot[v].insert(rot[v].end(), right_runs.begin(), right_runs.end());
    }
  }
  if (!is_sphere_embedding(host, rot)) fail(ErrorCode::InternalInvariant, "realised rotation is not planar");
  return rot;
}

RotationSystem realize_embedding(const Graph& host, const std::vector<DirectedCycle>& cycles, const SemiEmbedding& semi) {
  return realize_embedding(build_reference(host, cycles), host, semi);
}

}  // namespace sefe
