#include "sefe/cctree.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

#include "sefe/error.hpp"
#include "sefe/union_find.hpp"

namespace sefe {

int CTree::var(int c, int d) const {
  const auto& a = adj[c];
  auto it = std::lower_bound(a.begin(), a.end(), std::pair{d, -1});
  if (it == a.end() || it->first != d) return -1;
  return 2 * it->second + (edges[it->second].first == c ? 0 : 1);
}

std::pair<int, int> CTree::var_pair(int v) const {
  const auto [a, b] = edges[v / 2];
  return v % 2 == 0 ? std::pair{a, b} : std::pair{b, a};
}

int CTree::rep(int c, int x) const {
  SEFE_ASSERT(c != x, "rep: same cycle");
  return rooted.is_ancestor(c, x) ? rooted.child_toward(c, x) : rooted.parent(c);
}

std::vector<int> CTree::host_path(int e) const {
  std::vector<int> out;
  if (attach.empty()) return out;
  int v = attach[e];
  out.push_back(v);
  for (v = host_parent[v]; v >= 0; v = host_parent[v]) {
    out.push_back(v);
    if (host_cycle[v] >= 0) break;
  }
  return out;
}

CTree make_ctree(int k, const std::vector<std::pair<int, int>>& edges) {
  if (k < 0 || static_cast<int>(edges.size()) != std::max(k - 1, 0)) fail(ErrorCode::MalformedInput, "C-tree needs k-1 edges");
  CTree t;
  t.k = k;
  t.edges = edges;
  t.adj.assign(static_cast<size_t>(k), {});
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto [a, b] = edges[e];
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) fail(ErrorCode::MalformedInput, "bad C-tree edge");
    t.adj[a].push_back({b, e});
    t.adj[b].push_back({a, e});
  }
  for (auto& a : t.adj) std::sort(a.begin(), a.end());
  if (k == 0) return t;
  std::vector<int> parent(static_cast<size_t>(k), -2);
  parent[0] = -1;
  std::vector<int> queue{0};
  for (size_t i = 0; i < queue.size(); ++i)
    for (auto [d, e] : t.adj[queue[i]])
      if (parent[d] == -2) {
        parent[d] = queue[i];
        queue.push_back(d);
      }
  if (static_cast<int>(queue.size()) != k) fail(ErrorCode::MalformedInput, "C-tree edges do not form a tree");
  t.rooted = RootedTree(parent);
  return t;
}

CTree build_ctree(const Graph& host, const std::vector<std::vector<int>>& parts) {
  const int n = host.num_vertices();
  const int k = static_cast<int>(parts.size());
  std::vector<int> cyc(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> sorted(parts);
  for (int i = 0; i < k; ++i) {
    std::sort(sorted[i].begin(), sorted[i].end());
    for (int v : sorted[i]) cyc[v] = i;
  }
  std::vector<int> parent(static_cast<size_t>(n), -1), owner(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> attach;
  std::deque<int> queue;
  // a part is entered as a unit; its other vertices hang off the entry vertex
  auto enter = [&](int d, int entry, int from) {
    parent[entry] = from;
    for (int v : sorted[d]) {
      seen[v] = 1;
      owner[v] = d;
      if (v != entry) parent[v] = entry;
      queue.push_back(v);
    }
  };
  if (k > 0) enter(0, sorted[0].front(), -1);
  std::vector<int> nbrs;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    nbrs.clear();
    for (int e : host.incident(v)) nbrs.push_back(host.other(e, v));
    std::sort(nbrs.begin(), nbrs.end());
    for (int x : nbrs) {
      if (seen[x]) continue;
      if (cyc[x] >= 0) {
        edges.push_back({owner[v], cyc[x]});
        attach.push_back(x);
        enter(cyc[x], x, v);
      } else {
        seen[x] = 1;
        parent[x] = v;
        owner[x] = owner[v];
        queue.push_back(x);
      }
    }
  }
  if (static_cast<int>(edges.size()) != std::max(k - 1, 0)) fail(ErrorCode::DisconnectedGraph, "parts are not connected in the host");
  CTree t = make_ctree(k, edges);
  t.host_parent = std::move(parent);
  t.host_cycle = std::move(cyc);
  t.attach = std::move(attach);
  return t;
}

CTree build_ctree(const Graph& host, const std::vector<DirectedCycle>& cycles) {
  std::vector<std::vector<int>> parts;
  for (const auto& c : cycles) parts.push_back(c.vertices);
  return build_ctree(host, parts);
}

void phase1_induced(BlockPhases& ph, const std::vector<std::vector<int>>& cycle_edges) {
  const SpqrTree& t = *ph.tree;
  const RootedTree& shape = ph.rooted.shape;
  const int nn = static_cast<int>(t.nodes.size());
  ph.cyc.assign(static_cast<size_t>(nn), {});
  ph.bel.assign(static_cast<size_t>(nn), -1);
  ph.root.assign(ph.cycles.size(), -1);
  ph.members.assign(ph.cycles.size(), {});
  std::vector<int> stamp(static_cast<size_t>(nn), -1);
  std::vector<int> terms;
  for (size_t i = 0; i < ph.cycles.size(); ++i) {
    const int c = ph.cycles[i];
    terms.clear();
    for (int e : cycle_edges[i]) terms.push_back(t.q_of(e));
    std::sort(terms.begin(), terms.end(), [&](int a, int b) { return shape.tin(a) < shape.tin(b); });
    auto& mem = ph.members[i];
    auto add = [&](int v) {
      if (stamp[v] == c) return;
      stamp[v] = c;
      ph.cyc[v].push_back(c);
      mem.push_back(v);
    };
    // consecutive terminals in preorder: the paths up to their LCAs cover the Steiner tree once
    auto climb = [&](int from, int to) {
      for (int v = from; v != to; v = shape.parent(v)) {
        add(v);
        SEFE_ASSERT(ph.bel[v] < 0, "induced subtrees share a tree edge");
        ph.bel[v] = c;
      }
      add(to);
    };
    const int r = shape.lca(terms.front(), terms.back());
    climb(terms[0], r);
    for (size_t j = 1; j < terms.size(); ++j) climb(terms[j], shape.lca(terms[j - 1], terms[j]));
    std::sort(mem.begin(), mem.end(), [&](int a, int b) { return shape.tin(a) < shape.tin(b); });
    ph.root[i] = r;
  }
}

void phase2_high(BlockPhases& ph) {
  const RootedTree& shape = ph.rooted.shape;
  ph.high.assign(static_cast<size_t>(shape.size()), -1);
  for (int v : shape.preorder()) {
    const int p = shape.parent(v);
    if (p < 0 || ph.bel[v] >= 0) continue;
    ph.high[v] = (shape.parent(p) < 0 || ph.bel[p] >= 0) ? v : ph.high[p];
  }
}

namespace {

void add_chain(ConstraintSet& cs, const std::vector<int>& vars) {
  for (size_t i = 1; i < vars.size(); ++i) cs.add_eq(vars[i - 1], vars[i]);
}

int step_toward(const RootedTree& t, int from, int to) {
  return t.is_ancestor(from, to) ? t.child_toward(from, to) : t.parent(from);
}

// Cycle whose induced subtree contains the tree edge behind skeleton edge i of mu, or -1.
int edge_owner(const BlockPhases& ph, int mu, int i) {
  if (i == ph.rooted.parent_edge[mu]) return ph.bel[mu];
  return ph.bel[ph.tree->nodes[mu].edges[i].twin_node];
}

struct HostCycles {
  std::vector<std::vector<int>> edges;
  std::vector<int> of_vertex;
  std::vector<int> index;  // position of a vertex on its cycle
};

// Phase 4 at an R-node: sides in the reference orientation of every variable
// determined here, through the tree of regions cut out by the skeleton cycles.
void r_node_constraints(const BlockPhases& ph, int mu, const CTree& ct, const HostCycles& hc, ConstraintSet& cs) {
  const SpqrNode& node = ph.tree->nodes[mu];
  const Graph sk = skeleton_graph(node);
  const Faces f = trace_faces(sk, reference_rotation(node));
  const int m = sk.num_edges();
  const auto& cycs = ph.cyc[mu];
  std::vector<int> owner(static_cast<size_t>(m)), kedge(cycs.size(), -1);
  UnionFind uf(f.count);
  for (int i = 0; i < m; ++i) {
    owner[i] = edge_owner(ph, mu, i);
    if (owner[i] < 0) {
      uf.unite(f.of_dart[2 * i], f.of_dart[2 * i + 1]);
      continue;
    }
    const auto at = std::lower_bound(cycs.begin(), cycs.end(), owner[i]) - cycs.begin();
    SEFE_ASSERT(at < static_cast<long>(cycs.size()) && cycs[at] == owner[i], "edge owner is not a skeleton cycle");
    if (kedge[at] < 0) kedge[at] = i;
  }
  std::vector<int> rid(static_cast<size_t>(f.count), -1);
  int regions = 0;
  for (int x = 0; x < f.count; ++x)
    if (uf.find(x) == x) rid[x] = regions++;
  SEFE_ASSERT(regions == static_cast<int>(cycs.size()) + 1, "skeleton cycles do not cut the sphere into a tree");
  std::vector<std::array<int, 2>> lr(cycs.size());
  std::vector<std::vector<std::pair<int, int>>> radj(static_cast<size_t>(regions));
  for (size_t j = 0; j < cycs.size(); ++j) {
    const int c = cycs[j];
    const int i = kedge[j];
    const SkelEdge& se = node.edges[i];
    const int out = hc.edges[c][hc.index[se.u]];
    const bool forward = ph.rooted.edge_of(mu, out) == i;
    const int dart = 2 * i + (forward ? 0 : 1);
    lr[j] = {rid[uf.find(f.of_dart[dart])], rid[uf.find(f.of_dart[dart ^ 1])]};
    SEFE_ASSERT(lr[j][0] != lr[j][1], "skeleton cycle does not separate its faces");
    radj[lr[j][0]].push_back({lr[j][1], static_cast<int>(j)});
    radj[lr[j][1]].push_back({lr[j][0], static_cast<int>(j)});
  }
  std::vector<int> rparent(static_cast<size_t>(regions), -1), via(static_cast<size_t>(regions), -1);
  std::vector<int> tin(static_cast<size_t>(regions), -1), tout(static_cast<size_t>(regions), 0);
  std::vector<std::pair<int, size_t>> stack{{0, 0}};
  int timer = 0;
  tin[0] = timer++;
  while (!stack.empty()) {
    auto& [x, it] = stack.back();
    if (it == radj[x].size()) {
      tout[x] = timer;
      stack.pop_back();
      continue;
    }
    const auto [y, j] = radj[x][it++];
    if (tin[y] >= 0) continue;
    rparent[y] = x;
    via[y] = j;
    tin[y] = timer++;
    stack.push_back({y, 0});
  }
  std::vector<int> left, right;
  for (auto [eps, var] : ph.at_node[mu]) {
    const int c = ct.var_pair(var).first;
    SEFE_ASSERT(owner[eps] != c, "determined position sits inside the cycle's own edge");
    const size_t j = static_cast<size_t>(std::lower_bound(cycs.begin(), cycs.end(), c) - cycs.begin());
    const int rho = rid[uf.find(f.of_dart[2 * eps])];
    const bool l_child = via[lr[j][0]] == static_cast<int>(j) && rparent[lr[j][0]] == lr[j][1];
    const int x = l_child ? lr[j][0] : lr[j][1];
    const bool inside = tin[x] <= tin[rho] && tin[rho] < tout[x];
    (inside == l_child ? left : right).push_back(var);
  }
  add_chain(cs, left);
  add_chain(cs, right);
  if (!left.empty() && !right.empty()) cs.add_neq(left[0], right[0]);
}

void require_edges_connected(const Graph& host) {
  int count = 0;
  const auto label = component_labels(host, &count);
  int seen = -1;
  for (int v = 0; v < host.num_vertices(); ++v) {
    if (host.degree(v) == 0) continue;
    if (seen >= 0 && label[v] != seen) fail(ErrorCode::DisconnectedGraph, "host graph is disconnected");
    seen = label[v];
  }
}

}  // namespace

CcTreeBuild build_cctree_detailed(const Graph& host, const std::vector<DirectedCycle>& cycles) {
  require_edges_connected(host);
  CcTreeBuild out;
  const int k = static_cast<int>(cycles.size());
  out.cct.tree = build_ctree(host, cycles);
  const CTree& ct = out.cct.tree;
  const int nv = ct.num_vars();
  out.cct.cs = ConstraintSet(nv);
  out.det.assign(static_cast<size_t>(nv), Site{});
  if (nv == 0) return out;

  HostCycles hc;
  hc.of_vertex.assign(static_cast<size_t>(host.num_vertices()), -1);
  hc.index.assign(static_cast<size_t>(host.num_vertices()), -1);
  for (int i = 0; i < k; ++i) {
    hc.edges.push_back(cycle_edges(host, cycles[i]));
    const auto& vs = cycles[i].vertices;
    for (int j = 0; j < static_cast<int>(vs.size()); ++j) {
      if (hc.of_vertex[vs[j]] >= 0) fail(ErrorCode::ConstraintViolation, "cycles are not disjoint");
      hc.of_vertex[vs[j]] = i;
      hc.index[vs[j]] = j;
    }
  }
  const BlockCutTree bc = block_cut_tree(host);
  const int nb = bc.num_blocks();
  const RootedTree bcr = root_bc_tree(bc, 0);
  auto vidx = [&](int b, int v) {
    const auto& vs = bc.block_vertices[b];
    return static_cast<size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<int>> vertex_edge(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) {
    vertex_edge[b].assign(bc.block_vertices[b].size(), -1);
    for (int e : bc.block_edges[b])
      for (int x : {host.edge(e).u, host.edge(e).v})
        if (vertex_edge[b][vidx(b, x)] < 0) vertex_edge[b][vidx(b, x)] = e;
  }
  std::vector<int> block_of(static_cast<size_t>(k)), local(static_cast<size_t>(k)), phase_of(static_cast<size_t>(nb), -1);
  for (int i = 0; i < k; ++i) {
    const int b = bc.edge_block[hc.edges[i][0]];
    block_of[i] = b;
    if (phase_of[b] < 0) {
      phase_of[b] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
      out.blocks.back().block = b;
    }
    BlockPhases& ph = out.blocks[phase_of[b]];
    local[i] = static_cast<int>(ph.cycles.size());
    ph.cycles.push_back(i);
  }
  std::vector<char> on_cycle(static_cast<size_t>(host.num_edges()), 0);
  for (const auto& es : hc.edges)
    for (int e : es) on_cycle[e] = 1;
  for (BlockPhases& ph : out.blocks) {
    const auto& edges = bc.block_edges[ph.block];
    ph.tree = std::make_unique<SpqrTree>(build_spqr(host, edges));
    int root_edge = edges[0];
    for (int e : edges)
      if (!on_cycle[e]) {
        root_edge = e;
        break;
      }
    ph.rooted = root_spqr(*ph.tree, ph.tree->q_of(root_edge));
    std::vector<std::vector<int>> ce;
    for (int c : ph.cycles) ce.push_back(hc.edges[c]);
    phase1_induced(ph, ce);
    phase2_high(ph);
    ph.at_node.assign(ph.tree->nodes.size(), {});
  }

  // phase 3: the node (or cutvertex) determining every crucial position
  std::map<std::array<int, 3>, std::vector<int>> cut_groups;
  for (int var = 0; var < nv; ++var) {
    const auto [c, d] = ct.var_pair(var);
    const int b = block_of[c];
    const int bd = block_of[d];
    int edge = hc.edges[d][0];
    if (bd != b) {
      const int cn = step_toward(bcr, b, bd);
      const int w = bc.cutvertices[cn - nb];
      if (hc.of_vertex[w] == c) {
        const int key = step_toward(bcr, cn, bd);
        out.det[var] = Site{Site::Kind::Cutvertex, b, -1, w, key};
        cut_groups[{c, w, key}].push_back(var);
        continue;
      }
      edge = vertex_edge[b][vidx(b, w)];
    }
    BlockPhases& ph = out.blocks[phase_of[b]];
    const RootedTree& shape = ph.rooted.shape;
    const int q = ph.tree->q_of(edge);
    const int r = ph.root[local[c]];
    int mu = r;
    if (shape.is_ancestor(r, q)) {
      // deepest induced node above q: LCA with the last induced node before q in preorder
      const auto& mem = ph.members[local[c]];
      auto it = std::upper_bound(mem.begin(), mem.end(), shape.tin(q), [&](int t, int x) { return t < shape.tin(x); });
      mu = shape.lca(*(it - 1), q);
    }
    SEFE_ASSERT(mu != q, "object lies on the cycle");
    const NodeKind kind = ph.tree->nodes[mu].kind;
    if (kind != NodeKind::P && kind != NodeKind::R)
      fail(ErrorCode::InternalInvariant, "crucial position determined at an S- or Q-node");
    out.det[var] = Site{Site::Kind::Node, b, mu, -1, -1};
    ph.at_node[mu].push_back({ph.rooted.edge_toward(mu, q), var});
  }

  // phase 4
  ConstraintSet& cs = out.cct.cs;
  for (BlockPhases& ph : out.blocks) {
    for (int mu = 0; mu < static_cast<int>(ph.at_node.size()); ++mu) {
      auto& at = ph.at_node[mu];
      if (at.empty()) continue;
      if (ph.tree->nodes[mu].kind == NodeKind::R) {
        r_node_constraints(ph, mu, ct, hc, cs);
        continue;
      }
      std::vector<std::pair<int, int>> sorted = at;
      std::sort(sorted.begin(), sorted.end());
      for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first) cs.add_eq(sorted[i - 1].second, sorted[i].second);
    }
  }
  for (const auto& [key, vars] : cut_groups) add_chain(cs, vars);
  return out;
}

CcTree build_cctree(const Graph& host, const std::vector<DirectedCycle>& cycles) {
  return std::move(build_cctree_detailed(host, cycles).cct);
}

SemiEmbedding expand_crucial(const CTree& t, const Assignment& crucial) {
  SemiEmbedding s(t.k);
  for (int c = 0; c < t.k; ++c)
    for (int x = 0; x < t.k; ++x)
      if (x != c) s.set(c, x, crucial[t.var(c, t.rep(c, x))]);
  return s;
}

std::set<SemiEmbedding> represented_set(const CcTree& t, std::size_t cap) {
  std::set<SemiEmbedding> out;
  for (const auto& a : enumerate_models(t.cs, cap)) out.insert(expand_crucial(t.tree, a));
  return out;
}

std::vector<std::pair<int, int>> common_face_pairs(const CTree& t, const CTree& other) {
  std::vector<std::pair<int, int>> out;
  // every edge of `other` is a path in t, and each inner node of that path
  // must see both ends in one face
  const RootedTree& r = t.rooted;
  std::vector<int> up(static_cast<size_t>(t.k));
  for (int v = 0; v < t.k; ++v) up[v] = v;
  auto unmarked = [&](int v) {
    int x = v;
    while (up[x] != x) x = up[x];
    while (up[v] != x) {
      const int next = up[v];
      up[v] = x;
      v = next;
    }
    return x;
  };
  for (const auto& [c1, c2] : other.edges) {
    const int l = r.lca(c1, c2);
    for (int x : {c1, c2}) {
      if (x == l) continue;
      // Eq at parent(v) between v and parent(parent(v)), once per v
      for (int v = unmarked(x); r.depth(v) >= r.depth(l) + 2; v = unmarked(r.parent(v))) {
        const int p = r.parent(v);
        out.push_back({t.var(p, v), t.var(p, r.parent(p))});
        up[v] = p;
      }
    }
    if (c1 != l && c2 != l) out.push_back({t.var(l, r.child_toward(l, c1)), t.var(l, r.child_toward(l, c2))});
  }
  return out;
}

CcTree intersect(const CcTree& a, const CcTree& b) {
  if (a.tree.k != b.tree.k) fail(ErrorCode::CycleFamilyMismatch, "CC-trees over different cycle families");
  CcTree out{a.tree, a.cs};
  const CTree& t = out.tree;
  // crucial positions of b, moved to their representatives in a's tree
  auto moved = [&](int v) {
    const auto [c, d] = b.tree.var_pair(v);
    return t.var(c, t.rep(c, d));
  };
  for (Constraint con : b.cs.list) {
    con.x.var = moved(con.x.var);
    con.y.var = moved(con.y.var);
    out.cs.list.push_back(con);
  }
  for (const auto& [x, y] : common_face_pairs(a.tree, b.tree)) out.cs.add_eq(x, y);
  return out;
}

std::string cctree_to_dot(const CcTree& t) {
  std::ostringstream os;
  os << "graph cctree {\n  node [shape=circle];\n";
  for (int c = 0; c < t.tree.k; ++c) os << "  c" << c << " [label=\"C" << c << "\"];\n";
  for (int e = 0; e < static_cast<int>(t.tree.edges.size()); ++e) {
    const auto [a, b] = t.tree.edges[e];
    os << "  c" << a << " -- c" << b << " [label=\"x" << 2 * e << ", x" << 2 * e + 1 << "\"];\n";
  }
  os << "  constraints [shape=box, label=\"";
  for (const auto& con : t.cs.list) {
    switch (con.kind) {
      case RelKind::Eq: os << "x" << con.x.var << " = x" << con.y.var; break;
      case RelKind::Neq: os << "x" << con.x.var << " != x" << con.y.var; break;
      case RelKind::Fix: os << "x" << con.x.var << " = " << (con.x.value == Side::Left ? "L" : "R"); break;
      case RelKind::Clause:
        os << "x" << con.x.var << "=" << (con.x.value == Side::Left ? "L" : "R") << " or x" << con.y.var << "="
           << (con.y.value == Side::Left ? "L" : "R");
        break;
    }
    os << "\\l";
  }
  os << "\"];\n}\n";
  return os.str();
}

}  // namespace sefe
