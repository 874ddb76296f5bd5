#include "sefe/fixed_embed.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sefe/error.hpp"
#include "sefe/union_find.hpp"

namespace sefe {

FaceSystem::FaceSystem(const std::vector<int>& face_count) : num_vars(static_cast<int>(face_count.size())) {
  domain.resize(face_count.size());
  for (size_t v = 0; v < face_count.size(); ++v)
    for (int f = 0; f < face_count[v]; ++f) domain[v].push_back(f);
}

void FaceSystem::restrict(int var, std::vector<int> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<int> both;
  std::set_intersection(domain[var].begin(), domain[var].end(), faces.begin(), faces.end(), std::back_inserter(both));
  domain[var] = std::move(both);
}

void FaceSystem::merge(const FaceSystem& other) {
  SEFE_ASSERT(other.num_vars == num_vars, "merging face systems over different variables");
  for (int v = 0; v < num_vars; ++v) restrict(v, other.domain[v]);
  eq.insert(eq.end(), other.eq.begin(), other.eq.end());
  groups.insert(groups.end(), other.groups.begin(), other.groups.end());
}

bool satisfies(const FaceSystem& sys, const FacePositions& x) {
  if (static_cast<int>(x.size()) != sys.num_vars) return false;
  for (int v = 0; v < sys.num_vars; ++v)
    if (!std::binary_search(sys.domain[v].begin(), sys.domain[v].end(), x[v])) return false;
  for (auto [a, b] : sys.eq)
    if (x[a] != x[b]) return false;
  for (const auto& g : sys.groups) {
    bool ok[2] = {true, true};
    for (const auto& e : g) {
      ok[0] = ok[0] && x[e.var] == e.face0;
      ok[1] = ok[1] && x[e.var] == e.face1;
    }
    if (!ok[0] && !ok[1]) return false;
  }
  return true;
}

namespace {

Side choice_side(int b) { return b == 0 ? Side::Left : Side::Right; }

struct Reduced {
  UnionFind uf;
  std::vector<int> cls;                 // class index per variable
  std::vector<std::vector<int>> dom;    // per class
  std::vector<std::vector<std::pair<int, PairEntry>>> tied;  // per class: (group, entry)
  ConstraintSet choices;                // over the groups
  bool empty = false;
};

// Contract Eq edges, intersect domains, and turn the group entries into 2-SAT
// over the group choices.
Reduced reduce(const FaceSystem& sys) {
  Reduced r{UnionFind(sys.num_vars), {}, {}, {}, ConstraintSet(static_cast<int>(sys.groups.size())), false};
  for (auto [a, b] : sys.eq) r.uf.unite(a, b);
  std::vector<int> index(static_cast<size_t>(sys.num_vars), -1);
  r.cls.resize(static_cast<size_t>(sys.num_vars));
  for (int v = 0; v < sys.num_vars; ++v) {
    const int root = r.uf.find(v);
    if (index[root] < 0) {
      index[root] = static_cast<int>(r.dom.size());
      r.dom.push_back(sys.domain[v]);
      r.tied.emplace_back();
    } else {
      auto& d = r.dom[index[root]];
      std::vector<int> both;
      std::set_intersection(d.begin(), d.end(), sys.domain[v].begin(), sys.domain[v].end(), std::back_inserter(both));
      d = std::move(both);
    }
    r.cls[v] = index[root];
  }
  for (const auto& d : r.dom) r.empty = r.empty || d.empty();
  if (r.empty) return r;
  for (int g = 0; g < static_cast<int>(sys.groups.size()); ++g)
    for (const auto& e : sys.groups[g]) r.tied[r.cls[e.var]].push_back({g, e});
  auto face = [](const PairEntry& e, int b) { return b == 0 ? e.face0 : e.face1; };
  for (size_t c = 0; c < r.dom.size(); ++c) {
    const auto& d = r.dom[c];
    const auto& t = r.tied[c];
    for (const auto& [g, e] : t)
      for (int b : {0, 1})
        if (!std::binary_search(d.begin(), d.end(), face(e, b))) r.choices.add_fix(g, choice_side(1 - b));
    // consecutive entries must agree; all then name one face
    for (size_t i = 1; i < t.size(); ++i) {
      const auto& [g1, e1] = t[i - 1];
      const auto& [g2, e2] = t[i];
      for (int a : {0, 1})
        for (int b : {0, 1}) {
          if (face(e1, a) == face(e2, b)) continue;
          if (g1 == g2) {
            if (a == b) r.choices.add_fix(g1, choice_side(1 - a));
            continue;
          }
          r.choices.add_clause({g1, choice_side(1 - a)}, {g2, choice_side(1 - b)});
        }
    }
  }
  return r;
}

}  // namespace

std::optional<FacePositions> solve_faces(const FaceSystem& sys) {
  const Reduced r = reduce(sys);
  if (r.empty) return std::nullopt;
  const auto a = solve_2sat(r.choices);
  if (!a) return std::nullopt;
  FacePositions out(static_cast<size_t>(sys.num_vars));
  for (int v = 0; v < sys.num_vars; ++v) {
    const int c = r.cls[v];
    if (r.tied[c].empty()) {
      out[v] = r.dom[c].front();
    } else {
      const auto& [g, e] = r.tied[c].front();
      out[v] = (*a)[g] == Side::Left ? e.face0 : e.face1;
    }
  }
  return out;
}

std::vector<FacePositions> enumerate_face_models(const FaceSystem& sys, std::size_t cap) {
  std::set<FacePositions> out;
  const Reduced r = reduce(sys);
  if (r.empty) return {};
  std::vector<int> free_cls;
  for (size_t c = 0; c < r.dom.size(); ++c)
    if (r.tied[c].empty()) free_cls.push_back(static_cast<int>(c));
  for (const auto& a : enumerate_models(r.choices, cap)) {
    std::vector<int> value(r.dom.size(), -1);
    for (size_t c = 0; c < r.dom.size(); ++c)
      if (!r.tied[c].empty()) {
        const auto& [g, e] = r.tied[c].front();
        value[c] = a[g] == Side::Left ? e.face0 : e.face1;
      }
    // odometer over the free classes
    std::vector<size_t> digit(free_cls.size(), 0);
    while (true) {
      for (size_t i = 0; i < free_cls.size(); ++i) value[free_cls[i]] = r.dom[free_cls[i]][digit[i]];
      FacePositions x(static_cast<size_t>(sys.num_vars));
      for (int v = 0; v < sys.num_vars; ++v) x[v] = value[r.cls[v]];
      out.insert(std::move(x));
      if (out.size() > cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " face models");
      size_t i = 0;
      while (i < digit.size() && ++digit[i] == r.dom[free_cls[i]].size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  return {out.begin(), out.end()};
}

namespace {

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

int step_toward(const RootedTree& t, int from, int to) {
  return t.is_ancestor(from, to) ? t.child_toward(from, to) : t.parent(from);
}

void add_chain(FaceSystem& sys, const std::vector<int>& vars) {
  for (size_t i = 1; i < vars.size(); ++i) sys.eq.push_back({vars[i - 1], vars[i]});
}

[[noreturn]] void conflict(int comp, const std::string& what) {
  fail(ErrorCode::EmbeddingConflict, "component " + std::to_string(comp) + ": " + what);
}

// A maximal stretch of the component's rotation at a skeleton vertex whose
// edges lie in one skeleton edge; `last` is the far end of its last edge.
struct Run {
  int eps = -1;
  int last = -1;
};

struct CompInHost {
  const FixedComponent* c = nullptr;
  std::vector<int> host_edge;  // per local edge
};

// Runs of c around host vertex s in node mu, in c's rotation; nullopt when
// the edges of one skeleton edge are not consecutive.
std::optional<std::vector<Run>> runs_at(const CompInHost& ch, const RootedSpqr& rt, int mu, int s) {
  const FixedComponent& c = *ch.c;
  const auto& rot = c.rot[c.local_vertex(s)];
  const int len = static_cast<int>(rot.size());
  std::vector<int> eps(static_cast<size_t>(len));
  for (int j = 0; j < len; ++j) eps[j] = rt.edge_of(mu, ch.host_edge[rot[j]]);
  int start = 0;
  while (start < len && eps[start] == eps[(start + len - 1) % len]) ++start;
  SEFE_ASSERT(start < len, "spread component meets a skeleton vertex in one skeleton edge");
  std::vector<Run> out;
  for (int j = 0; j < len; ++j) {
    const int at = (start + j) % len;
    const auto [a, b] = c.edges[rot[at]];
    if (out.empty() || out.back().eps != eps[at]) out.push_back({eps[at], -1});
    out.back().last = a == s ? b : a;
  }
  std::vector<int> seen;
  for (const auto& r : out) seen.push_back(r.eps);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
  return out;
}

std::vector<int> run_edges(const std::vector<Run>& runs) {
  std::vector<int> out;
  for (const auto& r : runs) out.push_back(r.eps);
  return out;
}

}  // namespace

ComponentModel component_constraints(const Graph& host, const std::vector<FixedComponent>& comps) {
  check_edges_connected(host);
  ComponentModel m;
  const int k = static_cast<int>(comps.size());
  m.k = k;
  const int nv = k > 0 ? k * (k - 1) : 0;
  std::vector<int> face_count(static_cast<size_t>(nv));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) face_count[pos_var(k, i, j)] = comps[i].faces.count;
  m.sys = FaceSystem(face_count);
  m.det.assign(static_cast<size_t>(nv), Site{});

  std::vector<int> comp_of_vertex(static_cast<size_t>(host.num_vertices()), -1);
  std::vector<CompInHost> ch(static_cast<size_t>(k));
  std::vector<char> in_comp(static_cast<size_t>(host.num_edges()), 0);
  for (int i = 0; i < k; ++i) {
    const FixedComponent& c = comps[i];
    ch[i].c = &c;
    const bool k2 = c.vertices.size() == 2;
    if (!k2 && (c.vertices.size() < 3 || !is_biconnected(c.local)))
      fail(ErrorCode::UnsupportedComponent,
           "component at vertex " + std::to_string(c.vertices.front()) + " is neither biconnected nor a single edge");
    for (int v : c.vertices) {
      if (comp_of_vertex[v] >= 0) fail(ErrorCode::ConstraintViolation, "components are not disjoint");
      comp_of_vertex[v] = i;
    }
    for (auto [u, v] : c.edges) {
      const int e = host.find_edge(u, v);
      if (e < 0) fail(ErrorCode::ConstraintViolation, "component edge missing from host");
      ch[i].host_edge.push_back(e);
      in_comp[e] = 1;
    }
  }
  const BlockCutTree bc = block_cut_tree(host);
  const int nb = bc.num_blocks();
  if (nb == 0) return m;
  const RootedTree bct = root_bc_tree(bc, 0);
  std::vector<int> block_of(static_cast<size_t>(k));
  std::vector<std::vector<int>> in_block(static_cast<size_t>(nb));
  for (int i = 0; i < k; ++i) {
    block_of[i] = bc.edge_block[ch[i].host_edge[0]];
    in_block[block_of[i]].push_back(i);
  }
  auto set_det = [&](int var, const Site& s) {
    if (m.det[var].kind != Site::Kind::None)
      fail(ErrorCode::InternalInvariant, "relative position " + std::to_string(var) + " is determined twice");
    m.det[var] = s;
  };
  // a single edge has one face: its positions need no site
  auto multi = [&](int i) { return comps[i].faces.count > 1; };

  for (int b = 0; b < nb; ++b) {
    const auto& here = in_block[b];
    bool any = false;
    for (int i : here) any = any || multi(i);
    if (!any) continue;
    std::map<int, std::vector<int>> group;
    for (int d = 0; d < k; ++d) {
      if (block_of[d] == b) continue;
      const int c = step_toward(bct, b, block_of[d]);
      group[bc.cutvertices[c - nb]].push_back(d);
    }
    for (int c : here) {
      if (!multi(c)) continue;
      const FixedComponent& comp = comps[c];
      for (const auto& [w, ds] : group) {
        std::vector<int> vars;
        for (int d : ds) vars.push_back(pos_var(k, c, d));
        if (comp_of_vertex[w] != c) {
          add_chain(m.sys, vars);
          continue;
        }
        // cutvertex on c: any face of c at w, one face per cut component
        std::vector<int> at_w;
        for (int e : comp.local.incident(comp.local_vertex(w)))
          at_w.push_back(comp.left_face(comp.vertices[comp.local.other(e, comp.local_vertex(w))], w));
        std::map<int, std::vector<int>> by_key;
        const int cw = bc.cut_node(w);
        for (int d : ds) {
          const int key = step_toward(bct, cw, block_of[d]);
          const int var = pos_var(k, c, d);
          by_key[key].push_back(var);
          m.sys.restrict(var, at_w);
          set_det(var, Site{Site::Kind::Cutvertex, b, -1, w, key});
        }
        for (const auto& [key, vs] : by_key) add_chain(m.sys, vs);
      }
    }

    const SpqrTree t = build_spqr(host, bc.block_edges[b]);
    int root_edge = bc.block_edges[b][0];
    for (int e : bc.block_edges[b])
      if (!in_comp[e]) {
        root_edge = e;
        break;
      }
    const RootedSpqr rt = root_spqr(t, t.q_of(root_edge));
    std::vector<int> wv, w_edge;
    for (const auto& [w, ds] : group) {
      wv.push_back(w);
      int e0 = -1;
      for (int e : host.incident(w))
        if (bc.edge_block[e] == b) {
          e0 = e;
          break;
        }
      w_edge.push_back(e0);
    }

    const int nc = static_cast<int>(here.size());
    for (int mu = 0; mu < static_cast<int>(t.nodes.size()); ++mu) {
      const SpqrNode& node = t.nodes[mu];
      if (node.kind != NodeKind::P && node.kind != NodeKind::R) continue;
      const int ne = static_cast<int>(node.edges.size());
      // touched[j]: skeleton edges holding edges of here[j]
      std::vector<std::vector<char>> touched(static_cast<size_t>(nc), std::vector<char>(static_cast<size_t>(ne), 0));
      std::vector<int> spread(static_cast<size_t>(nc), 0), where(static_cast<size_t>(nc), -1);
      bool found = false;
      for (int j = 0; j < nc; ++j) {
        for (int e : ch[here[j]].host_edge) {
          const int i = rt.edge_of(mu, e);
          if (!touched[j][i]) ++spread[j];
          touched[j][i] = 1;
          where[j] = i;
        }
        found = found || (spread[j] >= 2 && multi(here[j]));
      }
      if (!found) continue;
      std::vector<int> w_eps(wv.size(), -1);
      for (size_t x = 0; x < wv.size(); ++x) {
        const int lv = node.local_vertex(wv[x]);
        if (lv < 0) {
          w_eps[x] = rt.edge_of(mu, w_edge[x]);
        } else {
          for (int i = 0; i < ne; ++i)
            if (node.edges[i].u == wv[x] || node.edges[i].v == wv[x]) {
              w_eps[x] = i;
              break;
            }
        }
      }
      // (variable, skeleton edge locating the second component) for the first component here[j]
      auto entries = [&](int j) {
        std::vector<std::pair<int, int>> out;
        const int c = here[j];
        for (int l = 0; l < nc; ++l)
          if (l != j && !(spread[l] == 1 && touched[j][where[l]])) out.push_back({pos_var(k, c, here[l]), where[l]});
        for (size_t x = 0; x < wv.size(); ++x) {
          if (comp_of_vertex[wv[x]] == c) continue;
          if (node.local_vertex(wv[x]) < 0 && touched[j][w_eps[x]]) continue;
          for (int d : group[wv[x]]) out.push_back({pos_var(k, c, d), w_eps[x]});
        }
        return out;
      };
      const Site site{Site::Kind::Node, b, mu, -1, -1};

      if (node.kind == NodeKind::P) {
        int j = -1;
        for (int l = 0; l < nc; ++l)
          if (spread[l] >= 2 && multi(here[l])) {
            SEFE_ASSERT(j < 0, "two components spread over one P-node");
            j = l;
          }
        const int c = here[j];
        const int s = node.vertices[0], tv = node.vertices[1];
        SEFE_ASSERT(comp_of_vertex[s] == c && comp_of_vertex[tv] == c, "spread component misses a P-node pole");
        const auto rs = runs_at(ch[c], rt, mu, s);
        const auto rtv = runs_at(ch[c], rt, mu, tv);
        if (!rs || !rtv) conflict(c, "edges of one parallel branch are not consecutive");
        auto back = run_edges(*rtv);
        std::reverse(back.begin(), back.end());
        if (!same_cyclic_order(run_edges(*rs), back)) conflict(c, "branch orders at the two poles do not match");
        std::vector<int> gaps;
        for (const auto& r : *rs) gaps.push_back(comps[c].left_face(r.last, s));
        std::map<int, std::vector<int>> per_eps;
        for (auto [var, eps] : entries(j)) per_eps[eps].push_back(var);
        for (const auto& [eps, vars] : per_eps) {
          for (int v : vars) {
            m.sys.restrict(v, gaps);
            set_det(v, site);
          }
          add_chain(m.sys, vars);
        }
        continue;
      }

      // R-node: try both orientations against every component spread over the skeleton
      const Graph sk = skeleton_graph(node);
      const RotationSystem ref = reference_rotation(node);
      const RotationSystem rots[2] = {ref, mirror(ref)};
      std::vector<int> spread_here;
      for (int j = 0; j < nc; ++j)
        if (spread[j] >= 2 && multi(here[j])) spread_here.push_back(j);
      bool ok[2] = {true, true};
      // per orientation and spread component: c's face for every skeleton edge off c
      std::vector<std::vector<int>> face_of[2];
      for (int o = 0; o < 2; ++o) {
        const Faces f = trace_faces(sk, rots[o]);
        for (int j : spread_here) {
          const int c = here[j];
          UnionFind uf(f.count);
          for (int i = 0; i < ne; ++i)
            if (!touched[j][i]) uf.unite(f.of_dart[2 * i], f.of_dart[2 * i + 1]);
          std::vector<int> region_face(static_cast<size_t>(f.count), -1);
          // every rotation must match before the corners can be read
          std::vector<std::pair<int, std::vector<Run>>> at;
          for (int lv = 0; lv < static_cast<int>(node.vertices.size()) && ok[o]; ++lv) {
            const int s = node.vertices[lv];
            if (comps[c].local_vertex(s) < 0) continue;
            auto runs = runs_at(ch[c], rt, mu, s);
            if (!runs) conflict(c, "edges of one skeleton edge are not consecutive");
            std::vector<int> seq;
            for (int i : rots[o][lv])
              if (touched[j][i]) seq.push_back(i);
            ok[o] = same_cyclic_order(seq, run_edges(*runs));
            at.push_back({lv, std::move(*runs)});
          }
          for (const auto& [lv, runs] : at) {
            if (!ok[o]) break;
            const int s = node.vertices[lv];
            for (const auto& r : runs) {
              const int into_s = dart_of(r.eps, sk.edge(r.eps).v != lv);
              const int reg = uf.find(f.of_dart[into_s]);
              const int cf = comps[c].left_face(r.last, s);
              SEFE_ASSERT(region_face[reg] < 0 || region_face[reg] == cf, "skeleton region meets two faces");
              region_face[reg] = cf;
            }
          }
          std::vector<int> per_edge(static_cast<size_t>(ne), -1);
          for (int i = 0; i < ne && ok[o]; ++i)
            if (!touched[j][i]) per_edge[i] = region_face[uf.find(f.of_dart[2 * i])];
          face_of[o].push_back(std::move(per_edge));
        }
      }
      if (!ok[0] && !ok[1]) conflict(here[spread_here[0]], "no orientation of a rigid skeleton keeps the embeddings");
      int group_id = -1;
      for (size_t q = 0; q < spread_here.size(); ++q) {
        for (auto [var, eps] : entries(spread_here[q])) {
          set_det(var, site);
          const int f0 = ok[0] ? face_of[0][q][eps] : -1;
          const int f1 = ok[1] ? face_of[1][q][eps] : -1;
          SEFE_ASSERT((!ok[0] || f0 >= 0) && (!ok[1] || f1 >= 0), "skeleton edge outside every face region");
          if (!ok[1] || f1 == f0) {
            m.sys.restrict(var, {f0});
          } else if (!ok[0]) {
            m.sys.restrict(var, {f1});
          } else {
            m.sys.restrict(var, {f0, f1});
            if (group_id < 0) {
              group_id = static_cast<int>(m.sys.groups.size());
              m.sys.groups.emplace_back();
            }
            m.sys.groups[group_id].push_back({var, f0, f1});
          }
        }
      }
    }
  }
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      if (c != d && multi(c) && m.det[pos_var(k, c, d)].kind == Site::Kind::None)
        fail(ErrorCode::InternalInvariant, "relative position " + std::to_string(pos_var(k, c, d)) + " has no determining site");
  return m;
}

namespace {

// Full system moved onto crucial variables: pos_c(x) = pos_c(rep(c, x)) holds in every embedding.
FaceSystem onto_crucial(const FaceSystem& full, int k, const CTree& t) {
  auto moved = [&](int c, int x) { return t.var(c, t.rep(c, x)); };
  FaceSystem out;
  out.num_vars = t.num_vars();
  for (int v = 0; v < t.num_vars(); ++v) {
    const auto [c, d] = t.var_pair(v);
    out.domain.push_back(full.domain[pos_var(k, c, d)]);
  }
  for (int c = 0; c < k; ++c)
    for (int x = 0; x < k; ++x)
      if (c != x) out.restrict(moved(c, x), full.domain[pos_var(k, c, x)]);
  auto pair_of = [&](int var) {
    const int c = var / std::max(k - 1, 1);
    const int j = var % std::max(k - 1, 1);
    return std::pair{c, j < c ? j : j + 1};
  };
  for (auto [a, b] : full.eq) {
    const auto [ca, xa] = pair_of(a);
    const auto [cb, xb] = pair_of(b);
    const int ma = moved(ca, xa), mb = moved(cb, xb);
    if (ma != mb) out.eq.push_back({ma, mb});
  }
  for (const auto& g : full.groups) {
    std::vector<PairEntry> moved_group;
    for (const auto& e : g) {
      const auto [c, x] = pair_of(e.var);
      moved_group.push_back({moved(c, x), e.face0, e.face1});
    }
    out.groups.push_back(std::move(moved_group));
  }
  return out;
}

}  // namespace

ComponentCcTree build_component_cctree(const Graph& host, const std::vector<FixedComponent>& comps) {
  const ComponentModel m = component_constraints(host, comps);
  std::vector<std::vector<int>> parts;
  for (const auto& c : comps) parts.push_back(c.vertices);
  ComponentCcTree out;
  out.tree = build_ctree(host, parts);
  out.sys = onto_crucial(m.sys, m.k, out.tree);
  return out;
}

ComponentCcTree intersect_component_cctrees(const ComponentCcTree& a, const ComponentCcTree& b) {
  if (a.tree.k != b.tree.k) fail(ErrorCode::CycleFamilyMismatch, "component trees over different component families");
  ComponentCcTree out{a.tree, a.sys};
  const CTree& t = out.tree;
  auto moved = [&](int v) {
    const auto [c, d] = b.tree.var_pair(v);
    return t.var(c, t.rep(c, d));
  };
  for (int v = 0; v < b.sys.num_vars; ++v) out.sys.restrict(moved(v), b.sys.domain[v]);
  for (auto [x, y] : b.sys.eq)
    if (moved(x) != moved(y)) out.sys.eq.push_back({moved(x), moved(y)});
  for (const auto& g : b.sys.groups) {
    std::vector<PairEntry> mg;
    for (const auto& e : g) mg.push_back({moved(e.var), e.face0, e.face1});
    out.sys.groups.push_back(std::move(mg));
  }
  for (const auto& p : common_face_pairs(a.tree, b.tree)) out.sys.eq.push_back(p);
  return out;
}

FacePositions expand_crucial_faces(const CTree& t, const std::vector<int>& crucial) {
  const int k = t.k;
  FacePositions out(static_cast<size_t>(k > 0 ? k * (k - 1) : 0), -1);
  for (int c = 0; c < k; ++c)
    for (int x = 0; x < k; ++x)
      if (c != x) out[pos_var(k, c, x)] = crucial[t.var(c, t.rep(c, x))];
  return out;
}

std::set<FacePositions> represented_face_set(const ComponentCcTree& t, std::size_t cap) {
  std::set<FacePositions> out;
  for (const auto& a : enumerate_face_models(t.sys, cap)) out.insert(expand_crucial_faces(t.tree, a));
  return out;
}

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

FixedDecision decide_sefe_fixed(const std::vector<Graph>& hosts, const std::vector<FixedComponent>& comps, Path path) {
  if (hosts.empty()) fail(ErrorCode::MalformedInput, "no graphs to decide");
  for (size_t i = 0; i < hosts.size(); ++i) require_connected(hosts[i], static_cast<int>(i));
  FixedDecision out;
  try {
    if (path == Path::Fast) {
      ComponentCcTree acc = build_component_cctree(hosts[0], comps);
      for (size_t i = 1; i < hosts.size(); ++i) acc = intersect_component_cctrees(acc, build_component_cctree(hosts[i], comps));
      const auto a = solve_faces(acc.sys);
      if (!a) return out;
      out.sefe = true;
      out.positions = expand_crucial_faces(acc.tree, *a);
      return out;
    }
    ComponentModel all = component_constraints(hosts[0], comps);
    for (size_t i = 1; i < hosts.size(); ++i) all.sys.merge(component_constraints(hosts[i], comps).sys);
    const auto a = solve_faces(all.sys);
    if (!a) return out;
    out.sefe = true;
    out.positions = *a;
  } catch (const SefeError& e) {
    if (e.code() != ErrorCode::EmbeddingConflict) throw;
  }
  return out;
}

FixedDecision decide_sefe_fixed(const SefeInstance& inst, Path path) {
  return decide_sefe_fixed(std::vector<Graph>{inst.hosts[0], inst.hosts[1]}, fixed_components(inst), path);
}

}  // namespace sefe
