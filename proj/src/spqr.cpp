#include "sefe/spqr.hpp"

#include <algorithm>
#include <list>
#include <sstream>

#include "sefe/connectivity.hpp"
#include "sefe/error.hpp"

namespace sefe {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::S: return "S";
    case NodeKind::P: return "P";
    case NodeKind::R: return "R";
    case NodeKind::Q: return "Q";
  }
  return "?";
}

int SpqrNode::local_vertex(int host_vertex) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), host_vertex);
  return (it != vertices.end() && *it == host_vertex) ? static_cast<int>(it - vertices.begin()) : -1;
}

namespace {

// Hopcroft-Tarjan path search with the Gutwenger-Mutzel corrections. Vertices
// and edges use local ids; edge ids >= num_real are virtual.
class TriconnectedComponents {
 public:
  enum class EType : std::uint8_t { Unseen, Tree, Frond, Removed };
  enum class CType : std::uint8_t { Bond, Polygon, Triconnected };
  using EdgeList = std::list<int>;
  using Pos = EdgeList::iterator;
  using HighList = std::list<int>;

  struct Comp {
    std::list<int> edges;
    CType type = CType::Polygon;
  };

  TriconnectedComponents(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), num_real_(static_cast<int>(edges.size())) {
    const size_t cap = 4 * edges.size() + 8;
    src_.reserve(cap);
    tgt_.reserve(cap);
    for (auto [u, v] : edges) new_edge(u, v);
    if (n_ <= 2) {
      Comp& c = new_comp(CType::Bond);
      for (int e = 0; e < num_real_; ++e) c.edges.push_back(e);
      return;
    }
    split_multi_edges();
    inc_.assign(static_cast<size_t>(n_), {});
    for (int e = 0; e < num_edges(); ++e)
      if (type_[e] != EType::Removed) {
        inc_[src_[e]].push_back(e);
        inc_[tgt_[e]].push_back(e);
      }
    dfs1();
    for (int e = 0; e < num_edges(); ++e) {
      if (type_[e] == EType::Removed) continue;
      const bool up = number_[tgt_[e]] - number_[src_[e]] > 0;
      if ((up && type_[e] == EType::Frond) || (!up && type_[e] == EType::Tree)) std::swap(src_[e], tgt_[e]);
    }
    build_acceptable_adj_struct();
    dfs2();
    ts_h_.assign(1, 0);
    ts_a_.assign(1, -1);  // start with EOS
    ts_b_.assign(1, 0);
    top_ = 0;
    path_search();
    Comp& last = new_comp(CType::Polygon);
    while (!estack_.empty()) {
      last.edges.push_back(estack_.back());
      estack_.pop_back();
    }
    last.type = last.edges.size() > 4 ? CType::Triconnected : CType::Polygon;
    assemble();
  }

  std::vector<Comp> comps;
  std::vector<int> src_, tgt_;
  int num_real() const { return num_real_; }

 private:
  int n_;
  int num_real_;
  std::vector<EType> type_;
  std::vector<char> start_;
  std::vector<Pos> in_adj_;
  std::vector<HighList::iterator> in_high_;
  std::vector<char> high_valid_;
  std::vector<std::vector<int>> inc_;
  std::vector<int> number_, lowpt1_, lowpt2_, father_, nd_, degree_, tree_arc_, newnum_, nodeat_;
  std::vector<EdgeList> adj_;
  std::vector<HighList> highpt_;
  std::vector<int> estack_;
  std::vector<int> ts_h_, ts_a_, ts_b_;
  int top_ = 0;
  int start_vertex_ = 0;

  int num_edges() const { return static_cast<int>(src_.size()); }

  int new_edge(int u, int v) {
    src_.push_back(u);
    tgt_.push_back(v);
    type_.push_back(EType::Unseen);
    start_.push_back(0);
    in_adj_.push_back(Pos{});
    in_high_.push_back(HighList::iterator{});
    high_valid_.push_back(0);
    return num_edges() - 1;
  }

  Comp& new_comp(CType t) {
    comps.push_back({{}, t});
    return comps.back();
  }

  void finish_tric_or_poly(Comp& c, int e) {
    c.edges.push_back(e);
    c.type = c.edges.size() >= 4 ? CType::Triconnected : CType::Polygon;
  }

  int high(int v) const { return highpt_[v].empty() ? 0 : highpt_[v].front(); }

  void del_high(int e) {
    if (!high_valid_[e]) return;
    highpt_[tgt_[e]].erase(in_high_[e]);
    high_valid_[e] = 0;
  }

  void ts_push(int h, int a, int b) {
    ++top_;
    if (static_cast<int>(ts_a_.size()) <= top_) {
      ts_h_.resize(static_cast<size_t>(top_) + 1);
      ts_a_.resize(static_cast<size_t>(top_) + 1);
      ts_b_.resize(static_cast<size_t>(top_) + 1);
    }
    ts_h_[top_] = h;
    ts_a_[top_] = a;
    ts_b_[top_] = b;
  }
  void ts_push_eos() { ts_push(0, -1, 0); }
  bool ts_not_eos() const { return ts_a_[top_] != -1; }

  void split_multi_edges() {
    std::vector<int> order(static_cast<size_t>(num_real_));
    for (int e = 0; e < num_real_; ++e) order[e] = e;
    auto key = [&](int e) { return std::minmax(src_[e], tgt_[e]); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    for (size_t i = 0; i < order.size();) {
      size_t j = i + 1;
      while (j < order.size() && key(order[j]) == key(order[i])) ++j;
      if (j - i >= 2) {
        const int e0 = order[i];
        const int rep = new_edge(src_[e0], tgt_[e0]);
        // new_edge may not reallocate comps; take the reference afterwards
        Comp& c = new_comp(CType::Bond);
        c.edges.push_back(rep);
        for (size_t t = i; t < j; ++t) {
          c.edges.push_back(order[t]);
          type_[order[t]] = EType::Removed;
        }
      }
      i = j;
    }
  }

  void dfs1() {
    number_.assign(static_cast<size_t>(n_), 0);
    lowpt1_.assign(static_cast<size_t>(n_), 0);
    lowpt2_.assign(static_cast<size_t>(n_), 0);
    father_.assign(static_cast<size_t>(n_), -1);
    nd_.assign(static_cast<size_t>(n_), 0);
    degree_.assign(static_cast<size_t>(n_), 0);
    tree_arc_.assign(static_cast<size_t>(n_), -1);
    int count = 0;
    auto visit = [&](int v, int u) {
      number_[v] = ++count;
      father_[v] = u;
      degree_[v] = static_cast<int>(inc_[v].size());
      lowpt1_[v] = lowpt2_[v] = number_[v];
      nd_[v] = 1;
    };
    std::vector<std::pair<int, int>> stack;
    visit(start_vertex_, -1);
    stack.push_back({start_vertex_, 0});
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < static_cast<int>(inc_[v].size())) {
        const int e = inc_[v][i++];
        if (type_[e] != EType::Unseen) continue;
        const int w = src_[e] == v ? tgt_[e] : src_[e];
        if (number_[w] == 0) {
          type_[e] = EType::Tree;
          tree_arc_[w] = e;
          visit(w, v);
          stack.push_back({w, 0});
        } else {
          type_[e] = EType::Frond;
          if (number_[w] < lowpt1_[v]) {
            lowpt2_[v] = lowpt1_[v];
            lowpt1_[v] = number_[w];
          } else if (number_[w] > lowpt1_[v]) {
            lowpt2_[v] = std::min(lowpt2_[v], number_[w]);
          }
        }
        continue;
      }
      const int w = v;
      stack.pop_back();
      if (stack.empty()) break;
      const int p = stack.back().first;
      if (lowpt1_[w] < lowpt1_[p]) {
        lowpt2_[p] = std::min(lowpt1_[p], lowpt2_[w]);
        lowpt1_[p] = lowpt1_[w];
      } else if (lowpt1_[w] == lowpt1_[p]) {
        lowpt2_[p] = std::min(lowpt2_[p], lowpt2_[w]);
      } else {
        lowpt2_[p] = std::min(lowpt2_[p], lowpt1_[w]);
      }
      nd_[p] += nd_[w];
    }
    if (count != n_) fail(ErrorCode::NotBiconnected, "graph is disconnected");
  }

  void build_acceptable_adj_struct() {
    const int max = 3 * n_ + 2;
    std::vector<std::vector<int>> bucket(static_cast<size_t>(max) + 1);
    for (int e = 0; e < num_edges(); ++e) {
      const EType t = type_[e];
      if (t == EType::Removed) continue;
      const int w = tgt_[e];
      const int phi = t == EType::Frond ? 3 * number_[w] + 1
                                        : (lowpt2_[w] < number_[src_[e]] ? 3 * lowpt1_[w] : 3 * lowpt1_[w] + 2);
      bucket[phi].push_back(e);
    }
    adj_.assign(static_cast<size_t>(n_), {});
    for (int i = 1; i <= max; ++i)
      for (int e : bucket[i]) {
        auto& l = adj_[src_[e]];
        l.push_back(e);
        in_adj_[e] = std::prev(l.end());
      }
  }

  void dfs2() {
    newnum_.assign(static_cast<size_t>(n_), 0);
    highpt_.assign(static_cast<size_t>(n_), {});
    int count = n_;
    bool new_path = true;
    struct Frame {
      int v;
      Pos it;
    };
    std::vector<Frame> stack;
    auto enter = [&](int v) {
      newnum_[v] = count - nd_[v] + 1;
      stack.push_back({v, adj_[v].begin()});
    };
    enter(start_vertex_);
    while (!stack.empty()) {
      const size_t fi = stack.size() - 1;
      const int v = stack[fi].v;
      if (stack[fi].it == adj_[v].end()) {
        stack.pop_back();
        if (!stack.empty()) --count;
        continue;
      }
      const int e = *stack[fi].it;
      ++stack[fi].it;
      const int w = tgt_[e];
      if (new_path) {
        new_path = false;
        start_[e] = 1;
      }
      if (type_[e] == EType::Tree) {
        enter(w);
      } else {
        highpt_[w].push_back(newnum_[v]);
        in_high_[e] = std::prev(highpt_[w].end());
        high_valid_[e] = 1;
        new_path = true;
      }
    }
    std::vector<int> old2new(static_cast<size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) old2new[number_[v]] = newnum_[v];
    nodeat_.assign(static_cast<size_t>(n_) + 1, -1);
    for (int v = 0; v < n_; ++v) {
      nodeat_[newnum_[v]] = v;
      lowpt1_[v] = old2new[lowpt1_[v]];
      lowpt2_[v] = old2new[lowpt2_[v]];
    }
  }

  struct PFrame {
    int v;
    Pos it, it_next;
    int outv;
    bool child_pending;
    int e;
  };

  void path_search() {
    std::vector<PFrame> frames;
    auto enter = [&](int v) {
      frames.push_back({v, adj_[v].begin(), adj_[v].end(), static_cast<int>(adj_[v].size()), false, -1});
    };
    enter(start_vertex_);
    while (!frames.empty()) {
      const size_t fi = frames.size() - 1;
      const int v = frames[fi].v;
      const int vnum = newnum_[v];
      if (frames[fi].child_pending) {
        frames[fi].child_pending = false;
        after_tree_arc(frames[fi]);
        frames[fi].it = frames[fi].it_next;
        continue;
      }
      if (frames[fi].it == adj_[v].end()) {
        frames.pop_back();
        continue;
      }
      frames[fi].it_next = std::next(frames[fi].it);
      const int e = *frames[fi].it;
      const int w = tgt_[e];
      const int wnum = newnum_[w];
      if (type_[e] == EType::Tree) {
        if (start_[e]) {
          int y = 0, b = 0;
          if (ts_a_[top_] > lowpt1_[w]) {
            do {
              y = std::max(y, ts_h_[top_]);
              b = ts_b_[top_--];
            } while (ts_a_[top_] > lowpt1_[w]);
            ts_push(y, lowpt1_[w], b);
          } else {
            ts_push(wnum + nd_[w] - 1, lowpt1_[w], vnum);
          }
          ts_push_eos();
        }
        frames[fi].child_pending = true;
        frames[fi].e = e;
        enter(w);
      } else {
        if (start_[e]) {
          int y = 0, b = 0;
          if (ts_a_[top_] > wnum) {
            do {
              y = std::max(y, ts_h_[top_]);
              b = ts_b_[top_--];
            } while (ts_a_[top_] > wnum);
            ts_push(y, wnum, b);
          } else {
            ts_push(vnum, wnum, vnum);
          }
        }
        estack_.push_back(e);
        frames[fi].it = frames[fi].it_next;
      }
    }
  }

  int pop_estack() {
    const int e = estack_.back();
    estack_.pop_back();
    return e;
  }

  void after_tree_arc(PFrame& f) {
    const int v = f.v;
    const int vnum = newnum_[v];
    const int e = f.e;
    const Pos it = f.it;
    int w = tgt_[e];
    int wnum = newnum_[w];
    EdgeList& adj = adj_[v];

    estack_.push_back(tree_arc_[w]);

    while (vnum != 1 && (ts_a_[top_] == vnum || (degree_[w] == 2 && newnum_[tgt_[adj_[w].front()]] > wnum))) {
      const int a = ts_a_[top_];
      const int b = ts_b_[top_];
      int e_virt = -1;
      int x = -1;
      if (a == vnum && father_[nodeat_[b]] == nodeat_[a]) {
        --top_;
        continue;
      }
      int e_ab = -1;
      if (degree_[w] == 2 && newnum_[tgt_[adj_[w].front()]] > wnum) {
        const int e1 = pop_estack();
        const int e2 = pop_estack();
        adj_[w].erase(in_adj_[e2]);
        x = tgt_[e2];
        e_virt = new_edge(v, x);
        --degree_[x];
        --degree_[v];
        SEFE_ASSERT(src_[e2] == w, "triconnectivity: unexpected edge orientation");
        Comp& c = new_comp(CType::Polygon);
        c.edges.push_back(e1);
        c.edges.push_back(e2);
        c.edges.push_back(e_virt);
        if (!estack_.empty()) {
          const int top = estack_.back();
          if (src_[top] == x && tgt_[top] == v) {
            e_ab = pop_estack();
            adj_[x].erase(in_adj_[e_ab]);
            del_high(e_ab);
          }
        }
      } else {
        const int h = ts_h_[top_--];
        std::list<int> collected;
        while (true) {
          const int xy = estack_.back();
          const int xs = src_[xy], ys = tgt_[xy];
          if (!(a <= newnum_[xs] && newnum_[xs] <= h && a <= newnum_[ys] && newnum_[ys] <= h)) break;
          if ((newnum_[xs] == a && newnum_[ys] == b) || (newnum_[ys] == a && newnum_[xs] == b)) {
            e_ab = pop_estack();
            adj_[src_[e_ab]].erase(in_adj_[e_ab]);
            del_high(e_ab);
          } else {
            const int eh = pop_estack();
            if (it != in_adj_[eh]) {
              adj_[src_[eh]].erase(in_adj_[eh]);
              del_high(eh);
            }
            collected.push_back(eh);
            --degree_[xs];
            --degree_[ys];
          }
        }
        e_virt = new_edge(nodeat_[a], nodeat_[b]);
        Comp& c = new_comp(CType::Polygon);
        c.edges = std::move(collected);
        finish_tric_or_poly(c, e_virt);
        x = nodeat_[b];
      }
      if (e_ab >= 0) {
        Comp& c = new_comp(CType::Bond);
        c.edges.push_back(e_ab);
        c.edges.push_back(e_virt);
        e_virt = new_edge(v, x);
        comps.back().edges.push_back(e_virt);
        --degree_[x];
        --degree_[v];
      }
      estack_.push_back(e_virt);
      *it = e_virt;
      in_adj_[e_virt] = it;
      ++degree_[x];
      ++degree_[v];
      father_[x] = v;
      tree_arc_[x] = e_virt;
      type_[e_virt] = EType::Tree;
      w = x;
      wnum = newnum_[w];
    }

    if (lowpt2_[w] >= vnum && lowpt1_[w] < vnum && (father_[v] != start_vertex_ || f.outv >= 2)) {
      std::list<int> collected;
      int x = 0, y = 0;
      while (!estack_.empty()) {
        const int xy = estack_.back();
        x = newnum_[src_[xy]];
        y = newnum_[tgt_[xy]];
        if (!((wnum <= x && x < wnum + nd_[w]) || (wnum <= y && y < wnum + nd_[w]))) break;
        collected.push_back(pop_estack());
        del_high(xy);
        --degree_[nodeat_[x]];
        --degree_[nodeat_[y]];
      }
      const int low = nodeat_[lowpt1_[w]];
      int e_virt = new_edge(v, low);
      {
        Comp& c = new_comp(CType::Polygon);
        c.edges = std::move(collected);
        finish_tric_or_poly(c, e_virt);
      }
      if ((x == vnum && y == lowpt1_[w]) || (y == vnum && x == lowpt1_[w])) {
        const int eh = pop_estack();
        if (in_adj_[eh] != it) adj_[src_[eh]].erase(in_adj_[eh]);
        const int e_new = new_edge(v, low);
        Comp& c = new_comp(CType::Bond);
        c.edges.push_back(eh);
        c.edges.push_back(e_virt);
        c.edges.push_back(e_new);
        e_virt = e_new;
        in_high_[e_virt] = in_high_[eh];
        high_valid_[e_virt] = high_valid_[eh];
        --degree_[v];
        --degree_[low];
      }
      if (low != father_[v]) {
        estack_.push_back(e_virt);
        *it = e_virt;
        in_adj_[e_virt] = it;
        if (!high_valid_[e_virt] && high(low) < vnum) {
          highpt_[low].push_front(vnum);
          in_high_[e_virt] = highpt_[low].begin();
          high_valid_[e_virt] = 1;
        }
        ++degree_[v];
        ++degree_[low];
      } else {
        adj.erase(it);
        const int e_new = new_edge(low, v);
        const int eh = tree_arc_[v];
        Comp& c = new_comp(CType::Bond);
        c.edges.push_back(e_virt);
        c.edges.push_back(e_new);
        c.edges.push_back(eh);
        tree_arc_[v] = e_new;
        type_[e_new] = EType::Tree;
        in_adj_[e_new] = in_adj_[eh];
        *in_adj_[eh] = e_new;
      }
    }

    if (start_[e]) {
      while (ts_not_eos()) --top_;
      --top_;
    }
    while (ts_not_eos() && ts_b_[top_] != vnum && high(v) > ts_h_[top_]) --top_;
    --f.outv;
  }

  void assemble() {
    const int m = num_edges();
    const int nc = static_cast<int>(comps.size());
    std::vector<int> comp1(static_cast<size_t>(m), -1), comp2(static_cast<size_t>(m), -1);
    std::vector<std::list<int>::iterator> item1(static_cast<size_t>(m)), item2(static_cast<size_t>(m));
    std::vector<char> visited(static_cast<size_t>(nc), 0);
    for (int i = 0; i < nc; ++i) {
      auto& l = comps[i].edges;
      for (auto it = l.begin(); it != l.end(); ++it) {
        const int e = *it;
        if (comp1[e] < 0) {
          comp1[e] = i;
          item1[e] = it;
        } else {
          comp2[e] = i;
          item2[e] = it;
        }
      }
    }
    for (int i = 0; i < nc; ++i) {
      Comp& c1 = comps[i];
      auto& l1 = c1.edges;
      visited[i] = 1;
      if (l1.empty()) continue;
      if (c1.type != CType::Polygon && c1.type != CType::Bond) continue;
      for (auto it = l1.begin(); it != l1.end();) {
        auto it_next = std::next(it);
        const int e = *it;
        if (e < num_real_) {
          it = it_next;
          continue;
        }
        int j = comp1[e];
        std::list<int>::iterator it2;
        if (visited[j]) {
          j = comp2[e];
          if (j < 0 || visited[j]) {
            it = it_next;
            continue;
          }
          it2 = item2[e];
        } else {
          it2 = item1[e];
        }
        Comp& c2 = comps[j];
        if (c2.type != c1.type) {
          it = it_next;
          continue;
        }
        visited[j] = 1;
        c2.edges.erase(it2);
        l1.splice(l1.end(), c2.edges);
        if (it_next == l1.end()) it_next = std::next(it);
        l1.erase(it);
        it = it_next;
      }
    }
  }
};

}  // namespace

SpqrTree build_spqr(const Graph& host, std::span<const int> edges) {
  if (edges.size() < 3) fail(ErrorCode::NotBiconnected, "SPQR-tree needs at least three edges");
  // local vertex ids
  std::vector<int> verts;
  for (int e : edges) {
    verts.push_back(host.edge(e).u);
    verts.push_back(host.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](int x) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()); };
  std::vector<std::pair<int, int>> local_edges;
  local_edges.reserve(edges.size());
  Graph lg(static_cast<int>(verts.size()));
  for (int e : edges) {
    local_edges.push_back({local(host.edge(e).u), local(host.edge(e).v)});
    if (local_edges.back().first == local_edges.back().second) fail(ErrorCode::NotBiconnected, "self-loop");
    lg.add_edge(local_edges.back().first, local_edges.back().second);
  }
  if (!is_biconnected(lg)) fail(ErrorCode::NotBiconnected, "subgraph is not biconnected");

  TriconnectedComponents tc(static_cast<int>(verts.size()), local_edges);

  SpqrTree t;
  t.block_edges.assign(edges.begin(), edges.end());
  t.q_index.reserve(edges.size());
  const int total_edges = static_cast<int>(tc.src_.size());
  std::vector<std::vector<std::pair<int, int>>> occurrence(static_cast<size_t>(total_edges));
  for (const auto& c : tc.comps) {
    if (c.edges.empty()) continue;
    const int id = static_cast<int>(t.nodes.size());
    t.nodes.emplace_back();
    t.nodes[id].kind = c.type == TriconnectedComponents::CType::Bond      ? NodeKind::P
                       : c.type == TriconnectedComponents::CType::Polygon ? NodeKind::S
                                                                          : NodeKind::R;
    for (int e : c.edges) {
      occurrence[e].push_back({id, static_cast<int>(t.nodes[id].edges.size())});
      SkelEdge se;
      se.u = verts[tc.src_[e]];
      se.v = verts[tc.tgt_[e]];
      t.nodes[id].edges.push_back(se);
    }
  }
  for (int e = 0; e < total_edges; ++e) {
    const auto& occ = occurrence[e];
    if (e < tc.num_real()) {
      SEFE_ASSERT(occ.size() == 1, "real edge must lie in exactly one component");
      const auto [node, idx] = occ[0];
      const int q = static_cast<int>(t.nodes.size());
      SpqrNode qn;
      qn.kind = NodeKind::Q;
      const SkelEdge base = t.nodes[node].edges[idx];
      const int host_edge = edges[static_cast<size_t>(e)];
      qn.edges.push_back({host.edge(host_edge).u, host.edge(host_edge).v, -1, -1, host_edge});
      qn.edges.push_back({base.u, base.v, node, idx, -1});
      qn.vertices = {std::min(base.u, base.v), std::max(base.u, base.v)};
      t.nodes.push_back(std::move(qn));
      t.nodes[node].edges[idx].twin_node = q;
      t.nodes[node].edges[idx].twin_edge = 1;
      t.q_index.emplace(host_edge, q);
    } else if (!occ.empty()) {
      SEFE_ASSERT(occ.size() == 2, "virtual edge must lie in exactly two components");
      auto [n1, i1] = occ[0];
      auto [n2, i2] = occ[1];
      t.nodes[n1].edges[i1].twin_node = n2;
      t.nodes[n1].edges[i1].twin_edge = i2;
      t.nodes[n2].edges[i2].twin_node = n1;
      t.nodes[n2].edges[i2].twin_edge = i1;
    }
  }
  for (auto& node : t.nodes) {
    if (node.kind == NodeKind::Q) continue;
    for (const auto& se : node.edges) {
      node.vertices.push_back(se.u);
      node.vertices.push_back(se.v);
    }
    std::sort(node.vertices.begin(), node.vertices.end());
    node.vertices.erase(std::unique(node.vertices.begin(), node.vertices.end()), node.vertices.end());
  }
  return t;
}

int SpqrTree::q_of(int host_edge) const {
  const auto it = q_index.find(host_edge);
  return it == q_index.end() ? -1 : it->second;
}

SpqrTree build_spqr(const Graph& g) {
  std::vector<int> all(static_cast<size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) all[e] = e;
  return build_spqr(g, all);
}

Graph skeleton_graph(const SpqrNode& node) {
  Graph g(static_cast<int>(node.vertices.size()));
  for (const auto& se : node.edges) g.add_edge(node.local_vertex(se.u), node.local_vertex(se.v));
  return g;
}

RotationSystem reference_rotation(const SpqrNode& node) {
  Graph g = skeleton_graph(node);
  auto rot = planar_embedding(g);
  if (!rot) fail(ErrorCode::NonPlanarInput, "skeleton is not planar");
  const auto& r = (*rot)[0];
  const int d = static_cast<int>(r.size());
  if (d >= 3) {
    auto key = [&](int e) { return std::make_pair(g.other(e, 0), e); };
    int p = 0;
    for (int i = 1; i < d; ++i)
      if (key(r[i]) < key(r[p])) p = i;
    if (key(r[(p + 1) % d]) > key(r[(p + d - 1) % d])) *rot = mirror(*rot);
  }
  return *rot;
}

RootedSpqr root_spqr(const SpqrTree& t, int root) {
  const int n = static_cast<int>(t.nodes.size());
  RootedSpqr rt;
  rt.tree = &t;
  std::vector<int> parent(static_cast<size_t>(n), -2);
  rt.parent_edge.assign(static_cast<size_t>(n), -1);
  parent[root] = -1;
  std::vector<int> queue{root};
  for (size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    const auto& es = t.nodes[x].edges;
    for (int j = 0; j < static_cast<int>(es.size()); ++j) {
      const int y = es[j].twin_node;
      if (y < 0 || parent[y] != -2) continue;
      parent[y] = x;
      rt.parent_edge[y] = es[j].twin_edge;
      queue.push_back(y);
    }
  }
  SEFE_ASSERT(static_cast<int>(queue.size()) == n, "SPQR-tree is disconnected");
  rt.shape = RootedTree(std::move(parent));
  return rt;
}

int RootedSpqr::edge_toward(int mu, int node) const {
  SEFE_ASSERT(mu != node, "edge_toward: same node");
  if (shape.is_ancestor(mu, node)) return edge_to_child(shape.child_toward(mu, node));
  return parent_edge[mu];
}

int RootedSpqr::edge_of(int mu, int host_edge) const {
  const int q = tree->q_of(host_edge);
  if (q < 0) fail(ErrorCode::CycleNotInBlock, "edge " + std::to_string(host_edge) + " is outside the block");
  if (q == mu) return 0;
  return edge_toward(mu, q);
}

int RootedSpqr::child_behind(int mu, int i) const {
  if (i == parent_edge[mu]) return -1;
  return tree->nodes[mu].edges[i].twin_node;
}

std::vector<int> expansion_edges(const SpqrTree& t, int mu, int i) {
  const SkelEdge& start = t.nodes[mu].edges[i];
  if (start.twin_node < 0) fail(ErrorCode::NotVirtual, "skeleton edge " + std::to_string(i) + " is real");
  std::vector<int> out;
  // (node, skeleton edge we entered through)
  std::vector<std::pair<int, int>> stack{{start.twin_node, start.twin_edge}};
  while (!stack.empty()) {
    auto [x, entered] = stack.back();
    stack.pop_back();
    const auto& es = t.nodes[x].edges;
    for (int j = 0; j < static_cast<int>(es.size()); ++j) {
      if (j == entered) continue;
      if (es[j].twin_node < 0)
        out.push_back(es[j].real_edge);
      else
        stack.push_back({es[j].twin_node, es[j].twin_edge});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleInSkeleton classify_cycle(const RootedSpqr& rt, int mu, const std::vector<int>& cycle_vertices,
                               const std::vector<int>& cycle_edges) {
  const int len = static_cast<int>(cycle_edges.size());
  std::vector<int> sk(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) sk[i] = rt.edge_of(mu, cycle_edges[i]);
  CycleInSkeleton out;
  int start = -1;
  for (int i = 0; i < len; ++i)
    if (sk[i] != sk[(i + len - 1) % len]) {
      start = i;
      break;
    }
  if (start < 0) {
    out.contracted_edge = sk[0];
    return out;
  }
  out.as_cycle = true;
  const auto& es = rt.tree->nodes[mu].edges;
  for (int k = 0; k < len; ++k) {
    const int i = (start + k) % len;
    if (k > 0 && sk[i] == sk[(i + len - 1) % len]) continue;
    out.kappa.push_back(sk[i]);
    const int entry = cycle_vertices[i];
    SEFE_ASSERT(entry == es[sk[i]].u || entry == es[sk[i]].v, "cycle enters a skeleton edge away from its poles");
    out.kappa_dir.push_back(entry == es[sk[i]].u ? 0 : 1);
  }
  return out;
}

std::string spqr_to_dot(const SpqrTree& t) {
  std::ostringstream out;
  out << "graph spqr {\n";
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i) {
    const auto& n = t.nodes[i];
    out << "  n" << i << " [label=\"" << node_kind_name(n.kind) << i << ":";
    if (n.kind == NodeKind::Q)
      out << " e" << n.edges[0].real_edge;
    else
      for (int v : n.vertices) out << " " << v;
    out << "\"];\n";
  }
  for (int i = 0; i < static_cast<int>(t.nodes.size()); ++i)
    for (const auto& se : t.nodes[i].edges)
      if (se.twin_node > i) out << "  n" << i << " -- n" << se.twin_node << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sefe
