#include "sefe/twosat.hpp"

#include <algorithm>

#include "sefe/error.hpp"
#include "sefe/union_find.hpp"

namespace sefe {

namespace {

int lit_node(Literal l) { return 2 * l.var + (l.value == Side::Right ? 1 : 0); }

struct ImplicationGraph {
  std::vector<std::vector<int>> out;

  explicit ImplicationGraph(const ConstraintSet& cs) : out(2 * static_cast<size_t>(cs.num_vars)) {
    auto clause = [&](int x, int y) {  // x or y, as literal nodes
      out[x ^ 1].push_back(y);
      out[y ^ 1].push_back(x);
    };
    for (const Constraint& c : cs.list) {
      SEFE_ASSERT(c.x.var >= 0 && c.x.var < cs.num_vars && c.y.var >= 0 && c.y.var < cs.num_vars,
                  "constraint variable out of range");
      const int a = 2 * c.x.var, b = 2 * c.y.var;
      switch (c.kind) {
        case RelKind::Eq:
          clause(a, b + 1);
          clause(a + 1, b);
          break;
        case RelKind::Neq:
          clause(a, b);
          clause(a + 1, b + 1);
          break;
        case RelKind::Fix:
          clause(lit_node(c.x), lit_node(c.x));
          break;
        case RelKind::Clause:
          clause(lit_node(c.x), lit_node(c.y));
          break;
      }
    }
  }
};

// Tarjan SCC; components are numbered in reverse topological order.
std::vector<int> scc(const std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0), comp(static_cast<size_t>(n), -1);
  std::vector<int> stack, call;
  std::vector<int> next(static_cast<size_t>(n), 0);
  std::vector<char> on(static_cast<size_t>(n), 0);
  int timer = 0, comps = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    call.push_back(s);
    index[s] = low[s] = timer++;
    stack.push_back(s);
    on[s] = 1;
    while (!call.empty()) {
      int v = call.back();
      if (next[v] < static_cast<int>(out[v].size())) {
        int w = out[v][next[v]++];
        if (index[w] < 0) {
          index[w] = low[w] = timer++;
          stack.push_back(w);
          on[w] = 1;
          call.push_back(w);
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
    }
  }
  return comp;
}

}  // namespace

bool satisfies(const ConstraintSet& cs, const Assignment& a) {
  if (static_cast<int>(a.size()) != cs.num_vars) return false;
  for (const Constraint& c : cs.list) {
    switch (c.kind) {
      case RelKind::Eq:
        if (a[c.x.var] != a[c.y.var]) return false;
        break;
      case RelKind::Neq:
        if (a[c.x.var] == a[c.y.var]) return false;
        break;
      case RelKind::Fix:
        if (a[c.x.var] != c.x.value) return false;
        break;
      case RelKind::Clause:
        if (a[c.x.var] != c.x.value && a[c.y.var] != c.y.value) return false;
        break;
    }
  }
  return true;
}

std::optional<Assignment> solve_2sat(const ConstraintSet& cs) {
  ImplicationGraph ig(cs);
  const auto comp = scc(ig.out);
  Assignment a(static_cast<size_t>(cs.num_vars), Side::Left);
  for (int v = 0; v < cs.num_vars; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    a[v] = comp[2 * v + 1] < comp[2 * v] ? Side::Right : Side::Left;
  }
  return a;
}

namespace {

// node 2v: v is Left, 2v+1: v is Right; Eq joins like values, Neq crosses them.
// Nodes 2n and 2n+1 are the Left and Right anchors.
UnionFind parity_classes(const ConstraintSet& cs) {
  UnionFind uf(2 * cs.num_vars + 2);
  const int left_anchor = 2 * cs.num_vars, right_anchor = left_anchor + 1;
  auto join = [&](int a, int b) {
    uf.unite(a, b);
    uf.unite(a ^ 1, b ^ 1);
  };
  for (const Constraint& c : cs.list) {
    switch (c.kind) {
      case RelKind::Eq:
        join(2 * c.x.var, 2 * c.y.var);
        break;
      case RelKind::Neq:
        join(2 * c.x.var, 2 * c.y.var + 1);
        break;
      case RelKind::Fix:
        join(2 * c.x.var, c.x.value == Side::Left ? left_anchor : right_anchor);
        break;
      case RelKind::Clause:
        fail(ErrorCode::InternalInvariant, "parity solver cannot handle clauses");
    }
  }
  return uf;
}

}  // namespace

std::optional<Assignment> solve_parity(const ConstraintSet& cs) {
  UnionFind uf = parity_classes(cs);
  const int left_anchor = 2 * cs.num_vars, right_anchor = left_anchor + 1;
  if (uf.same(left_anchor, right_anchor)) return std::nullopt;
  Assignment a(static_cast<size_t>(cs.num_vars), Side::Left);
  std::vector<int> chosen(2 * static_cast<size_t>(cs.num_vars) + 2, -1);  // root -> value of node 2v-class
  for (int v = 0; v < cs.num_vars; ++v) {
    if (uf.same(2 * v, 2 * v + 1)) return std::nullopt;
    const int r = uf.find(2 * v);
    if (uf.same(r, left_anchor)) {
      a[v] = Side::Left;
    } else if (uf.same(r, right_anchor)) {
      a[v] = Side::Right;
    } else {
      if (chosen[r] < 0) {
        chosen[r] = 0;  // class of "v is Left" literal made true
        chosen[uf.find(2 * v + 1)] = 1;
      }
      a[v] = chosen[r] == 0 ? Side::Left : Side::Right;
    }
  }
  return a;
}

std::optional<int> parity_free_classes(const ConstraintSet& cs) {
  UnionFind uf = parity_classes(cs);
  const int left_anchor = 2 * cs.num_vars, right_anchor = left_anchor + 1;
  if (uf.same(left_anchor, right_anchor)) return std::nullopt;
  std::vector<char> seen(2 * static_cast<size_t>(cs.num_vars) + 2, 0);
  int free = 0;
  for (int v = 0; v < cs.num_vars; ++v) {
    if (uf.same(2 * v, 2 * v + 1)) return std::nullopt;
    const int r = uf.find(2 * v);
    if (uf.same(r, left_anchor) || uf.same(r, right_anchor) || seen[r]) continue;
    seen[r] = 1;
    seen[uf.find(2 * v + 1)] = 1;
    ++free;
  }
  return free;
}

std::vector<Assignment> enumerate_models(const ConstraintSet& cs, std::size_t cap) {
  std::vector<Assignment> models;
  if (!solve_2sat(cs)) return models;
  ImplicationGraph ig(cs);
  const int n = cs.num_vars;
  // value per literal node: 1 true, 0 false, -1 unset
  std::vector<signed char> val(2 * static_cast<size_t>(n), -1);
  std::vector<int> trail;
  auto assign = [&](int lit) -> bool {  // propagate; false on conflict
    std::vector<int> queue{lit};
    for (size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      if (val[x] == 1) continue;
      if (val[x] == 0) return false;
      val[x] = 1;
      val[x ^ 1] = 0;
      trail.push_back(x);
      for (int y : ig.out[x]) queue.push_back(y);
    }
    return true;
  };
  auto undo = [&](size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      val[x] = val[x ^ 1] = -1;
    }
  };
  auto emit = [&]() {
    Assignment a(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) a[v] = val[2 * v + 1] == 1 ? Side::Right : Side::Left;
    models.push_back(std::move(a));
    if (models.size() > cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " models");
  };
  // residual formulas of a satisfiable 2-SAT instance stay satisfiable, so a
  // conflict-free propagation never leads into a dead end
  auto rec = [&](auto&& self, int var) -> void {
    while (var < n && val[2 * var] != -1) ++var;
    if (var == n) {
      emit();
      return;
    }
    for (int choice = 0; choice < 2; ++choice) {
      const size_t mark = trail.size();
      if (assign(2 * var + choice)) self(self, var + 1);
      undo(mark);
    }
  };
  rec(rec, 0);
  return models;
}

}  // namespace sefe
