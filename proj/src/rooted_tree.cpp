#include "sefe/rooted_tree.hpp"

#include <algorithm>
#include <bit>

#include "sefe/error.hpp"

namespace sefe {

RootedTree::RootedTree(std::vector<int> parent) : parent_(std::move(parent)) {
  const int n = size();
  children_.assign(static_cast<size_t>(n), {});
  for (int v = 0; v < n; ++v) {
    if (parent_[v] < 0) {
      SEFE_ASSERT(root_ < 0, "rooted tree has several roots");
      root_ = v;
    } else {
      children_[parent_[v]].push_back(v);
    }
  }
  depth_.assign(static_cast<size_t>(n), 0);
  tin_.assign(static_cast<size_t>(n), 0);
  tout_.assign(static_cast<size_t>(n), 0);
  first_.assign(static_cast<size_t>(n), 0);
  if (n == 0) return;
  SEFE_ASSERT(root_ >= 0, "rooted tree without root");
  order_.reserve(static_cast<size_t>(n));
  euler_.reserve(2 * static_cast<size_t>(n));
  // iterative DFS; stack holds (node, next child index)
  std::vector<std::pair<int, int>> stack{{root_, 0}};
  int timer = 0;
  tin_[root_] = timer++;
  order_.push_back(root_);
  first_[root_] = 0;
  euler_.push_back(root_);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < static_cast<int>(children_[v].size())) {
      int c = children_[v][i++];
      depth_[c] = depth_[v] + 1;
      tin_[c] = timer++;
      order_.push_back(c);
      first_[c] = static_cast<int>(euler_.size());
      euler_.push_back(c);
      stack.push_back({c, 0});
    } else {
      tout_[v] = timer;
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().first);
    }
  }
  SEFE_ASSERT(static_cast<int>(order_.size()) == n, "parent pointers do not form a tree");
  const int m = static_cast<int>(euler_.size());
  const int levels = std::bit_width(static_cast<unsigned>(m));
  sparse_.assign(static_cast<size_t>(levels), {});
  sparse_[0] = euler_;
  for (int j = 1; j < levels; ++j) {
    const int len = m - (1 << j) + 1;
    sparse_[j].resize(static_cast<size_t>(std::max(len, 0)));
    for (int i = 0; i < len; ++i) {
      int a = sparse_[j - 1][i], b = sparse_[j - 1][i + (1 << (j - 1))];
      sparse_[j][i] = depth_[a] <= depth_[b] ? a : b;
    }
  }
}

int RootedTree::lca(int a, int b) const {
  int l = first_[a], r = first_[b];
  if (l > r) std::swap(l, r);
  const int j = std::bit_width(static_cast<unsigned>(r - l + 1)) - 1;
  int x = sparse_[j][l], y = sparse_[j][r - (1 << j) + 1];
  return depth_[x] <= depth_[y] ? x : y;
}

int RootedTree::child_toward(int a, int d) const {
  const auto& ch = children_[a];
  // children are visited in list order, so their tin values increase
  auto it = std::upper_bound(ch.begin(), ch.end(), tin_[d], [&](int t, int c) { return t < tin_[c]; });
  SEFE_ASSERT(it != ch.begin(), "child_toward: not a descendant");
  int c = *(it - 1);
  SEFE_ASSERT(is_ancestor(c, d), "child_toward: not a descendant");
  return c;
}

}  // namespace sefe
