#pragma once

#include <vector>

namespace sefe {

// Rooted tree given by parent pointers (root has -1). Children keep the order
// in which nodes are numbered. LCA via Euler tour and a sparse table.
class RootedTree {
 public:
  RootedTree() = default;
  explicit RootedTree(std::vector<int> parent);

  int size() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  // Vertices with parents before children.
  const std::vector<int>& preorder() const { return order_; }

  // Preorder index; the subtree of v occupies [tin(v), tout(v)).
  int tin(int v) const { return tin_[v]; }
  int tout(int v) const { return tout_[v]; }
  bool is_ancestor(int a, int b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }
  int lca(int a, int b) const;
  // Child of `a` whose subtree contains the proper descendant `d`.
  int child_toward(int a, int d) const;

 private:
  std::vector<int> parent_, depth_, tin_, tout_, first_;
  std::vector<std::vector<int>> children_;
  std::vector<int> order_, euler_;
  std::vector<std::vector<int>> sparse_;
  int root_ = -1;
};

}  // namespace sefe
