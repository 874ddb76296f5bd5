#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sefe/instance.hpp"

namespace sefe {

// Boolean variables take values in {Left, Right}; a literal asserts a value.
struct Literal {
  int var = -1;
  Side value = Side::Left;
};

enum class RelKind : std::uint8_t { Eq, Neq, Fix, Clause };

struct Constraint {
  RelKind kind = RelKind::Eq;
  Literal x;  // Fix uses x only; Eq/Neq compare x.var and y.var
  Literal y;
};

struct ConstraintSet {
  int num_vars = 0;
  std::vector<Constraint> list;

  ConstraintSet() = default;
  explicit ConstraintSet(int n) : num_vars(n) {}

  void add_eq(int a, int b) { list.push_back({RelKind::Eq, {a, Side::Left}, {b, Side::Left}}); }
  void add_neq(int a, int b) { list.push_back({RelKind::Neq, {a, Side::Left}, {b, Side::Left}}); }
  void add_fix(int a, Side s) { list.push_back({RelKind::Fix, {a, s}, {a, s}}); }
  // x or y
  void add_clause(Literal x, Literal y) { list.push_back({RelKind::Clause, x, y}); }
  void append(const ConstraintSet& other) { list.insert(list.end(), other.list.begin(), other.list.end()); }
};

using Assignment = std::vector<Side>;

bool satisfies(const ConstraintSet& cs, const Assignment& a);

// Implication graph and strongly connected components.
std::optional<Assignment> solve_2sat(const ConstraintSet& cs);

// Union-find with parity; handles Eq, Neq and Fix only.
std::optional<Assignment> solve_parity(const ConstraintSet& cs);
// log2 of the model count of an Eq/Neq/Fix system, nullopt when unsatisfiable.
std::optional<int> parity_free_classes(const ConstraintSet& cs);

// All models in lexicographic order (Left < Right, variable 0 most significant).
// Throws CapExceeded when there are more than `cap` models.
std::vector<Assignment> enumerate_models(const ConstraintSet& cs, std::size_t cap);

}  // namespace sefe
