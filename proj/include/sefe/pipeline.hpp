#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "sefe/components.hpp"
#include "sefe/connector.hpp"
#include "sefe/cycle_sefe.hpp"
#include "sefe/embedding.hpp"

namespace sefe {

// Which decision procedure an instance goes to.
enum class Mode : std::uint8_t { Cycles, Fixed };
const char* mode_name(Mode m);

// Fixed when the file has rotation lines or the common graph is not a set of
// disjoint cycles; Cycles otherwise (including an empty common graph).
Mode detect_mode(const SefeInstance& inst);

// One component of the union graph, made connected. Vertex ids below
// conn.original_vertices are part vertices (part.vertex_of maps them back).
struct PartDecision {
  InstancePart part;
  ConnectedInstance conn;
  bool sefe = false;
  std::optional<std::array<RotationSystem, 2>> witness;  // rotations of conn.instance.hosts
};

struct InstanceDecision {
  Mode mode = Mode::Cycles;
  bool sefe = true;  // conjunction over parts
  std::vector<PartDecision> parts;
};

// Splits the union graph, connects every part and decides it. Cycle and
// component families come from the part itself, the hosts from its connected
// version. With want_witness every Yes part gets both rotations, checked by
// verify_witness before returning. Fixed-mode witnesses are searched by
// enumeration and throw CapExceeded beyond `witness_cap` candidate rotations.
InstanceDecision decide_instance(const SefeInstance& inst, Path path, bool want_witness,
                                 std::size_t witness_cap);

// Both rotations are sphere embeddings of the connected hosts and induce the
// same embedding of the common graph: equal semi-embeddings of the cycles, or
// the fixed component rotations and equal face positions. Throws
// ConstraintViolation naming the first failed check.
void verify_witness(const PartDecision& part, Mode mode, const std::array<RotationSystem, 2>& rot);

}  // namespace sefe
