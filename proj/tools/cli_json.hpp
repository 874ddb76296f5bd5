#pragma once

// JSON views of decisions, witnesses and CC-trees for the command-line tool.

#include <array>
#include <cstddef>
#include <string>

#include <json.hpp>

#include "sefe/cctree.hpp"
#include "sefe/fixed_embed.hpp"
#include "sefe/pipeline.hpp"

namespace sefe::cli {

using Json = nlohmann::ordered_json;

// rot[v] as the list of neighbours of v, one list per vertex.
Json rotation_json(const Graph& g, const RotationSystem& rot);
// Inverse of rotation_json; throws ConstraintViolation for a neighbour that is
// not adjacent or a list of the wrong length.
RotationSystem rotation_from_json(const Graph& g, const Json& j);

// Per part: original vertex ids, connector records and both rotations of the
// connected hosts. "graphs" repeats the rotations restricted to the original
// vertices, in original ids.
Json witness_json(const SefeInstance& inst, const InstanceDecision& d);
// Re-runs the split and the connector on `inst` and checks every part's
// rotations with verify_witness and the restricted rotations against them.
// Throws ConstraintViolation with the first failure.
void check_witness_json(const SefeInstance& inst, const Json& w);

Json constraints_json(const ConstraintSet& cs);
Json cctree_json(const CcTree& t, const std::vector<DirectedCycle>& cycles, std::size_t sample);
Json component_cctree_json(const ComponentCcTree& t, const std::vector<FixedComponent>& comps, std::size_t sample);

// log2 of the model count of a crucial system as JSON (null when unsatisfiable).
Json model_count_json(const ConstraintSet& cs, std::size_t cap);
Json model_count_json(const FaceSystem& sys, std::size_t cap);

std::string cctree_dot(const ComponentCcTree& t);

}  // namespace sefe::cli
