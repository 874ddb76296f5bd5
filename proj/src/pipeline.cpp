#include "sefe/pipeline.hpp"

#include <string>

#include "sefe/error.hpp"
#include "sefe/fixed_embed.hpp"
#include "sefe/oracle.hpp"

namespace sefe {

const char* mode_name(Mode m) { return m == Mode::Cycles ? "cycles" : "fixed"; }

Mode detect_mode(const SefeInstance& inst) {
  if (!inst.rotation_lines.empty()) return Mode::Fixed;
  for (int v = 0; v < inst.common.num_vertices(); ++v)
    if (inst.common.degree(v) != 0 && inst.common.degree(v) != 2) return Mode::Fixed;
  return Mode::Cycles;
}

namespace {

std::vector<Graph> hosts_of(const ConnectedInstance& c) { return {c.instance.hosts[0], c.instance.hosts[1]}; }

void check(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::ConstraintViolation, "witness check failed: " + what);
}

}  // namespace

void verify_witness(const PartDecision& part, Mode mode, const std::array<RotationSystem, 2>& rot) {
  const SefeInstance& ci = part.conn.instance;
  for (int i = 0; i < 2; ++i) {
    const std::string g = "graph " + std::to_string(i + 1);
    check(is_rotation_of(ci.hosts[i], rot[i]), g + " rotation does not list its edges");
    check(is_sphere_embedding(ci.hosts[i], rot[i]), g + " rotation is not planar");
  }
  if (mode == Mode::Cycles) {
    const auto cycles = common_cycles(part.part.instance);
    check(extract_semi(ci.hosts[0], rot[0], cycles) == extract_semi(ci.hosts[1], rot[1], cycles),
          "relative positions of the cycles differ");
    return;
  }
  const auto comps = fixed_components(part.part.instance);
  for (int i = 0; i < 2; ++i)
    check(keeps_component_rotations(ci.hosts[i], rot[i], comps),
          "graph " + std::to_string(i + 1) + " changes a fixed rotation");
  check(extract_face_positions(ci.hosts[0], rot[0], comps) == extract_face_positions(ci.hosts[1], rot[1], comps),
        "face positions differ");
}

InstanceDecision decide_instance(const SefeInstance& inst, Path path, bool want_witness, std::size_t witness_cap) {
  InstanceDecision out;
  out.mode = detect_mode(inst);
  for (auto& part : split_union(inst)) {
    PartDecision pd;
    pd.conn = connect_instance(part.instance);
    pd.part = std::move(part);
    const auto hosts = hosts_of(pd.conn);
    if (out.mode == Mode::Cycles) {
      auto d = decide_sefe_cycles(hosts, common_cycles(pd.part.instance), path, want_witness);
      pd.sefe = d.sefe;
      if (d.sefe && want_witness) pd.witness = std::array<RotationSystem, 2>{d.witness.at(0), d.witness.at(1)};
    } else {
      const auto comps = fixed_components(pd.part.instance);
      const auto d = decide_sefe_fixed(hosts, comps, path);
      pd.sefe = d.sefe;
      if (d.sefe && want_witness) {
        std::array<RotationSystem, 2> w;
        for (int i = 0; i < 2; ++i) {
          auto r = find_fixed_embedding(hosts[i], comps, *d.positions, witness_cap);
          SEFE_ASSERT(r.has_value(), "decided positions are not realisable in graph " + std::to_string(i + 1));
          w[i] = std::move(*r);
        }
        pd.witness = std::move(w);
      }
    }
    if (pd.witness) verify_witness(pd, out.mode, *pd.witness);
    out.sefe = out.sefe && pd.sefe;
    out.parts.push_back(std::move(pd));
  }
  return out;
}

}  // namespace sefe
