#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_json.hpp"
#include "sefe/error.hpp"
#include "sefe/generate.hpp"
#include "sefe/oracle.hpp"

namespace {

using namespace sefe;
using cli::Json;

// Exit codes
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

Path parse_path(const std::string& s) { return s == "reference" ? Path::Reference : Path::Fast; }

void print(const Json& j) { std::cout << j.dump() << "\n"; }

// The union graph must be one component; returns it connected.
struct SinglePart {
  InstancePart part;
  ConnectedInstance conn;
};

SinglePart single_part(const SefeInstance& inst, const std::string& file) {
  auto parts = split_union(inst);
  if (parts.size() != 1)
    fail(ErrorCode::UnionDisconnected,
         file + ": the union graph has " + std::to_string(parts.size()) + " components with edges; decide splits them, this command needs one");
  SinglePart s;
  s.conn = connect_instance(parts[0].instance);
  s.part = std::move(parts[0]);
  return s;
}

// Cycle family in original vertex ids, for comparing files.
std::vector<DirectedCycle> original_cycles(const SinglePart& s) {
  std::vector<DirectedCycle> out;
  for (const auto& c : common_cycles(s.part.instance)) {
    std::vector<int> vs;
    for (int v : c.vertices) vs.push_back(s.part.vertex_of[v]);
    out.push_back(canonical_cycle(vs));
  }
  return out;
}

std::vector<std::pair<int, int>> original_component_edges(const SinglePart& s) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : fixed_components(s.part.instance))
    for (auto [a, b] : c.edges) out.push_back({s.part.vertex_of[a], s.part.vertex_of[b]});
  std::sort(out.begin(), out.end());
  return out;
}

int run_decide(const std::string& file, const std::string& path, bool witness, const std::string& witness_out) {
  const SefeInstance inst = load_instance(file);
  const auto d = decide_instance(inst, parse_path(path), witness, oracle_cap(50'000'000));
  std::cout << (d.sefe ? "YES" : "NO") << "\n";
  if (witness && d.sefe) {
    const Json w = cli::witness_json(inst, d);
    cli::check_witness_json(inst, w);
    if (witness_out.empty()) {
      print(w);
    } else {
      std::ofstream out(witness_out);
      if (!out) fail(ErrorCode::MalformedInput, "cannot write " + witness_out);
      out << w.dump() << "\n";
    }
  }
  return d.sefe ? kYes : kNo;
}

int run_cctree(const std::string& file, int graph, const std::string& format, std::size_t sample) {
  const SefeInstance inst = load_instance(file);
  const SinglePart s = single_part(inst, file);
  const Graph& host = s.conn.instance.hosts[graph - 1];
  if (detect_mode(inst) == Mode::Cycles) {
    const auto cycles = common_cycles(s.part.instance);
    const CcTree t = build_cctree(host, cycles);
    if (format == "dot") {
      std::cout << cctree_to_dot(t);
    } else {
      Json j{{"mode", "cycles"}, {"graph", graph}};
      j.update(cli::cctree_json(t, original_cycles(s), sample));
      print(j);
    }
    return kYes;
  }
  const auto comps = fixed_components(s.part.instance);
  const ComponentCcTree t = build_component_cctree(host, comps);
  if (format == "dot") {
    std::cout << cli::cctree_dot(t);
  } else {
    Json j{{"mode", "fixed"}, {"graph", graph}};
    j.update(cli::component_cctree_json(t, comps, sample));
    for (auto& c : j["components"])
      for (auto& v : c["vertices"]) v = s.part.vertex_of[v.get<int>()];
    print(j);
  }
  return kYes;
}

int run_intersect(const std::vector<std::string>& files, int only_graph) {
  std::vector<SinglePart> parts;
  std::vector<Mode> modes;
  for (const auto& f : files) {
    const SefeInstance inst = load_instance(f);
    modes.push_back(detect_mode(inst));
    parts.push_back(single_part(inst, f));
  }
  for (size_t i = 1; i < parts.size(); ++i) {
    const bool same = modes[i] == modes[0] && (modes[0] == Mode::Cycles
                                                   ? original_cycles(parts[i]) == original_cycles(parts[0])
                                                   : original_component_edges(parts[i]) == original_component_edges(parts[0]));
    if (!same) fail(ErrorCode::CycleFamilyMismatch, files[i] + " has another common family than " + files[0]);
  }
  std::vector<const Graph*> hosts;
  for (const auto& p : parts)
    for (int g = 1; g <= 2; ++g)
      if (only_graph == 0 || only_graph == g) hosts.push_back(&p.conn.instance.hosts[g - 1]);
  Json j{{"mode", mode_name(modes[0])}, {"graphs", hosts.size()}};
  bool sat = false;
  if (modes[0] == Mode::Cycles) {
    const auto cycles = common_cycles(parts[0].part.instance);
    CcTree acc = build_cctree(*hosts[0], cycles);
    for (size_t i = 1; i < hosts.size(); ++i) acc = intersect(acc, build_cctree(*hosts[i], cycles));
    j["k"] = acc.tree.k;
    j["models"] = cli::model_count_json(acc.cs, 0);
    sat = j["models"]["satisfiable"].get<bool>();
  } else {
    const auto comps = fixed_components(parts[0].part.instance);
    ComponentCcTree acc = build_component_cctree(*hosts[0], comps);
    for (size_t i = 1; i < hosts.size(); ++i) acc = intersect_component_cctrees(acc, build_component_cctree(*hosts[i], comps));
    j["k"] = acc.tree.k;
    j["models"] = cli::model_count_json(acc.sys, 1'000'000);
    sat = j["models"]["satisfiable"].get<bool>();
  }
  j["answer"] = sat ? "YES" : "NO";
  print(j);
  return sat ? kYes : kNo;
}

int run_gen(int n, int k, std::uint64_t seed, double density, const std::string& out) {
  const std::string text = format_instance(generate_cycle_instance(n, k, seed, density));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) fail(ErrorCode::MalformedInput, "cannot write " + out);
    f << text;
  }
  return kYes;
}

int run_oracle_check(const std::string& file, const std::string& witness_file, std::size_t cap) {
  const SefeInstance inst = load_instance(file);
  const Mode mode = detect_mode(inst);
  Json j{{"mode", mode_name(mode)}};
  bool oracle = true;
  for (const auto& part : split_union(inst))
    oracle = oracle && (mode == Mode::Cycles ? brute_force_sefe(part.instance, cap).sefe
                                             : brute_force_sefe_fixed(part.instance, cap).sefe);
  const bool decided = decide_instance(inst, Path::Fast, false, cap).sefe;
  j["oracle"] = oracle ? "YES" : "NO";
  j["decide"] = decided ? "YES" : "NO";
  j["agree"] = oracle == decided;
  bool witness_ok = true;
  if (!witness_file.empty()) {
    std::ifstream in(witness_file);
    if (!in) fail(ErrorCode::MalformedInput, "cannot open " + witness_file);
    const Json w = Json::parse(in);
    try {
      cli::check_witness_json(inst, w);
      j["witness"] = "valid";
    } catch (const SefeError& e) {
      if (e.code() != ErrorCode::ConstraintViolation) throw;
      j["witness"] = "invalid";
      j["reason"] = e.detail();
      witness_ok = false;
    }
  }
  print(j);
  if (oracle != decided) return kInternal;
  if (!witness_ok) return kNo;
  return oracle ? kYes : kNo;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_bench(const std::vector<int>& sizes, double cycle_share, std::uint64_t seed, int trials, bool reference) {
  Json rows = Json::array();
  std::cerr << "       n      k    build_s  intersect_s   c_build(ns)   c_inter(ns)" << (reference ? "     ref_s" : "")
            << "\n";
  for (int n : sizes) {
    const int k = std::max(2, static_cast<int>(cycle_share * n));
    const SefeInstance inst = generate_cycle_instance(n, k, seed + static_cast<std::uint64_t>(n));
    const auto cycles = common_cycles(inst);
    double build = 1e300, inter = 1e300, ref = 1e300;
    for (int t = 0; t < trials; ++t) {
      auto t0 = std::chrono::steady_clock::now();
      const CcTree a = build_cctree(inst.hosts[0], cycles);
      const CcTree b = build_cctree(inst.hosts[1], cycles);
      build = std::min(build, seconds_since(t0) / 2);
      t0 = std::chrono::steady_clock::now();
      const CcTree c = intersect(a, b);
      inter = std::min(inter, seconds_since(t0));
      if (reference) {
        t0 = std::chrono::steady_clock::now();
        const ReferenceModel m = build_reference(inst.hosts[0], cycles);
        ref = std::min(ref, seconds_since(t0));
      }
    }
    const double nlogn = n * std::log2(static_cast<double>(n));
    Json row{{"n", n}, {"k", k}, {"build_s", build}, {"intersect_s", inter}, {"c_build_ns", 1e9 * build / nlogn},
             {"c_intersect_ns", 1e9 * inter / nlogn}};
    if (reference) row["reference_s"] = ref;
    std::fprintf(stderr, "%8d %6d %10.4f %12.4f %13.2f %13.2f", n, k, build, inter, 1e9 * build / nlogn,
                 1e9 * inter / nlogn);
    if (reference) std::fprintf(stderr, " %9.3f", ref);
    std::fprintf(stderr, "\n");
    rows.push_back(std::move(row));
  }
  print(rows);
  return kYes;
}

void print_error(const std::string& code, const std::string& detail) {
  std::cout << Json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous embedding with fixed edges for disjoint-cycle and fixed-component common graphs"};
  app.require_subcommand(1);

  std::string file, path = "fast", witness_out, format = "json", witness_file;
  bool witness = false, reference = false;
  int graph = 1, only_graph = 0, n = 1000, k = 10, trials = 1;
  std::uint64_t seed = 1;
  double density = 0.3, cycle_share = 0.1;
  std::size_t sample = 0, cap = oracle_cap();
  std::vector<std::string> files;
  std::vector<int> sizes{1000, 10000, 100000};

  auto* decide = app.add_subcommand("decide", "Decide SEFE for an instance file; prints YES or NO");
  decide->add_option("file", file, "Instance file")->required()->check(CLI::ExistingFile);
  decide->add_option("--path", path, "Decision procedure")->check(CLI::IsMember({"fast", "reference"}));
  decide->add_flag("--witness", witness, "Print both rotation systems as JSON after checking them");
  decide->add_option("--witness-out", witness_out, "Write the witness JSON to this file instead");

  auto* cctree = app.add_subcommand("cctree", "Build the CC-tree of one graph");
  cctree->add_option("file", file, "Instance file")->required()->check(CLI::ExistingFile);
  cctree->add_option("--graph", graph, "Which graph")->check(CLI::IsMember({1, 2}));
  cctree->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  cctree->add_option("--sample", sample, "List up to this many models of the crucial positions");

  auto* inter = app.add_subcommand("intersect", "Intersect the CC-trees of every graph in the files, left to right");
  inter->add_option("files", files, "Instance files sharing the common graph")->required()->check(CLI::ExistingFile);
  inter->add_option("--graph", only_graph, "Take only this graph from each file (0: both)")
      ->check(CLI::IsMember({0, 1, 2}));

  auto* gen = app.add_subcommand("gen", "Random instance whose common graph is k disjoint triangles");
  gen->add_option("--n", n, "Vertices")->required();
  gen->add_option("--k", k, "Common triangles")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--density", density, "Chance of keeping a non-tree edge");
  gen->add_option("-o,--output", witness_out, "Output file (default: stdout)");

  auto* check = app.add_subcommand("oracle-check", "Compare the decision with brute-force enumeration");
  check->add_option("file", file, "Instance file")->required()->check(CLI::ExistingFile);
  check->add_option("--witness", witness_file, "Witness JSON from decide --witness to validate")
      ->check(CLI::ExistingFile);
  check->add_option("--cap", cap, "Enumeration cap (default SEFE_ORACLE_CAP or 5000000)");

  auto* bench = app.add_subcommand("bench", "Time CC-tree construction and intersection on generated instances");
  bench->add_option("--sizes", sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--cycle-share", cycle_share, "Common triangles per vertex");
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--trials", trials, "Repetitions per size (the minimum is reported)");
  bench->add_flag("--reference", reference, "Also time the quadratic reference construction of graph 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("UsageError", e.what());
    return kInputError;
  }

  try {
    if (*decide) return run_decide(file, path, witness, witness_out);
    if (*cctree) return run_cctree(file, graph, format, sample);
    if (*inter) return run_intersect(files, only_graph);
    if (*gen) return run_gen(n, k, seed, density, witness_out);
    if (*check) return run_oracle_check(file, witness_file, cap);
    if (*bench) return run_bench(sizes, cycle_share, seed, trials, reference);
  } catch (const SefeError& e) {
    print_error(std::string(error_name(e.code())), e.detail());
    return e.code() == ErrorCode::InternalInvariant ? kInternal : kInputError;
  } catch (const Json::exception& e) {
    print_error("MalformedJson", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return kInternal;
  }
  return kInternal;
}
