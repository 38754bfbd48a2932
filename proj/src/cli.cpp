#include "eforge/cli.hpp"

#include "eforge/arc.hpp"
#include "eforge/gates.hpp"
#include "eforge/io.hpp"
#include "eforge/magic.hpp"
#include "eforge/numeric.hpp"
#include "eforge/oracle.hpp"
#include "eforge/synthesis.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace eforge {

namespace {

constexpr double kPi = std::numbers::pi;

struct GateFlags {
  std::string name;
  std::vector<double> params;
  std::string matrix_path;
};

void add_gate_flags(CLI::App* cmd, GateFlags& g, const std::string& suffix = "") {
  cmd->add_option("--gate" + suffix, g.name, "catalog gate name");
  cmd->add_option("--param" + suffix, g.params, "gate parameter in radians (repeatable)");
  cmd->add_option("--matrix" + suffix, g.matrix_path, "path to a JSON 4x4 gate matrix");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GateSpec gate_spec_from_flags(const GateFlags& g) {
  if (!g.matrix_path.empty()) {
    if (!g.name.empty()) throw ParseError("give either --gate or --matrix, not both");
    return gate_spec_from_json_text(read_file(g.matrix_path));
  }
  if (g.name.empty()) throw ParseError("a gate is required (--gate or --matrix)");
  GateSpec spec;
  spec.name = g.name;
  spec.params = g.params;
  return spec;
}

int cmd_analyze(const GateFlags& flags, double unitary_tol, std::ostream& out) {
  const GateSpec spec = gate_spec_from_flags(flags);
  const Mat4 u = resolve_gate(spec, unitary_tol);
  out << analysis_report_to_json(analyze(u)) << "\n";
  return 0;
}

int cmd_synthesize(const GateFlags& flags, double unitary_tol, const std::string& out_path,
                   std::ostream& out) {
  const GateSpec spec = gate_spec_from_flags(flags);
  const Mat4 u = resolve_gate(spec, unitary_tol);
  const SynthesizedCircuit circuit = synthesize_perfect_entangler(u);
  const std::string text = circuit_file_to_json(circuit_file_from(circuit, spec)) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write file: " + out_path);
    f << text;
  }
  return 0;
}

int cmd_verify(const std::string& circuit_path, double unitary_tol, std::ostream& out) {
  const CircuitFile file = circuit_file_from_json(read_file(circuit_path));

  // Structural problems are verification failures, not crashes.
  std::string reason;
  if (file.uses < 1) {
    reason = "uses_must_be_positive";
  } else if (static_cast<std::int64_t>(file.locals.size()) != file.uses + 1) {
    reason = "layer_count_mismatch";
  }
  Mat4 gate = Mat4::Identity();
  if (reason.empty()) {
    try {
      gate = resolve_gate(file.gate, unitary_tol);
    } catch (const DomainError& e) {
      reason = e.kind();
    }
  }
  if (reason.empty()) {
    for (const LocalLayer& l : file.locals) {
      if (!check_unitary(l.a, unitary_tol) || !check_unitary(l.b, unitary_tol)) {
        reason = "local_layer_not_unitary";
        break;
      }
    }
  }
  if (reason.empty() && std::abs(file.product_input.squaredNorm() - 1.0) > 1e-8) {
    reason = "input_not_normalized";
  }
  if (!reason.empty()) {
    out << verification_to_json(0.0, 0.0, false, reason) << "\n";
    return 1;
  }

  SynthesizedCircuit circuit{file.locals, gate, file.uses,
                             TwoQubitState::normalized(file.product_input), 0.0};
  const CircuitCheck check = verify_circuit(circuit);
  std::string note;
  if (!check.ok) {
    note = check.output_concurrence < 1.0 - 1e-8 ? "output_not_maximally_entangled"
                                                 : "total_not_perfect_entangler";
  }
  out << verification_to_json(check.output_concurrence, check.omega_of_total.radians(), check.ok,
                              note)
      << "\n";
  return check.ok ? 0 : 1;
}

int cmd_bound(const GateFlags& u_flags, const GateFlags& v_flags, double unitary_tol,
              std::ostream& out) {
  const Mat4 u = resolve_gate(gate_spec_from_flags(u_flags), unitary_tol);
  const Mat4 v = resolve_gate(gate_spec_from_flags(v_flags), unitary_tol);
  out << simulation_lower_bound(u, v) << "\n";
  return 0;
}

int cmd_oracle(const GateFlags& flags, double unitary_tol, int k, std::uint64_t seed,
               int restarts, std::ostream& out) {
  const GateSpec spec = gate_spec_from_flags(flags);
  const Mat4 u = resolve_gate(spec, unitary_tol);
  OracleBudget budget;
  budget.seed = seed;
  budget.restarts = restarts;
  Vec4 zero = Vec4::Zero();
  zero(0) = 1.0;
  const TwoQubitState input{zero};
  const OracleResult r = max_concurrence_k_uses(u, k, input, budget);
  out << oracle_result_to_json(r, analytic_ceiling(u, k), k) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-qubit entangling-strength analysis and perfect-entangler synthesis"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  double unitary_tol = tol::unitary_api;
  app.add_option("--tol", unitary_tol, "unitarity tolerance for gate inputs")
      ->capture_default_str();

  GateFlags gate_flags;
  GateFlags gate_v_flags;
  std::string out_path;
  std::string circuit_path;
  int k = 1;
  std::uint64_t seed = 12345;
  int restarts = 32;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "canonical invariants and run count");
  add_gate_flags(analyze_cmd, gate_flags);

  CLI::App* synth_cmd = app.add_subcommand("synthesize", "build a perfect-entangler circuit");
  add_gate_flags(synth_cmd, gate_flags);
  synth_cmd->add_option("--out", out_path, "output circuit file (stdout when omitted)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a circuit file");
  verify_cmd->add_option("circuit", circuit_path, "circuit JSON file")->required();

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "lower bound on uses of U needed to simulate V");
  add_gate_flags(bound_cmd, gate_flags);
  add_gate_flags(bound_cmd, gate_v_flags, "-v");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force best concurrence with k uses");
  add_gate_flags(oracle_cmd, gate_flags);
  oracle_cmd->add_option("--k", k, "number of gate uses")->required();
  oracle_cmd->add_option("--seed", seed, "optimizer seed")->capture_default_str();
  oracle_cmd->add_option("--restarts", restarts, "optimizer restarts")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_to_json("parse_error", e.what()) << "\n";
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(gate_flags, unitary_tol, out);
    if (synth_cmd->parsed()) return cmd_synthesize(gate_flags, unitary_tol, out_path, out);
    if (verify_cmd->parsed()) return cmd_verify(circuit_path, unitary_tol, out);
    if (bound_cmd->parsed()) return cmd_bound(gate_flags, gate_v_flags, unitary_tol, out);
    if (oracle_cmd->parsed()) return cmd_oracle(gate_flags, unitary_tol, k, seed, restarts, out);
    err << error_to_json("parse_error", "no subcommand given") << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << error_to_json(e.kind(), e.what()) << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << error_to_json("internal_error", e.what()) << "\n";
    return 2;
  }
}

}  // namespace eforge
