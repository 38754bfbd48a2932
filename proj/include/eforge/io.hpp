#pragma once

#include "eforge/arc.hpp"
#include "eforge/gates.hpp"
#include "eforge/oracle.hpp"
#include "eforge/synthesis.hpp"

#include <cstdint>
#include <string>

namespace eforge {

/// On-disk circuit document. Complex numbers serialize as [re, im] pairs,
/// matrices row-major, floats at 17 significant digits; serialization is
/// byte-stable and round-trips losslessly.
struct CircuitFile {
  std::string version = "1";
  GateSpec gate;
  std::int64_t uses = 0;
  std::vector<LocalLayer> locals;
  Vec4 product_input = Vec4::Zero();
};

CircuitFile circuit_file_from(const SynthesizedCircuit& c, const GateSpec& spec);

std::string format_double(double v);  // shortest form carrying 17 significant digits

std::string analysis_report_to_json(const AnalysisReport& r);
std::string circuit_file_to_json(const CircuitFile& c);
CircuitFile circuit_file_from_json(const std::string& text);  // throws ParseError

std::string verification_to_json(double output_concurrence, double omega_of_total, bool ok,
                                 const std::string& reason);
std::string oracle_result_to_json(const OracleResult& r, double analytic_ceiling, int k);
std::string error_to_json(const std::string& kind, const std::string& message);

/// GateSpec helpers shared by the CLI and the circuit file format.
std::string gate_spec_to_json(const GateSpec& spec);
GateSpec gate_spec_from_json_text(const std::string& text);  // throws ParseError

}  // namespace eforge
