#include "eforge/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace eforge {

namespace {

using nlohmann::json;

void append_complex(std::string& s, const Complex& c) {
  s += '[';
  s += format_double(c.real());
  s += ',';
  s += format_double(c.imag());
  s += ']';
}

void append_mat2(std::string& s, const Mat2& m) {
  s += '[';
  for (int i = 0; i < 2; ++i) {
    if (i) s += ',';
    s += '[';
    for (int j = 0; j < 2; ++j) {
      if (j) s += ',';
      append_complex(s, m(i, j));
    }
    s += ']';
  }
  s += ']';
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("expected a complex number as [re, im]");
  }
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw ParseError("non-finite complex component");
  }
  return c;
}

Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a 2x2 matrix");
  Mat2 m;
  for (int i = 0; i < 2; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_array() || j[static_cast<std::size_t>(i)].size() != 2) {
      throw ParseError("expected a 2x2 matrix row");
    }
    for (int jj = 0; jj < 2; ++jj) {
      m(i, jj) = complex_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]);
    }
  }
  return m;
}

Mat4 mat4_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a 4x4 matrix");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4) throw ParseError("expected a 4x4 matrix row");
    for (int jj = 0; jj < 4; ++jj) {
      m(i, jj) = complex_from_json(row[static_cast<std::size_t>(jj)]);
    }
  }
  return m;
}

GateSpec gate_spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("gate spec must be a JSON object");
  GateSpec spec;
  if (j.contains("matrix")) {
    spec.matrix = mat4_from_json(j.at("matrix"));
    return spec;
  }
  if (!j.contains("name") || !j.at("name").is_string()) {
    throw ParseError("gate spec needs a \"name\" or a \"matrix\"");
  }
  spec.name = j.at("name").get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_array()) throw ParseError("gate params must be an array");
    for (const json& p : j.at("params")) {
      if (!p.is_number()) throw ParseError("gate params must be numbers");
      spec.params.push_back(p.get<double>());
    }
  }
  return spec;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // fold negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string gate_spec_to_json(const GateSpec& spec) {
  std::string s;
  if (spec.matrix) {
    s += "{\"matrix\":[";
    for (int i = 0; i < 4; ++i) {
      if (i) s += ',';
      s += '[';
      for (int j = 0; j < 4; ++j) {
        if (j) s += ',';
        append_complex(s, (*spec.matrix)(i, j));
      }
      s += ']';
    }
    s += "]}";
    return s;
  }
  s += "{\"name\":\"" + spec.name + "\",\"params\":[";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) s += ',';
    s += format_double(spec.params[i]);
  }
  s += "]}";
  return s;
}

GateSpec gate_spec_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  // A bare 4x4 array is accepted as a matrix spec.
  if (j.is_array()) {
    GateSpec spec;
    spec.matrix = mat4_from_json(j);
    return spec;
  }
  return gate_spec_from_json(j);
}

std::string analysis_report_to_json(const AnalysisReport& r) {
  std::string s = "{\"omega_radians\":" + format_double(r.omega.radians());
  if (r.n_runs) {
    s += ",\"n_runs\":" + std::to_string(*r.n_runs);
  } else {
    s += ",\"n_runs\":null,\"reason\":\"not_entangling\"";
  }
  s += ",\"is_perfect_entangler\":";
  s += r.perfect_entangler ? "true" : "false";
  s += ",\"alphas\":[";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ',';
    s += format_double(r.canonical.alphas[static_cast<std::size_t>(i)]);
  }
  s += "],\"lambdas\":[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += format_double(r.canonical.lambdas[static_cast<std::size_t>(i)]);
  }
  s += "]}";
  return s;
}

CircuitFile circuit_file_from(const SynthesizedCircuit& c, const GateSpec& spec) {
  CircuitFile f;
  f.gate = spec;
  f.uses = c.uses;
  f.locals = c.locals;
  f.product_input = c.product_input.amps();
  return f;
}

std::string circuit_file_to_json(const CircuitFile& c) {
  std::string s = "{\"version\":\"" + c.version + "\",";
  s += "\"gate\":" + gate_spec_to_json(c.gate) + ",";
  s += "\"uses\":" + std::to_string(c.uses) + ",";
  s += "\"locals\":[";
  for (std::size_t i = 0; i < c.locals.size(); ++i) {
    if (i) s += ',';
    s += "{\"a\":";
    append_mat2(s, c.locals[i].a);
    s += ",\"b\":";
    append_mat2(s, c.locals[i].b);
    s += '}';
  }
  s += "],\"product_input\":[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    append_complex(s, c.product_input(i));
  }
  s += "]}";
  return s;
}

CircuitFile circuit_file_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("circuit file must be a JSON object");
  CircuitFile f;
  try {
    f.version = j.at("version").get<std::string>();
    f.gate = gate_spec_from_json(j.at("gate"));
    if (!j.at("uses").is_number_integer()) throw ParseError("\"uses\" must be an integer");
    f.uses = j.at("uses").get<std::int64_t>();
    const json& locals = j.at("locals");
    if (!locals.is_array()) throw ParseError("\"locals\" must be an array");
    for (const json& layer : locals) {
      if (!layer.is_object() || !layer.contains("a") || !layer.contains("b")) {
        throw ParseError("local layer needs \"a\" and \"b\"");
      }
      f.locals.push_back({mat2_from_json(layer.at("a")), mat2_from_json(layer.at("b"))});
    }
    const json& input = j.at("product_input");
    if (!input.is_array() || input.size() != 4) {
      throw ParseError("\"product_input\" must hold 4 amplitudes");
    }
    for (int i = 0; i < 4; ++i) {
      f.product_input(i) = complex_from_json(input[static_cast<std::size_t>(i)]);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed circuit file: ") + e.what());
  }
  return f;
}

std::string verification_to_json(double output_concurrence, double omega_of_total, bool ok,
                                 const std::string& reason) {
  std::string s = "{\"output_concurrence\":" + format_double(output_concurrence);
  s += ",\"omega_of_total\":" + format_double(omega_of_total);
  s += ",\"ok\":";
  s += ok ? "true" : "false";
  if (!reason.empty()) s += ",\"reason\":\"" + reason + "\"";
  s += "}";
  return s;
}

std::string oracle_result_to_json(const OracleResult& r, double ceiling, int k) {
  std::string s = "{\"best_concurrence\":" + format_double(r.best_concurrence);
  s += ",\"analytic_ceiling\":" + format_double(ceiling);
  s += ",\"k\":" + std::to_string(k);
  s += ",\"seed\":" + std::to_string(r.seed);
  s += ",\"restarts\":" + std::to_string(r.restarts);
  s += ",\"converged\":";
  s += r.converged ? "true" : "false";
  s += ",\"best_params\":[";
  for (std::size_t i = 0; i < r.best_params.angles.size(); ++i) {
    if (i) s += ',';
    s += format_double(r.best_params.angles[i]);
  }
  s += "]}";
  return s;
}

std::string error_to_json(const std::string& kind, const std::string& message) {
  const json msg = message;  // escape via nlohmann
  return "{\"error\":\"" + kind + "\",\"message\":" + msg.dump() + "}";
}

}  // namespace eforge
