#pragma once

// Verification reports and their serializations. Values are serialized as
// decimal strings (never binary floats) so reports are platform-stable;
// JSON output is one object per line, CSV carries the fixed header
// claim,params...,closed_form,oracle,backend,match,elapsed_ms.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qgauss/arith.hpp"
#include "qgauss/oracle.hpp"

namespace qgauss {

// One identity check: parameters, closed-form value, oracle value, backend
// and match flag. elapsed_ms is 0 unless timing capture was requested, so
// report streams stay byte-identical across runs and worker counts.
struct VerificationReport {
  std::string claim;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string closed_form;
  std::string oracle;
  Backend backend = Backend::exact;
  bool match = false;
  std::string tolerance;  // float backend only; empty otherwise
  std::string warning;    // e.g. backend fallback note; empty otherwise
  std::int64_t elapsed_ms = 0;
};

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Complex value as a CSV-safe decimal string: "re" or "re+imi" / "re-imi".
inline std::string format_complex(std::complex<double> v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string s = format_double(v.real());
  s += v.imag() < 0 ? "-" : "+";
  s += format_double(std::abs(v.imag()));
  s += "i";
  return s;
}

inline std::string backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

// Serialization for exact cyclotomic values: the canonical remainder mod
// Phi_L is unique, so equal values always print identically (integers as
// decimal strings, anything else as a float rendering of the remainder).
inline std::string exact_value_string(const Cyclo& v) {
  const std::vector<bigint> reduced = detail::reduced_coeffs(v);
  bool constant = true;
  for (std::size_t j = 1; j < reduced.size(); ++j) constant = constant && reduced[j] == 0;
  if (constant) return reduced.empty() ? std::string("0") : reduced[0].str();
  Cyclo canon(v.order());
  for (std::size_t j = 0; j < reduced.size(); ++j)
    if (reduced[j] != 0) canon.add_term(static_cast<std::int64_t>(j), reduced[j]);
  return format_complex(canon.eval_float().value);
}

inline std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  nlohmann::ordered_json params;
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["closed_form"] = r.closed_form;
  j["oracle"] = r.oracle;
  j["backend"] = backend_name(r.backend);
  j["match"] = r.match;
  if (!r.tolerance.empty()) j["tolerance"] = r.tolerance;
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

inline std::string csv_header(const VerificationReport& sample) {
  std::string s = "claim";
  for (const auto& [k, v] : sample.params) s += "," + k;
  s += ",closed_form,oracle,backend,match,elapsed_ms";
  return s;
}

inline std::string report_to_csv(const VerificationReport& r) {
  std::string s = r.claim;
  for (const auto& [k, v] : r.params) s += "," + std::to_string(v);
  s += "," + r.closed_form + "," + r.oracle + "," + backend_name(r.backend) + "," +
       (r.match ? "true" : "false") + "," + std::to_string(r.elapsed_ms);
  return s;
}

inline std::string report_to_text(const VerificationReport& r) {
  std::string params;
  for (const auto& [k, v] : r.params) {
    if (!params.empty()) params += " ";
    params += k + "=" + std::to_string(v);
  }
  std::string s = r.claim;
  if (s.size() < 16) s.resize(16, ' ');
  if (params.size() < 36) params.resize(36, ' ');
  std::string closed = r.closed_form;
  if (closed.size() < 22) closed.resize(22, ' ');
  std::string oracle = r.oracle;
  if (oracle.size() < 22) oracle.resize(22, ' ');
  s += " " + params + " closed=" + closed + " oracle=" + oracle + " " + backend_name(r.backend) +
       (r.match ? "  ok" : "  MISMATCH");
  if (!r.warning.empty()) s += "  [" + r.warning + "]";
  return s;
}

}  // namespace qgauss
