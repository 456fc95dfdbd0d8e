#pragma once

// JSON documents for reports and failures. Field order is fixed so that
// repeated runs on the same input produce identical bytes.

#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "swlab/error.hpp"
#include "swlab/io/facet_format.hpp"
#include "swlab/pipeline.hpp"
#include "swlab/riemannian/probes.hpp"

namespace swlab::io {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;
inline constexpr const char* kToolName = "swlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// 64-bit FNV-1a of the text, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Hash of the canonical facet listing, independent of input formatting.
inline std::string input_hash(const SimplicialComplex& x) { return fnv1a_hex(to_facet_text(x)); }

inline Json header() {
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  return j;
}

inline Json report_json(const SWReport& r, const std::string& source, const std::string& hash, bool diagnostics) {
  Json j = header();
  j["status"] = r.consistent() ? "ok" : "inconsistent";
  j["input"] = {{"source", source}, {"hash", hash}};
  j["dim"] = r.dim;
  j["f_vector"] = r.f_vector;
  j["derived_f_vector"] = r.derived_f_vector;
  j["betti"] = r.betti;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o;
    o["degree"] = row.degree;
    o["all_ones_is_cocycle"] = row.all_ones_is_cocycle;
    o["ht_chain_is_cycle"] = row.ht_chain_is_cycle;
    o["class_nonzero"] = row.class_nonzero;
    o["oracle_nonzero"] = row.oracle_nonzero;
    if (row.matches_oracle)
      o["matches_oracle"] = *row.matches_oracle;
    else
      o["matches_oracle"] = nullptr;
    o["dual_cells"] = row.dual_cells;
    rows.push_back(o);
  }
  j["rows"] = rows;
  j["w0"] = {{"is_cocycle", r.w0.is_cocycle},
             {"is_unit", r.w0.is_unit},
             {"pd_is_subdivided_fundamental", r.w0.pd_is_subdivided_fundamental}};
  j["pairing_ok"] = r.pairing_ok;
  if (diagnostics) {
    Json d;
    d["k_level_cocycle"] = r.k_level_cocycle;
    d["timings_ms"] = {{"subdivision", r.timings.subdivision_ms},
                       {"homology", r.timings.homology_ms},
                       {"oracle", r.timings.oracle_ms},
                       {"rows", r.timings.rows_ms}};
    j["diagnostics"] = d;
  }
  return j;
}

inline Json error_json(const Error& e) {
  Json j = header();
  j["status"] = "error";
  j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) j["error"]["location"] = {{"line", p->line()}, {"column", p->column()}};
  return j;
}

inline Json probe_json(const std::string& probe, const std::string& model, const riemann::ProbeResult& r) {
  Json j = header();
  j["probe"] = probe;
  j["model"] = model;
  j["value"] = r.value;
  j["ratio"] = r.ratio;
  j["error_estimate"] = r.error_estimate;
  j["eps"] = r.eps;
  j["step"] = r.step;
  j["grid"] = r.grid;
  if (!r.ratios.empty()) {
    j["ratios"] = r.ratios;
    j["cochain"] = r.cochain;
  }
  return j;
}

inline Json gauss_bonnet_json(const std::string& model, const riemann::GaussBonnetResult& r) {
  Json j = header();
  j["probe"] = "gauss-bonnet";
  j["model"] = model;
  j["interior"] = r.interior;
  j["boundary"] = r.boundary;
  j["total"] = r.total;
  j["cochain"] = r.cochain;
  j["error_estimate"] = r.error_estimate;
  j["eps"] = r.eps;
  j["step"] = r.step;
  j["grid"] = r.grid;
  j["radial_nodes"] = r.radial_nodes;
  j["note"] = "total includes the boundary geodesic-curvature term";
  return j;
}

}  // namespace swlab::io
