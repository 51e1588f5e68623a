#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "schattenlab/diagnostics.hpp"
#include "schattenlab/operators.hpp"
#include "schattenlab/scenario.hpp"

namespace schattenlab {

// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& doc);

// Columns: scenario,function,resolution,quantity,p,q,r,d,measure,value,status,message.
// Unused parameters are left empty; values use 17 significant digits.
void write_report_csv(std::ostream& out, const NormReport& report);
nlohmann::json report_to_json(const NormReport& report, const ScenarioConfig& cfg);

// Columns: index,value.
void write_profile_csv(std::ostream& out, std::span<const double> values);

struct DiagnosticsRow {
  std::string diagnostic;
  std::string measure;
  DiagnosticSample sample;
};
// Columns: diagnostic,measure,center,r,R,value.
void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticsRow> rows);

// Long CSV (kind,row,col,value): entries in row-major order, then weights.
void write_operator_csv(std::ostream& out, const OperatorMatrix& T);
// Binary: magic "SLOP", uint32 version 1, uint64 n, n*n float64 entries in
// row-major order, n float64 weights; little-endian.
void write_operator_binary(std::ostream& out, const OperatorMatrix& T);
OperatorMatrix read_operator_binary(std::istream& in);

}  // namespace schattenlab
