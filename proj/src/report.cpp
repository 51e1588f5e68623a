#include "schattenlab/report.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace schattenlab {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little, "binary export assumes a little-endian host");

namespace {

std::string num(double x) {
  if (std::isnan(x)) return "";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json jnum(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

// Quotes a CSV field when it contains a separator, quote or newline.
std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

template <class T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw std::runtime_error("truncated operator file");
  return v;
}

}  // namespace

std::string config_hash(const json& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_report_csv(std::ostream& out, const NormReport& report) {
  out << "scenario,function,resolution,quantity,p,q,r,d,measure,value,status,message\n";
  for (const auto& r : report.rows) {
    out << field(r.scenario) << ',' << field(r.function) << ',' << r.resolution << ',' << field(r.quantity) << ','
        << num(r.p) << ',' << num(r.q) << ',' << num(r.r) << ',' << num(r.d) << ',' << r.measure << ','
        << num(r.value) << ',' << r.status << ',' << field(r.message) << '\n';
  }
}

json report_to_json(const NormReport& report, const ScenarioConfig& cfg) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json j{{"scenario", r.scenario}, {"function", r.function}, {"resolution", r.resolution},
           {"quantity", r.quantity}, {"p", jnum(r.p)}, {"q", jnum(r.q)}, {"r", jnum(r.r)}, {"d", jnum(r.d)},
           {"measure", r.measure}, {"value", jnum(r.value)}, {"status", r.status}};
    if (!r.message.empty()) j["message"] = r.message;
    rows.push_back(std::move(j));
  }
  json ratios = json::array();
  for (const auto& s : report.ratios)
    ratios.push_back({{"numerator", s.numerator}, {"denominator", s.denominator}, {"min", jnum(s.min)},
                      {"max", jnum(s.max)}, {"band", jnum(s.band)}, {"count", s.count}, {"skipped", s.skipped}});
  json classes = json::array();
  for (const auto& c : report.classifications) {
    json values = json::array();
    for (double v : c.values) values.push_back(jnum(v));
    classes.push_back({{"function", c.function}, {"quantity", c.quantity}, {"values", values}, {"verdict", c.verdict}});
  }
  return {{"metadata",
           {{"version", kVersion},
            {"config_hash", config_hash(cfg.source)},
            {"scenario", cfg.name},
            {"seed", cfg.seed},
            {"classification",
             {{"growth_min_step", kGrowthStep}, {"stable_max_total_change", kStableTotal}}},
            {"status", report.failed ? "error" : "ok"}}},
          {"rows", rows},
          {"ratios", ratios},
          {"classifications", classes}};
}

void write_profile_csv(std::ostream& out, std::span<const double> values) {
  out << "index,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << num(values[i]) << '\n';
}

void write_diagnostics_csv(std::ostream& out, std::span<const DiagnosticsRow> rows) {
  out << "diagnostic,measure,center,r,R,value\n";
  for (const auto& r : rows)
    out << r.diagnostic << ',' << r.measure << ',' << r.sample.center << ',' << num(r.sample.r) << ','
        << num(r.sample.R) << ',' << num(r.sample.value) << '\n';
}

void write_operator_csv(std::ostream& out, const OperatorMatrix& T) {
  out << "kind,row,col,value\n";
  const auto n = T.entries.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out << "entry," << i << ',' << j << ',' << num(T.entries(i, j)) << '\n';
  for (Eigen::Index i = 0; i < n; ++i) out << "weight," << i << ",," << num(T.inner_weights(i)) << '\n';
}

void write_operator_binary(std::ostream& out, const OperatorMatrix& T) {
  out.write("SLOP", 4);
  put(out, std::uint32_t{1});
  const auto n = static_cast<std::uint64_t>(T.entries.rows());
  put(out, n);
  for (Eigen::Index i = 0; i < T.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < T.entries.cols(); ++j) put(out, T.entries(i, j));
  for (Eigen::Index i = 0; i < T.inner_weights.size(); ++i) put(out, T.inner_weights(i));
}

OperatorMatrix read_operator_binary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "SLOP", 4) != 0) throw std::runtime_error("not an operator file");
  if (get<std::uint32_t>(in) != 1) throw std::runtime_error("unsupported operator file version");
  const auto n = static_cast<Eigen::Index>(get<std::uint64_t>(in));
  OperatorMatrix T;
  T.entries.resize(n, n);
  T.inner_weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) T.entries(i, j) = get<double>(in);
  for (Eigen::Index i = 0; i < n; ++i) T.inner_weights(i) = get<double>(in);
  return T;
}

}  // namespace schattenlab
