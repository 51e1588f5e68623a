#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "schattenlab/scenario.hpp"

using namespace schattenlab;
using nlohmann::json;

namespace {

json hilbert_doc() {
  return json::parse(R"({
    "name": "hilbert-line",
    "space": {"domain": {"kind": "interval"}, "resolutions": [64, 128]},
    "operator": {"kernel": "hilbert", "commutator_diagonal": "cell"},
    "functions": [
      {"kind": "polynomial", "id": "x", "coeffs": [0, 1]},
      {"kind": "constant", "id": "one", "value": 1.0}
    ],
    "quantities": [
      {"name": "schatten", "p": 2},
      {"name": "schatten", "p": 1, "q": "inf"},
      {"name": "besov_adhoc", "p": 2}
    ],
    "ratios": [["schatten_p2_q2", "besov_adhoc_p2_mu"]]
  })");
}

const NormRow* find(const NormReport& r, const std::string& fn, const std::string& res, const std::string& q) {
  for (const auto& row : r.rows)
    if (row.function == fn && row.resolution == res && row.quantity == q) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("configuration errors") {
  auto expect_error = [](const json& doc) { CHECK_THROWS_AS(parse_config(doc), ConfigError); };
  auto doc = hilbert_doc();
  doc["space"]["resolutions"] = json::array();
  expect_error(doc);

  doc = hilbert_doc();
  doc["space"]["resolutions"] = {1};
  expect_error(doc);

  doc = hilbert_doc();
  doc["quantities"][0]["name"] = "nonsense";
  expect_error(doc);

  doc = hilbert_doc();
  doc["operator"]["kernel"] = "none";
  expect_error(doc);   // schatten without an operator

  doc = hilbert_doc();
  doc["ratios"] = {{"schatten_p2_q2", "missing"}};
  expect_error(doc);

  doc = hilbert_doc();
  doc["family"] = {{"count", 3}};
  expect_error(doc);   // random family without a seed
  CHECK_NOTHROW(parse_config(doc, 5));

  doc = hilbert_doc();
  doc["functions"][1]["id"] = "x";
  expect_error(doc);

  doc = hilbert_doc();
  doc["space"]["domain"]["kind"] = "torus";
  expect_error(doc);

  doc = hilbert_doc();
  doc["functions"][0] = {{"kind", "bump_sum"}, {"centers", {{0.5}}}, {"heights", json::array()}};
  expect_error(doc);

  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("parsed configuration") {
  const auto cfg = parse_config(hilbert_doc());
  CHECK(cfg.name == "hilbert-line");
  REQUIRE(cfg.space.resolutions.size() == 2);
  CHECK(cfg.space.resolutions[1] == std::vector<std::size_t>{128});
  CHECK(cfg.op.kind == OperatorConfig::Kind::hilbert);
  CHECK(cfg.op.cell_diagonal);
  CHECK(cfg.quantities[1].label == "schatten_p1_qinf");
  CHECK(std::isinf(cfg.quantities[1].q));
  CHECK(resolution_label(std::vector<std::size_t>{16, 8}) == "16x8");
}

TEST_CASE("Hilbert commutator scenario") {
  const auto cfg = parse_config(hilbert_doc());
  std::vector<ProfileRecord> profiles;
  const auto report = run_scenario(cfg, &profiles);
  CHECK_FALSE(report.failed);
  CHECK(report.rows.size() == 2 * 2 * 3);
  for (const char* res : {"64", "128"}) {
    const auto* s2 = find(report, "x", res, "schatten_p2_q2");
    REQUIRE(s2);
    CHECK(s2->value == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-10));
    CHECK(find(report, "x", res, "schatten_p1_qinf")->value == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-10));
    CHECK(find(report, "one", res, "schatten_p2_q2")->value == 0.0);
    CHECK(find(report, "one", res, "besov_adhoc_p2_mu")->value == 0.0);
    CHECK(std::isnan(s2->r));
    CHECK(s2->measure.empty());
  }
  CHECK(profiles.size() == 4);

  REQUIRE(report.ratios.size() == 1);
  const auto& r = report.ratios[0];
  CHECK(r.count == 2);
  CHECK(r.skipped == 2);   // the constant has a zero denominator
  CHECK(r.band == doctest::Approx(r.max / r.min));

  // two resolutions: every (function, quantity) pair is classified
  CHECK(report.classifications.size() == 6);
  for (const auto& c : report.classifications)
    if (c.function == "one") CHECK(c.verdict == "stable");

  CHECK_THROWS_AS(refinement_study(cfg), ConfigError);
}

TEST_CASE("runs are deterministic") {
  auto doc = hilbert_doc();
  doc["family"] = {{"count", 4}};
  doc["quantities"] = json::parse(R"([{"name": "osc", "p": 2, "r": 1}, {"name": "hajlasz", "p": 2}])");
  doc.erase("ratios");
  doc["space"]["resolutions"] = {32};
  const auto a = run_scenario(parse_config(doc, 77));
  const auto b = run_scenario(parse_config(doc, 77));
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].value == b.rows[i].value);
  const auto c = run_scenario(parse_config(doc, 78));
  bool differs = false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) differs |= a.rows[i].value != c.rows[i].value;
  CHECK(differs);
}

TEST_CASE("scenario errors are reported as rows") {
  auto doc = hilbert_doc();
  doc["operator"] = {{"kernel", "bessel"}, {"lambda", 0.5}};
  doc.erase("ratios");
  const auto report = run_scenario(parse_config(doc));   // interval domain: no Bessel operator
  CHECK(report.failed);
  REQUIRE_FALSE(report.rows.empty());
  CHECK(report.rows.back().status == "error");
  CHECK_FALSE(report.rows.back().message.empty());
  CHECK(report.classifications.empty());
}

TEST_CASE("empty function family gives an empty report") {
  auto doc = hilbert_doc();
  doc["functions"] = json::array();
  doc.erase("ratios");
  const auto report = run_scenario(parse_config(doc));
  CHECK(report.rows.empty());
  CHECK_FALSE(report.failed);
}

TEST_CASE("refinement classification") {
  CHECK(classify(std::vector<double>{1.0, 1.2, 1.5}) == "growth");
  CHECK(classify(std::vector<double>{1.0, 1.05, 1.08}) == "stable");
  CHECK(classify(std::vector<double>{1.0, 1.2, 1.25}) == "inconclusive");
  CHECK(classify(std::vector<double>{0.0, 0.0, 0.0}) == "stable");
  CHECK(classify(std::vector<double>{1.0, 0.5, 1.0}) == "stable");
  CHECK(classify(std::vector<double>{}) == "inconclusive");
}

TEST_CASE("default diagnostics sample") {
  const auto s = build_grid_space(Domain::interval(0.0, 1.0), 64, WeightSpec::constant(), WeightSpec::constant());
  const auto d = default_diagnostics(s);
  CHECK(d.centers == std::vector<std::size_t>{0, 8, 16, 32});
  CHECK(d.radii.front() == doctest::Approx(4.0 / 64));
  CHECK(d.radii.back() <= 0.25 + 1e-12);
  CHECK(d.min_scale_ratio == 16.0);
}

TEST_CASE("test functions") {
  const auto fam = standard_family(10, 2, 3);
  CHECK(fam.size() == 10);
  const auto s = build_grid_space(Domain::square(0.0, 1.0), 8, WeightSpec::constant(), WeightSpec::constant());
  for (const auto& f : fam) {
    const auto v = sample(s, f);
    CHECK(*std::max_element(v.begin(), v.end()) > *std::min_element(v.begin(), v.end()));
    const auto back = function_from_json(to_json(f), 0);
    CHECK(sample(s, back) == v);
  }
  FunctionSpec p;
  p.kind = FunctionSpec::Kind::polynomial;
  p.coeffs = {1.0, 0.0, 2.0};
  const double x[] = {3.0};
  CHECK(p(x) == doctest::Approx(19.0));
}
