#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "fhdet/sweep.hpp"

using namespace fhdet;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

FHSymbol basor_tracy_symbol() {
  return FHSymbol(SmoothPart(), {{0.0, {0.0, 0.0}, {0.5, 0.0}},
                                 {kPi, {0.0, 0.0}, {-0.5, 0.0}}});
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1))
    ++n;
  return n;
}
}  // namespace

TEST_CASE("trivial symbol sweeps give unit ratios") {
  SweepSpec spec;
  spec.target = SweepTarget::TOEPLITZ;
  spec.predictor = Predictor::EHRHARDT;
  spec.n_grid = {4, 8, 12, 16};
  SweepTable t = run_sweep(spec, FHSymbol(SmoothPart(), {}));
  REQUIRE(t.rows.size() == 4);
  for (const auto& r : t.rows) {
    CHECK(r.status == "ok");
    CHECK(r.ratio_minus_1 < 1e-12);
  }
}

TEST_CASE("jump-symbol sweep converges on the even grid") {
  SweepSpec spec;
  spec.target = SweepTarget::TOEPLITZ;
  spec.predictor = Predictor::BASOR_TRACY;
  for (int n = 10; n <= 60; n += 2) spec.n_grid.push_back(n);
  SweepTable t = run_sweep(spec, basor_tracy_symbol());
  CHECK(t.all_ok());
  double first = t.rows.front().ratio_minus_1;
  double last = t.rows.back().ratio_minus_1;
  CHECK(last < 0.05);
  CHECK(last < first);
}

TEST_CASE("smooth szego sweep has tiny residuals by n = 32") {
  SmoothPart v;
  v.set_coeff(1, Complex(0.5, 0.0));
  v.set_coeff(-1, Complex(0.5, 0.0));
  SweepSpec spec;
  spec.target = SweepTarget::TOEPLITZ;
  spec.predictor = Predictor::SZEGO;
  spec.n_grid = {8, 16, 24, 32};
  SweepTable t = run_sweep(spec, FHSymbol(v, {}));
  CHECK(t.all_ok());
  CHECK(t.rows.back().ratio_minus_1 < 1e-6);
}

TEST_CASE("error rows carry a status and do not abort the sweep") {
  // degenerate representation: the predictor refuses, the row reports it
  FHSymbol bad(SmoothPart(), {{0.0, {0.5, 0.0}, {1.5, 0.0}}});
  SweepSpec spec;
  spec.target = SweepTarget::TOEPLITZ;
  spec.predictor = Predictor::BASOR_TRACY;
  spec.n_grid = {4, 6};
  SweepTable t = run_sweep(spec, bad);
  REQUIRE(t.rows.size() == 2);
  CHECK(!t.all_ok());
  CHECK(t.rows[0].status == "degenerate_rep");
}

TEST_CASE("slope fit on a synthetic power law") {
  SweepTable t;
  for (int n : {8, 12, 16, 24, 32, 48, 64}) {
    SweepRow r;
    r.n = n;
    r.ratio_minus_1 = 3.7 * std::pow(double(n), -1.5);
    t.rows.push_back(r);
  }
  SweepSpec spec;
  spec.n_grid = {8, 12, 16, 24, 32, 48, 64};
  spec.fit_fraction = 0.5;
  // re-run the fit through run_sweep's helper by rebuilding a table: easier to
  // exercise emit/parse instead; the fit itself is tested via the real sweep
  // below
  SweepSpec jump_spec;
  jump_spec.target = SweepTarget::TOEPLITZ;
  jump_spec.predictor = Predictor::EHRHARDT;
  for (int n = 16; n <= 96; n += 8) jump_spec.n_grid.push_back(n);
  FHSymbol root(SmoothPart(), {{0.0, {0.5, 0.0}, {0.0, 0.0}}});
  SweepTable rt = run_sweep(jump_spec, root);
  REQUIRE(rt.fit_slope.has_value());
  CHECK(*rt.fit_slope > -1.4);
  CHECK(*rt.fit_slope < -0.6);
}

TEST_CASE("csv round trip is bit exact") {
  SweepSpec spec;
  spec.target = SweepTarget::TOEPLITZ;
  spec.predictor = Predictor::EHRHARDT;
  spec.n_grid = {5, 9};
  FHSymbol f(SmoothPart(), {{0.0, {0.3, 0.1}, {0.1, -0.2}}});
  SweepTable t = run_sweep(spec, f);
  std::string csv = emit_csv(t);
  SweepTable back = parse_csv(csv);
  REQUIRE(back.rows.size() == t.rows.size());
  for (size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(back.rows[i].n == t.rows[i].n);
    CHECK(back.rows[i].exact_logmod == t.rows[i].exact_logmod);
    CHECK(back.rows[i].exact_phase == t.rows[i].exact_phase);
    CHECK(back.rows[i].pred_logmod == t.rows[i].pred_logmod);
    CHECK(back.rows[i].pred_phase == t.rows[i].pred_phase);
    CHECK(back.rows[i].ratio_minus_1 == t.rows[i].ratio_minus_1);
    CHECK(back.rows[i].status == t.rows[i].status);
  }
}

TEST_CASE("empty table emits a header-only csv and an axes-only svg") {
  SweepTable empty;
  std::string csv = emit_csv(empty);
  CHECK(csv ==
        "n,exact_logmod,exact_phase,pred_logmod,pred_phase,ratio_minus_1,status\n");
  SweepTable parsed = parse_csv(csv);
  CHECK(parsed.rows.empty());
  std::string svg = emit_svg(empty);
  CHECK(count_occurrences(svg, "<circle") == 0);
  CHECK(count_occurrences(svg, "<line") == 2);
}

TEST_CASE("svg has one marker per finite row") {
  SweepTable t;
  for (int i = 0; i < 20; ++i) {
    SweepRow r;
    r.n = 4 + i;
    r.ratio_minus_1 = std::pow(0.9, i);
    t.rows.push_back(r);
  }
  t.fit_slope = -1.25;
  std::string svg = emit_svg(t);
  CHECK(count_occurrences(svg, "<circle") == 20);
  CHECK(svg.find("fitted slope") != std::string::npos);
  CHECK(svg.find("-1.25") != std::string::npos);
}
