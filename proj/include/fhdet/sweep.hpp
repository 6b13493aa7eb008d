#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fhdet/asymptotics.hpp"
#include "fhdet/relations.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

enum class SweepTarget { TOEPLITZ, HANKEL, TPH, CHI, PHI0 };
enum class Predictor { SZEGO, EHRHARDT, BASOR_TRACY, POLY, HANKEL, TPH };

struct SweepSpec {
  SweepTarget target = SweepTarget::TOEPLITZ;
  Predictor predictor = Predictor::EHRHARDT;
  std::vector<int> n_grid;          // strictly increasing
  TphVariant variant = TphVariant::PLUS;
  double fit_fraction = 0.5;        // top fraction of the grid used by the fit
  int threads = 0;                  // 0 = hardware default (FHDET_THREADS wins)
};

struct SweepRow {
  int n = 0;
  double exact_logmod = 0.0;
  double exact_phase = 0.0;
  double pred_logmod = 0.0;
  double pred_phase = 0.0;
  double ratio_minus_1 = 0.0;
  std::string status = "ok";
};

struct SweepTable {
  std::vector<SweepRow> rows;
  // least-squares slope of log|ratio-1| vs log n over the top fit_fraction
  std::optional<double> fit_slope;
  bool all_ok() const;
};

using SweepInput = std::variant<FHSymbol, HankelWeight>;

SweepTable run_sweep(const SweepSpec& spec, const SweepInput& input);

// CSV with the fixed header
//   n,exact_logmod,exact_phase,pred_logmod,pred_phase,ratio_minus_1,status
// and 17-significant-digit floats; parse() inverts emit() bit-exactly for
// finite values.
std::string emit_csv(const SweepTable& table);
SweepTable parse_csv(const std::string& text);
void emit_csv_file(const SweepTable& table, const std::string& path);

// Self-contained SVG: log-log scatter of |ratio-1| vs n with the fitted
// slope annotated. One <circle> marker per finite data row.
std::string emit_svg(const SweepTable& table);
void emit_svg_file(const SweepTable& table, const std::string& path);

}  // namespace fhdet
