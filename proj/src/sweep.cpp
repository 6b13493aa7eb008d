#include "fhdet/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "fhdet/exact_det.hpp"

namespace fhdet {

namespace {

int thread_count(int requested) {
  if (const char* env = std::getenv("FHDET_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

struct RowContext {
  const SweepSpec& spec;
  const SweepInput& input;
  // shared immutable precomputation
  CoeffWindow coeffs;
  std::optional<OPData> op;
};

SweepRow compute_row(const RowContext& ctx, int n) {
  SweepRow row;
  row.n = n;
  try {
    LogScaled exact, pred;
    switch (ctx.spec.target) {
      case SweepTarget::TOEPLITZ: {
        const FHSymbol& f = std::get<FHSymbol>(ctx.input);
        exact = toeplitz_logdet(ctx.coeffs, n);
        switch (ctx.spec.predictor) {
          case Predictor::SZEGO: pred = szego_asym(f.smooth(), n).value; break;
          case Predictor::EHRHARDT: pred = ehrhardt_asym(f, n).value; break;
          case Predictor::BASOR_TRACY: pred = basor_tracy_asym(f, n).value; break;
          default: throw Error("hypothesis", "predictor/target mismatch");
        }
        break;
      }
      case SweepTarget::HANKEL: {
        const HankelWeight& w = std::get<HankelWeight>(ctx.input);
        exact = route_hankel_via_toeplitz(w, n);
        pred = hankel_asym(w, n).value;
        break;
      }
      case SweepTarget::TPH: {
        const FHSymbol& f = std::get<FHSymbol>(ctx.input);
        exact = tph_logdet(ctx.coeffs, n, ctx.spec.variant);
        pred = tph_asym(f, n, ctx.spec.variant).value;
        break;
      }
      case SweepTarget::CHI: {
        const FHSymbol& f = std::get<FHSymbol>(ctx.input);
        exact = LogScaled::from_value(ctx.op->chi_sq(n - 1));
        pred = LogScaled::from_value(poly_asym(f, n).chi_sq_nm1);
        break;
      }
      case SweepTarget::PHI0: {
        const FHSymbol& f = std::get<FHSymbol>(ctx.input);
        exact = LogScaled::from_value(ctx.op->monic_phi0(n));
        pred = LogScaled::from_value(poly_asym(f, n).monic_phi0);
        break;
      }
    }
    row.exact_logmod = exact.is_zero() ? -INFINITY : exact.log_mod();
    row.exact_phase = exact.is_zero() ? 0.0 : exact.phase();
    row.pred_logmod = pred.is_zero() ? -INFINITY : pred.log_mod();
    row.pred_phase = pred.is_zero() ? 0.0 : pred.phase();
    if (exact.is_zero() && pred.is_zero())
      row.ratio_minus_1 = 0.0;
    else if (exact.is_zero() || pred.is_zero())
      row.ratio_minus_1 = INFINITY;
    else
      row.ratio_minus_1 = std::abs(exact.ratio(pred) - 1.0);
  } catch (const Error& e) {
    row.status = e.kind();
  }
  return row;
}

}  // namespace

bool SweepTable::all_ok() const {
  for (const auto& r : rows)
    if (r.status != "ok") return false;
  return true;
}

SweepTable run_sweep(const SweepSpec& spec, const SweepInput& input) {
  if (spec.n_grid.empty()) return SweepTable{};
  for (size_t i = 1; i < spec.n_grid.size(); ++i)
    if (spec.n_grid[i] <= spec.n_grid[i - 1])
      throw Error("hypothesis", "n grid must strictly increase");

  int nmax = spec.n_grid.back();
  RowContext ctx{spec, input, CoeffWindow(), std::nullopt};
  if (std::holds_alternative<FHSymbol>(input)) {
    const FHSymbol& f = std::get<FHSymbol>(input);
    int jmax = (spec.target == SweepTarget::TPH) ? 2 * nmax + 1 : nmax + 1;
    ctx.coeffs = CoeffWindow(fourier_coeffs(f, jmax));
    if (spec.target == SweepTarget::CHI || spec.target == SweepTarget::PHI0)
      ctx.op.emplace(ctx.coeffs, nmax);
  }

  SweepTable table;
  table.rows.resize(spec.n_grid.size());
  std::atomic<size_t> next{0};
  int workers = thread_count(spec.threads);
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= spec.n_grid.size()) return;
      table.rows[i] = compute_row(ctx, spec.n_grid[i]);
    }
  };
  if (workers <= 1 || spec.n_grid.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // slope of log|ratio-1| vs log n over the top fraction of the grid
  std::vector<std::pair<double, double>> pts;
  size_t first = size_t(std::floor(double(table.rows.size()) *
                                   (1.0 - spec.fit_fraction)));
  for (size_t i = first; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    if (r.status == "ok" && std::isfinite(r.ratio_minus_1) && r.ratio_minus_1 > 0.0)
      pts.push_back({std::log(double(r.n)), std::log(r.ratio_minus_1)});
  }
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double denom = pts.size() * sxx - sx * sx;
    if (denom != 0.0) table.fit_slope = (pts.size() * sxy - sx * sy) / denom;
  }
  return table;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

std::string emit_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "n,exact_logmod,exact_phase,pred_logmod,pred_phase,ratio_minus_1,status\n";
  for (const auto& r : table.rows)
    out << r.n << ',' << fmt17(r.exact_logmod) << ',' << fmt17(r.exact_phase)
        << ',' << fmt17(r.pred_logmod) << ',' << fmt17(r.pred_phase) << ','
        << fmt17(r.ratio_minus_1) << ',' << r.status << '\n';
  return out.str();
}

SweepTable parse_csv(const std::string& text) {
  SweepTable table;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "n,exact_logmod,exact_phase,pred_logmod,pred_phase,ratio_minus_1,status")
    throw Error("io", "bad CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    SweepRow r;
    std::getline(ls, field, ',');
    r.n = std::stoi(field);
    std::getline(ls, field, ',');
    r.exact_logmod = std::stod(field);
    std::getline(ls, field, ',');
    r.exact_phase = std::stod(field);
    std::getline(ls, field, ',');
    r.pred_logmod = std::stod(field);
    std::getline(ls, field, ',');
    r.pred_phase = std::stod(field);
    std::getline(ls, field, ',');
    r.ratio_minus_1 = std::stod(field);
    std::getline(ls, field, ',');
    r.status = field;
    table.rows.push_back(std::move(r));
  }
  return table;
}

void emit_csv_file(const SweepTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << emit_csv(table);
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

std::string emit_svg(const SweepTable& table) {
  const int W = 640, H = 480, ML = 70, MR = 20, MT = 30, MB = 50;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (W / 2) << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">n (log scale)</text>\n";
  out << "<text x=\"16\" y=\"" << (H / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << (H / 2) << ")\">|ratio - 1| (log scale)</text>\n";

  std::vector<std::pair<double, double>> pts;
  for (const auto& r : table.rows)
    if (r.status == "ok" && std::isfinite(r.ratio_minus_1) && r.ratio_minus_1 > 0.0)
      pts.push_back({std::log10(double(r.n)), std::log10(r.ratio_minus_1)});

  if (!pts.empty()) {
    double x0 = pts[0].first, x1 = pts[0].first;
    double y0 = pts[0].second, y1 = pts[0].second;
    for (auto [x, y] : pts) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    if (x1 - x0 < 1e-9) x1 = x0 + 1.0;
    if (y1 - y0 < 1e-9) y1 = y0 + 1.0;
    auto px = [&](double x) { return ML + (x - x0) / (x1 - x0) * (W - ML - MR); };
    auto py = [&](double y) {
      return (H - MB) - (y - y0) / (y1 - y0) * (H - MT - MB);
    };
    for (auto [x, y] : pts)
      out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
          << "\" r=\"3.5\" fill=\"#1f6fb2\"/>\n";
  }
  std::ostringstream slope;
  if (table.fit_slope)
    slope << "fitted slope " << *table.fit_slope;
  else
    slope << "fitted slope n/a";
  out << "<text x=\"" << (W - MR - 6) << "\" y=\"" << (MT + 6)
      << "\" text-anchor=\"end\" font-size=\"13\">" << slope.str()
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

void emit_svg_file(const SweepTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << emit_svg(table);
}

}  // namespace fhdet
