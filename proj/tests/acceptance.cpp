// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/LU>

#include "fhdet/asymptotics.hpp"
#include "fhdet/corpus.hpp"
#include "fhdet/exact_det.hpp"
#include "fhdet/relations.hpp"
#include "fhdet/special_functions.hpp"
#include "fhdet/sweep.hpp"

using namespace fhdet;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex I(0.0, 1.0);

int g_failures = 0;

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

FHSymbol basor_tracy_symbol() {
  return FHSymbol(SmoothPart(), {{0.0, {0.0, 0.0}, {0.5, 0.0}},
                                 {kPi, {0.0, 0.0}, {-0.5, 0.0}}});
}

// ---- criterion 1: piecewise-constant jump symbol reproduction ----
bool criterion_basor_tracy(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  // exact coefficients: f_j = -2/(pi j) for odd j, else 0
  int jmax = 61;
  VectorXc c = VectorXc::Zero(2 * jmax + 1);
  for (int j = -jmax; j <= jmax; ++j)
    if (j % 2 != 0) c[j + jmax] = Complex(-2.0 / (kPi * j), 0.0);
  CoeffWindow coeffs(std::move(c));

  LogScaled d2 = toeplitz_logdet(coeffs, 2);
  bool spot = std::abs(d2.value() - 4.0 / (kPi * kPi)) < 1e-12;

  FHSymbol f = basor_tracy_symbol();
  std::vector<double> ratios;
  for (int n = 10; n <= 60; n += 2) {
    LogScaled exact = toeplitz_logdet(coeffs, n);
    AsymptoticResult pred = basor_tracy_asym(f, n);
    ratios.push_back(std::abs(exact.ratio(pred.value) - 1.0));
  }
  bool decreasing = true;
  for (size_t i = 1; i < ratios.size(); ++i)
    if (ratios[i] > ratios[i - 1] * 1.02) decreasing = false;
  bool final_ok = ratios.back() < 0.05;
  double dt = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "spot D_2 %s; |ratio-1| %.2e -> %.2e (monotone %s); %.2fs",
                spot ? "ok" : "BAD", ratios.front(), ratios.back(),
                decreasing ? "yes" : "NO", dt);
  detail = buf;
  return spot && decreasing && final_ok && dt < 5.0;
}

// ---- criterion 2: strong szego limit ----
bool criterion_szego(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SmoothPart v;
  v.set_coeff(1, Complex(0.5, 0.0));
  v.set_coeff(-1, Complex(0.5, 0.0));
  FHSymbol f(v, {});
  CoeffWindow coeffs(fourier_coeffs(f, 33));
  LogScaled d32 = toeplitz_logdet(coeffs, 32);
  double dev = std::abs(d32.value() / std::exp(0.25) - 1.0);
  double dt = seconds_since(t0);
  char buf[120];
  std::snprintf(buf, sizeof buf, "|D_32/e^{1/4}-1| = %.2e; %.2fs", dev, dt);
  detail = buf;
  return dev < 1e-6 && dt < 1.0;
}

// ---- criterion 3: single root singularity convergence order ----
bool criterion_root_slope(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  FHSymbol f(SmoothPart(), {{0.0, {0.5, 0.0}, {0.0, 0.0}}});
  SweepSpec spec;
  spec.target = SweepTarget::TOEPLITZ;
  spec.predictor = Predictor::EHRHARDT;
  for (int n = 16; n <= 96; n += 8) spec.n_grid.push_back(n);
  SweepTable table = run_sweep(spec, f);
  double slope = table.fit_slope.value_or(0.0);
  double dt = seconds_since(t0);
  char buf[120];
  std::snprintf(buf, sizeof buf, "log-log slope = %.3f; %.2fs", slope, dt);
  detail = buf;
  return table.all_ok() && slope > -1.4 && slope < -0.6 && dt < 10.0;
}

// ---- criterion 4: identity suites ----
bool criterion_identities(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusRng rng(2024);
  int failures = 0, cases = 0;
  double worst = 0.0;
  auto tally = [&](const IdentityReport& r) {
    ++cases;
    worst = std::max(worst, r.relative_residual);
    if (!r.pass) ++failures;
  };

  for (int i = 0; i < 50; ++i) {
    FHSymbol f = random_symbol(rng, rng.uniform_int(1, 2));
    int ell = (i % 4 < 2) ? 1 : 2;
    int sign = (i % 2) ? 1 : -1;
    int n = 4 + i % 5;  // n <= 8 for the shift identity
    tally(check_shift_identity(f, sign * ell, n, 1e-8));
  }
  for (int i = 0; i < 50; ++i) {
    HankelWeight w = random_weight(rng, rng.uniform_int(0, 2));
    tally(check_hankel_toeplitz(w, 2 + i % 4, 1e-8));
  }
  for (int i = 0; i < 50; ++i) {
    FHSymbol f = random_even_symbol(rng, rng.uniform_int(0, 2));
    tally(check_tph_reduction(f, 2 + i % 7, TphVariant(i % 4), 1e-8));
  }
  for (int i = 0; i < 50; ++i) {
    FHSymbol f = random_even_symbol(rng, rng.uniform_int(0, 1));
    tally(check_szego_map(f, 2 + i % 3, 1e-8));
  }
  for (int i = 0; i < 50; ++i) {
    FHSymbol f = random_symbol(rng, rng.uniform_int(1, 3));
    Complex z = (0.5 + rng.uniform(0.0, 1.0)) *
                std::exp(I * rng.uniform(0.0, 2.0 * kPi));
    Complex a = (0.5 + rng.uniform(0.0, 1.0)) *
                std::exp(I * rng.uniform(0.0, 2.0 * kPi));
    tally(check_cd(f, 3 + i % 8, z, a, 1e-8));
  }

  double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d cases, %d failures, worst residual %.2e; %.1fs",
                cases, failures, worst, dt);
  detail = buf;
  return failures == 0 && dt < 30.0;
}

// ---- criterion 5: D_n(1) closed form ----
bool criterion_dn_one(std::string& detail) {
  HankelWeight one(SmoothPart(), {0.0, 0.0}, {0.0, 0.0}, {});
  double worst_route = 0.0, worst_lu = 0.0;
  for (int n = 1; n <= 20; ++n) {
    LogScaled closed = hankel_det_one(n);
    LogScaled via = route_hankel_via_toeplitz(one, n);
    worst_route = std::max(
        worst_route, std::abs(via.log_mod() - closed.log_mod()) /
                         std::max(1.0, std::abs(closed.log_mod())));
  }
  VectorXc m = hankel_moments(one, 18);
  for (int n = 1; n <= 10; ++n) {
    LogScaled lu = hankel_logdet(m, n);
    LogScaled closed = hankel_det_one(n);
    worst_lu = std::max(worst_lu,
                        std::abs(lu.log_mod() - closed.log_mod()) /
                            std::max(1.0, std::abs(closed.log_mod())));
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "route err %.2e (n<=20), LU err %.2e (n<=10)",
                worst_route, worst_lu);
  detail = buf;
  return worst_route < 1e-8 && worst_lu < 1e-7;
}

// ---- criterion 6: representation minimizer vs brute force ----
void enumerate_shifts(int m, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (int(cur.size()) == m) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum == 0) visit(cur);
    return;
  }
  for (int v = -4; v <= 4; ++v) {
    cur.push_back(v);
    enumerate_shifts(m, cur, visit);
    cur.pop_back();
  }
}

bool criterion_minimizer(std::string& detail) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(-2.2, 2.2);
  std::uniform_int_distribution<int> mdist(1, 4);
  int bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BetaVector b;
    int m = mdist(rng);
    for (int j = 0; j < m; ++j) b.betas.push_back(Complex(u(rng), u(rng)));
    auto reps = minimize_reps(b);
    double best = 1e300;
    std::vector<int> cur;
    enumerate_shifts(m, cur, [&](const std::vector<int>& n) {
      double s = 0.0;
      for (int j = 0; j < m; ++j) {
        double r = b.betas[j].real() + n[j];
        s += r * r;
      }
      best = std::min(best, s);
    });
    for (const auto& rep : reps) {
      double s = 0.0;
      for (size_t j = 0; j < rep.shifts.size(); ++j) {
        double r = b.betas[j].real() + rep.shifts[j];
        s += r * r;
      }
      if (std::abs(s - best) > 1e-9) ++bad;
    }
  }
  auto bt = minimize_reps(BetaVector{{Complex(0.5, 0.0), Complex(-0.5, 0.0)}});
  bool two = bt.size() == 2;
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d brute-force mismatches; jump pair gives %zu reps",
                bad, bt.size());
  detail = buf;
  return bad == 0 && two;
}

// ---- criterion 7: special function identities ----
double zeta_prime_minus1_oracle() {
  double eta = 0.0, etap = 0.0;
  for (int k = 0; k < 64; ++k) {
    double inner = 0.0, innerp = 0.0, binom = 1.0;
    for (int j = 0; j <= k; ++j) {
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      double np1 = double(j + 1);
      inner += sign * binom * np1;
      innerp += -sign * binom * std::log(np1) * np1;
      binom *= double(k - j) / double(j + 1);
    }
    double scale = std::pow(0.5, k + 1);
    eta += scale * inner;
    etap += scale * innerp;
  }
  double zeta = eta / (1.0 - 4.0);
  return (etap - zeta * std::log(2.0) * 4.0) / (-3.0);
}

bool criterion_special_functions(std::string& detail) {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  double worst_rec = 0.0, worst_dbl = 0.0;
  int done = 0;
  while (done < 100) {
    Complex z(10.0 * u(rng), 10.0 * u(rng));
    if (z.real() < 0.3 && std::abs(z.imag()) < 0.3) continue;
    Complex r = ln_barnes_g(z + 1.0) - ln_gamma(z) - ln_barnes_g(z);
    worst_rec = std::max(worst_rec,
                         std::abs(Complex(r.real(),
                                          std::remainder(r.imag(), 2.0 * kPi))));
    ++done;
  }
  done = 0;
  while (done < 50) {
    Complex z(4.0 * u(rng) + 2.5, 4.0 * u(rng));
    if (z.real() < 0.3) continue;
    Complex lhs = ln_barnes_g(2.0 * z) + z * std::log(kPi) +
                  2.0 * ln_barnes_g(Complex(0.5, 0.0));
    Complex rhs = 2.0 * ln_barnes_g(z) + 2.0 * ln_barnes_g(z + 0.5) +
                  ln_gamma(z) + (2.0 * z - 1.0) * (z - 1.0) * std::log(2.0);
    Complex r = lhs - rhs;
    worst_dbl = std::max(
        worst_dbl, std::abs(Complex(r.real(), std::remainder(r.imag(), 2.0 * kPi))) /
                       std::max(1.0, std::abs(lhs)));
    ++done;
  }

  double zp = zeta_prime_minus1_oracle();
  double g12_expected =
      0.5 * (std::log(2.0) / 12.0 - 0.5 * std::log(kPi) + 3.0 * zp);
  double g12_err =
      std::abs(ln_barnes_g(Complex(0.5, 0.0)).real() - g12_expected);

  // transformation identity with all three arguments on the base sheet
  double worst_conn = 0.0;
  done = 0;
  while (done < 100) {
    Complex a(-0.6 + 2.0 * (u(rng) + 1.0) / 2.0, -0.7 + 0.7 * u(rng));
    Complex c(-0.5 + 2.3 * (u(rng) + 1.0) / 2.0, -0.6 + 0.6 * u(rng));
    if (std::abs(c.real() - std::round(c.real())) < 0.08 &&
        std::abs(c.imag()) < 0.08)
      continue;
    double r = std::exp(std::log(0.3) + (u(rng) + 1.0) / 2.0 * std::log(60.0 / 0.3));
    CoveringPoint high = CoveringPoint::from_polar(r, kPi);
    Complex z = high.value();
    Complex lhs = psi_chf(a, c, high.rotated(-2.0 * kPi));
    Complex K = 2.0 * kPi * I * std::exp(I * kPi * a) * rgamma(a) *
                rgamma(a - c + 1.0);
    Complex rhs = std::exp(2.0 * kPi * I * a) * psi_chf(a, c, high) -
                  K * std::exp(z) * psi_chf(c - a, c, high.rotated(-kPi));
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    worst_conn = std::max(worst_conn, std::abs(lhs - rhs) / scale);
    ++done;
  }

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "G rec %.1e, doubling %.1e, G(1/2) %.1e, psi connection %.1e",
                worst_rec, worst_dbl, g12_err, worst_conn);
  detail = buf;
  return worst_rec < 1e-10 && worst_dbl < 1e-10 && g12_err < 1e-9 &&
         worst_conn < 1e-9;
}

// ---- criterion 8: parametrix jumps, determinant, large-zeta matching ----
struct RaySides {
  Sector plus;
  double plus_arg;
  Sector minus;
  double minus_arg;
};

RaySides ray_sides(int k) {
  switch (k) {
    case 2: return {Sector::II, 3 * kPi / 4, Sector::I, 3 * kPi / 4};
    case 3: return {Sector::III, kPi, Sector::II, kPi};
    case 4: return {Sector::III, 5 * kPi / 4, Sector::IV, 5 * kPi / 4};
    case 5: return {Sector::IV, 3 * kPi / 2, Sector::V, 3 * kPi / 2};
    case 6: return {Sector::V, 7 * kPi / 4, Sector::VI, 7 * kPi / 4};
    case 7: return {Sector::VII, 2 * kPi, Sector::VI, 2 * kPi};
    case 8: return {Sector::VIII, 9 * kPi / 4, Sector::VII, 9 * kPi / 4};
    default: return {Sector::I, kPi / 2, Sector::VIII, kPi / 2 + 2 * kPi};
  }
}

bool criterion_parametrix(std::string& detail) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_jump = 0.0, worst_det = 0.0, fitted_c = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    Complex alpha(-0.4 + 1.2 * u(rng), -0.5 + u(rng));
    Complex beta(-0.6 + 1.2 * u(rng), -0.5 + u(rng));
    bool skip = false;
    for (Complex s : {alpha + beta, alpha - beta})
      if (std::abs(s - std::round(s.real())) < 0.1 && s.real() < -0.5) skip = true;
    if (skip) {
      --trial;
      continue;
    }
    for (int ray = 1; ray <= 8; ++ray) {
      RaySides rs = ray_sides(ray);
      for (int i = 0; i < 20; ++i) {
        double r = std::exp(std::log(0.05) +
                            i * (std::log(12.0) - std::log(0.05)) / 19.0);
        Matrix2c plus = parametrix_matrix({alpha, beta, rs.plus},
                                          CoveringPoint::from_polar(r, rs.plus_arg));
        Matrix2c minus = parametrix_matrix(
            {alpha, beta, rs.minus}, CoveringPoint::from_polar(r, rs.minus_arg));
        Matrix2c gap = plus - minus * parametrix_jump(ray, alpha, beta);
        worst_jump = std::max(worst_jump, gap.cwiseAbs().maxCoeff() /
                                              minus.cwiseAbs().maxCoeff());
        // the determinant criterion is absolute; at large radii the 2x2
        // determinant of e^{|zeta|/2}-sized entries cannot resolve 1e-10,
        // so it is pinned on the moderate-radius points
        if (r < 2.5) {
          Complex det = plus(0, 0) * plus(1, 1) - plus(0, 1) * plus(1, 0);
          Complex expect = std::exp(-I * kPi * (alpha - beta));
          worst_det =
              std::max(worst_det, std::abs(det - expect) /
                                      std::max(1.0, std::abs(expect)));
        }
      }
    }
    for (double r : {40.0, 90.0, 200.0}) {
      CoveringPoint zeta = CoveringPoint::from_polar(r, 0.6 * kPi);
      Matrix2c psi = parametrix_matrix({alpha, beta, Sector::I}, zeta);
      Matrix2c as = parametrix_large_zeta(alpha, beta, zeta);
      Matrix2c gap = psi * as.inverse() - Matrix2c::Identity();
      fitted_c = std::max(fitted_c, gap.cwiseAbs().maxCoeff() * r);
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "jump %.1e, det %.1e, fitted C %.2f",
                worst_jump, worst_det, fitted_c);
  detail = buf;
  return worst_jump < 1e-9 && worst_det < 1e-10 && fitted_c < 5.0;
}

// ---- criterion 9: polynomial asymptotics thresholds ----
bool criterion_poly(std::string& detail) {
  FHSymbol jump(SmoothPart(), {{0.0, {0.0, 0.0}, {0.5, 0.0}}});
  double worst_chi = 0.0;
  for (int n : {32, 64}) {
    CoeffWindow coeffs(fourier_coeffs(jump, n + 1));
    OPData op(coeffs, n);
    PolyAsym p = poly_asym(jump, n);
    double dev = std::abs(op.chi_sq(n - 1) / p.chi_sq_nm1 - 1.0);
    worst_chi = std::max(worst_chi, dev * n / 3.0);  // scaled to the 3/n budget
  }
  int n = 64;
  CoeffWindow coeffs(fourier_coeffs(jump, n + 1));
  OPData op(coeffs, n);
  PolyAsym p = poly_asym(jump, n);
  double hat_dev = std::abs(op.monic_hatphi0(n) / p.monic_hatphi0 - 1.0);
  double phi_dev = std::abs(op.monic_phi0(n) / p.monic_phi0 - 1.0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "chi within %.2f of the 3/n budget; phi dev %.2e, hat dev %.2e",
                worst_chi, phi_dev, hat_dev);
  detail = buf;
  return worst_chi < 1.0 && hat_dev < 0.10 && phi_dev < 0.10;
}

// ---- criterion 10: hankel and toeplitz+hankel trends ----
bool criterion_hankel_tph(std::string& detail) {
  HankelWeight cheb(SmoothPart(), {-0.25, 0.0}, {-0.25, 0.0}, {});
  std::vector<double> hdev;
  for (int n : {8, 16, 32}) {
    LogScaled exact = route_hankel_via_toeplitz(cheb, n);
    AsymptoticResult pred = hankel_asym(cheb, n);
    hdev.push_back(std::abs(exact.ratio(pred.value) - 1.0));
  }
  bool hankel_ok = hdev.back() < 0.1 && hdev.back() < hdev.front();

  FHSymbol one(SmoothPart(), {});
  VectorXc c = VectorXc::Zero(2 * 66 + 1);
  c[66] = 1.0;
  CoeffWindow coeffs(std::move(c));
  double worst_tph = 0.0;
  bool trend = true;
  for (TphVariant variant : {TphVariant::PLUS, TphVariant::MINUS2,
                             TphVariant::PLUS1, TphVariant::MINUS1}) {
    double prev = 1e9;
    for (int n : {8, 16, 32}) {
      LogScaled exact = tph_logdet(coeffs, n, variant);
      AsymptoticResult pred = tph_asym(one, n, variant);
      double dev = std::abs(exact.ratio(pred.value) - 1.0);
      if (n == 32) worst_tph = std::max(worst_tph, dev);
      if (dev > prev + 1e-12) trend = false;
      prev = dev;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "hankel dev %.2e -> %.2e; worst T+H dev at n=32 %.2e",
                hdev.front(), hdev.back(), worst_tph);
  detail = buf;
  return hankel_ok && worst_tph < 0.1 && trend;
}

void run(const char* name, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("%-34s %s  (%s)\n", name, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  run("1. jump-symbol reproduction", criterion_basor_tracy);
  run("2. strong szego limit", criterion_szego);
  run("3. root-singularity order", criterion_root_slope);
  run("4. identity suites", criterion_identities);
  run("5. D_n(1) closed form", criterion_dn_one);
  run("6. representation minimizer", criterion_minimizer);
  run("7. special functions", criterion_special_functions);
  run("8. parametrix", criterion_parametrix);
  run("9. polynomial asymptotics", criterion_poly);
  run("10. hankel and T+H trends", criterion_hankel_tph);
  std::printf("total: %s in %.1fs\n", g_failures == 0 ? "PASS" : "FAIL",
              seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
