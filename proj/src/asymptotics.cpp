#include "fhdet/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fhdet/special_functions.hpp"

namespace fhdet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

LogScaled product(const std::vector<std::pair<std::string, LogScaled>>& terms) {
  LogScaled v = LogScaled::one();
  for (const auto& [name, t] : terms) v *= t;
  return v;
}

double delta_scale_of(const std::vector<Complex>& betas, int n) {
  double worst = -2.0;  // exponent 2 Re(beta_j - beta_k - 1)
  for (const auto& bj : betas)
    for (const auto& bk : betas)
      worst = std::max(worst, 2.0 * (bj.real() - bk.real() - 1.0));
  return std::pow(double(n), worst);
}

void check_not_degenerate(Complex alpha, Complex beta) {
  for (Complex s : {alpha + beta, alpha - beta}) {
    double r = std::round(s.real());
    if (r <= -1.0 && std::abs(s.real() - r) < 1e-12 && std::abs(s.imag()) < 1e-12)
      throw Error("barnes_zero",
                  "alpha +- beta is a negative integer; G(1+alpha+-beta) = 0");
  }
}

// right-hand side of the |||beta||| < 1 asymptotics as named log factors;
// seminorm checked against `seminorm_limit` (strict 1 for the public entry,
// 1 + tol when evaluating members of M)
std::vector<std::pair<std::string, LogScaled>> ehrhardt_terms(
    const FHSymbol& f, int n, double seminorm_limit) {
  const auto& sing = f.singularities();
  for (size_t j = 0; j < sing.size(); ++j)
    for (size_t k = j + 1; k < sing.size(); ++k)
      if (std::abs(sing[j].beta.real() - sing[k].beta.real()) >= seminorm_limit) {
        std::ostringstream msg;
        msg << "|Re beta_" << j << " - Re beta_" << k << "| = "
            << std::abs(sing[j].beta.real() - sing[k].beta.real())
            << " violates the seminorm condition";
        throw Error("hypothesis", msg.str());
      }
  for (const auto& s : sing) check_not_degenerate(s.alpha, s.beta);

  const SmoothPart& v = f.smooth();
  double ln_n = std::log(double(n));
  std::vector<std::pair<std::string, LogScaled>> terms;

  // exponential Szego part exp(n V_0 + sum k V_k V_{-k})
  Complex szego = double(n) * v.v0() + v.szego_pairing();
  terms.push_back({"szego", LogScaled::from_log(szego)});

  // b_+(z_j)^{-a+b} b_-(z_j)^{-a-b}, branches fixed by the exponential sums
  Complex smooth_sing(0.0, 0.0);
  for (const auto& s : sing) {
    Complex z = std::exp(kI * s.theta);
    smooth_sing += (-s.alpha + s.beta) * v.half_sum_plus(z);
    smooth_sing += (-s.alpha - s.beta) * v.half_sum_minus(z);
  }
  terms.push_back({"smooth_singularity", LogScaled::from_log(smooth_sing)});

  // n^{sum (alpha^2 - beta^2)}
  Complex sigma(0.0, 0.0);
  for (const auto& s : sing) sigma += s.alpha * s.alpha - s.beta * s.beta;
  terms.push_back({"power", LogScaled::from_log(sigma * ln_n)});

  // pairwise |z_j - z_k|^{2(b_j b_k - a_j a_k)} (z_k/(z_j e^{i pi}))^{a_j b_k - a_k b_j}
  Complex pair(0.0, 0.0);
  for (size_t j = 0; j < sing.size(); ++j)
    for (size_t k = j + 1; k < sing.size(); ++k) {
      const auto &sj = sing[j], &sk = sing[k];
      double dist = std::abs(2.0 * std::sin(0.5 * (sj.theta - sk.theta)));
      pair += 2.0 * (sj.beta * sk.beta - sj.alpha * sk.alpha) * std::log(dist);
      pair += kI * (sk.theta - sj.theta - kPi) *
              (sj.alpha * sk.beta - sk.alpha * sj.beta);
    }
  terms.push_back({"pairwise", LogScaled::from_log(pair)});

  // Barnes-G constants; trivial entries contribute G(1)^2/G(1) = 1 exactly
  Complex barnes(0.0, 0.0);
  for (const auto& s : sing) {
    if (s.alpha == Complex(0.0, 0.0) && s.beta == Complex(0.0, 0.0)) continue;
    barnes += ln_barnes_g(1.0 + s.alpha + s.beta) +
              ln_barnes_g(1.0 + s.alpha - s.beta) -
              ln_barnes_g(1.0 + 2.0 * s.alpha);
  }
  terms.push_back({"barnes", LogScaled::from_log(barnes)});

  terms.push_back({"oscillatory", LogScaled::one()});
  return terms;
}

std::string error_order_of(const FHSymbol& f, double delta) {
  int nontrivial = 0;
  bool all_beta_zero = true;
  for (const auto& s : f.singularities()) {
    if (s.alpha != Complex(0.0, 0.0) || s.beta != Complex(0.0, 0.0)) ++nontrivial;
    if (s.beta != Complex(0.0, 0.0)) all_beta_zero = false;
  }
  if (nontrivial <= 1 || all_beta_zero) return "O(n^-1 ln n)";
  std::ostringstream ss;
  ss << "o(1), delta = " << delta;
  return ss.str();
}

}  // namespace

LogScaled AsymptoticResult::term(const std::string& name) const {
  for (const auto& [key, t] : terms)
    if (key == name) return t;
  throw Error("hypothesis", "no term named " + name);
}

NuFactor nu_factors(const FHSymbol& f) {
  const auto& sing = f.singularities();
  NuFactor out;
  for (size_t j = 0; j < sing.size(); ++j) {
    Complex lg(0.0, 0.0);
    Complex asum(0.0, 0.0);
    for (size_t p = 0; p < j; ++p) asum += sing[p].alpha;
    for (size_t p = j + 1; p < sing.size(); ++p) asum -= sing[p].alpha;
    lg += -kI * kPi * asum;
    for (size_t p = 0; p < sing.size(); ++p) {
      if (p == j) continue;
      lg += kI * sing[p].alpha * (sing[j].theta - sing[p].theta);
      double dist = std::abs(2.0 * std::sin(0.5 * (sing[j].theta - sing[p].theta)));
      lg += 2.0 * sing[p].beta * std::log(dist);
    }
    out.nu.push_back(std::exp(lg));
  }
  return out;
}

AsymptoticResult szego_asym(const SmoothPart& v, int n) {
  AsymptoticResult r;
  r.terms.push_back(
      {"szego", LogScaled::from_log(double(n) * v.v0() + v.szego_pairing())});
  r.value = product(r.terms);
  r.delta_scale = std::pow(double(n), -2.0);
  r.error_order = "o(1), super-polynomial for trigonometric V";
  return r;
}

AsymptoticResult ehrhardt_asym(const FHSymbol& f, int n) {
  AsymptoticResult r;
  // equality |Re beta_j - Re beta_k| = 1 is admitted: the representation sum
  // evaluates the same right-hand side on seminorm-1 members
  r.terms = ehrhardt_terms(f, n, 1.0 + 1e-12);
  r.value = product(r.terms);
  std::vector<Complex> betas;
  for (const auto& s : f.singularities()) betas.push_back(s.beta);
  r.delta_scale = delta_scale_of(betas, n);
  r.error_order = error_order_of(f, r.delta_scale);
  return r;
}

AsymptoticResult basor_tracy_asym(const FHSymbol& f, int n) {
  const auto& sing = f.singularities();
  BetaVector bv;
  std::vector<Complex> alphas;
  for (const auto& s : sing) {
    bv.betas.push_back(s.beta);
    alphas.push_back(s.alpha);
  }
  std::vector<FHRep> reps = minimize_reps(bv);
  for (const auto& rep : reps)
    if (is_degenerate(rep, alphas))
      throw Error("degenerate_rep",
                  "a minimizing FH-representation is degenerate; the formula "
                  "no longer gives the leading asymptotics");

  std::vector<LogScaled> values;
  std::vector<std::pair<std::string, LogScaled>> single_terms;
  for (const auto& rep : reps) {
    FHSymbol shifted = f.shifted(rep.shifts);
    auto terms = ehrhardt_terms(shifted, n, 1.0 + 1e-9);
    double phase = 0.0;
    for (size_t j = 0; j < sing.size(); ++j)
      phase += double(n) * rep.shifts[j] * sing[j].theta;
    for (auto& [name, t] : terms)
      if (name == "oscillatory") t *= LogScaled(0.0, phase);
    values.push_back(product(terms));
    if (reps.size() == 1) single_terms = std::move(terms);
  }

  AsymptoticResult r;
  r.value = log_sum(values);
  if (reps.size() == 1)
    r.terms = std::move(single_terms);
  else
    r.terms.push_back({"sum", r.value});
  r.delta_scale = delta_scale_of(reps.front().shifted_betas(), n);
  r.error_order = "o(1), delta-based over the minimizing representations";
  return r;
}

AsymptoticResult bt1_asym(const FHSymbol& f, int j0, int sign, int n) {
  const auto& sing = f.singularities();
  if (sign != 1 && sign != -1) throw Error("hypothesis", "sign must be +-1");
  if (j0 < 0 || j0 >= int(sing.size()))
    throw Error("hypothesis", "j0 out of range");
  int nontrivial = 0;
  for (const auto& s : sing)
    if (s.alpha != Complex(0.0, 0.0) || s.beta != Complex(0.0, 0.0)) ++nontrivial;
  if (nontrivial < 2)
    throw Error("hypothesis", "needs more than one singular point");
  for (const auto& s : sing) {
    if (s.beta.real() <= -0.5 || s.beta.real() > 0.5)
      throw Error("hypothesis", "Re beta must lie in (-1/2, 1/2]");
    for (Complex c : {s.alpha + s.beta, s.alpha - s.beta})
      if (std::abs(c) < 1e-12)
        throw Error("hypothesis", "alpha_j +- beta_j = 0 excluded here");
  }

  // extremal set: smallest Re beta for the +1 shift, largest for -1
  double best = sing[0].beta.real();
  for (const auto& s : sing)
    best = (sign > 0) ? std::min(best, s.beta.real())
                      : std::max(best, s.beta.real());
  std::vector<int> extremal;
  for (size_t j = 0; j < sing.size(); ++j)
    if (std::abs(sing[j].beta.real() - best) < 1e-12) extremal.push_back(int(j));

  std::vector<LogScaled> values;
  for (int jp : extremal) {
    std::vector<int> shifts(sing.size(), 0);
    shifts[jp] = sign;
    FHSymbol shifted = f.shifted(shifts);
    auto terms = ehrhardt_terms(shifted, n, 1.0 + 1e-9);
    double phase =
        double(n) * double(sign) * (sing[jp].theta - sing[j0].theta);
    values.push_back(product(terms) * LogScaled(0.0, phase));
  }

  AsymptoticResult r;
  r.value = log_sum(values);
  r.terms.push_back({"sum", r.value});
  std::vector<Complex> betas;
  for (const auto& s : sing) betas.push_back(s.beta);
  r.delta_scale = delta_scale_of(betas, n);
  r.error_order = "o(1)";
  return r;
}

PolyAsym poly_asym(const FHSymbol& f, int n) {
  const auto& sing = f.singularities();
  for (size_t j = 0; j < sing.size(); ++j)
    for (size_t k = j + 1; k < sing.size(); ++k)
      if (std::abs(sing[j].beta.real() - sing[k].beta.real()) >= 1.0)
        throw Error("hypothesis", "|Re beta_j - Re beta_k| < 1 required");
  for (const auto& s : sing) check_not_degenerate(s.alpha, s.beta);

  const SmoothPart& v = f.smooth();
  NuFactor nu = nu_factors(f);
  double ln_n = std::log(double(n));
  size_t m1 = sing.size();

  std::vector<Complex> z(m1), bp(m1), bm(m1);
  for (size_t j = 0; j < m1; ++j) {
    z[j] = std::exp(kI * sing[j].theta);
    bp[j] = std::exp(v.half_sum_plus(z[j]));
    bm[j] = std::exp(v.half_sum_minus(z[j]));
  }

  PolyAsym out;
  // chi_{n-1}^2
  Complex corr = 1.0;
  Complex s1(0.0, 0.0);
  for (const auto& s : sing) s1 += s.alpha * s.alpha - s.beta * s.beta;
  corr -= s1 / double(n);
  for (size_t j = 0; j < m1; ++j)
    for (size_t k = 0; k < m1; ++k) {
      if (k == j) continue;
      const auto &sj = sing[j], &sk = sing[k];
      Complex cross = z[k] / (z[j] - z[k]);
      cross *= std::exp(kI * double(n) * (sj.theta - sk.theta));  // (z_j/z_k)^n
      cross *= std::exp(2.0 * (sk.beta - sj.beta - 1.0) * ln_n);
      cross *= nu.nu[j] / nu.nu[k];
      cross *= std::exp(ln_gamma(1.0 + sj.alpha + sj.beta) +
                        ln_gamma(1.0 + sk.alpha - sk.beta)) *
               rgamma(sj.alpha - sj.beta) * rgamma(sk.alpha + sk.beta);
      cross *= (bp[j] * bm[k]) / (bm[j] * bp[k]);
      corr += cross;
    }
  out.chi_sq_nm1 = std::exp(-v.v0()) * corr;

  // Phi_n(0), hatPhi_n(0)
  Complex phi(0.0, 0.0), hat(0.0, 0.0);
  for (size_t j = 0; j < m1; ++j) {
    const auto& s = sing[j];
    phi += std::exp((-2.0 * s.beta - 1.0) * ln_n) *
           std::exp(kI * double(n) * s.theta) * nu.nu[j] *
           std::exp(ln_gamma(1.0 + s.alpha + s.beta)) * rgamma(s.alpha - s.beta) *
           bp[j] / bm[j];
    hat += std::exp((2.0 * s.beta - 1.0) * ln_n) *
           std::exp(-kI * double(n) * s.theta) / nu.nu[j] *
           std::exp(ln_gamma(1.0 + s.alpha - s.beta)) * rgamma(s.alpha + s.beta) *
           bm[j] / bp[j];
  }
  out.monic_phi0 = phi;
  out.monic_hatphi0 = hat;

  std::vector<Complex> betas;
  for (const auto& s : sing) betas.push_back(s.beta);
  out.delta = delta_scale_of(betas, n);
  double bmax = 0.0, bmin = 0.0;
  for (const auto& s : sing) {
    bmax = std::max(bmax, -2.0 * s.beta.real());
    bmin = std::max(bmin, 2.0 * s.beta.real());
  }
  out.chi_err_scale = out.delta * out.delta + out.delta / double(n);
  out.phi_err_scale =
      (out.delta + 1.0 / double(n)) * std::pow(double(n), bmax) / double(n);
  out.hatphi_err_scale =
      (out.delta + 1.0 / double(n)) * std::pow(double(n), bmin) / double(n);
  return out;
}

LogScaled hankel_det_one(int n) {
  if (n == 0) return LogScaled::one();
  if (n <= 200) {
    double lg = double(n) * double(n) * std::log(2.0);
    for (int k = 0; k < n; ++k)
      lg += 3.0 * std::lgamma(double(k + 1)) - std::lgamma(double(n + k + 1));
    return LogScaled(lg, 0.0);
  }
  double lnG12 = ln_barnes_g(Complex(0.5, 0.0)).real();
  double lg = (n + 0.5) * std::log(kPi) + 2.0 * lnG12 -
              double(n) * double(n - 1) * std::log(2.0) - 0.25 * std::log(double(n));
  return LogScaled(lg, 0.0);
}

AsymptoticResult hankel_asym(const HankelWeight& w, int n) {
  for (const auto& nd : w.nodes()) {
    double rb = nd.beta.real();
    if (std::abs(rb - 0.5) < 1e-12)
      throw Error("hypothesis",
                  "Re beta = 1/2 needs a correction term not computed here");
    if (rb <= -0.5 || rb >= 0.5)
      throw Error("hypothesis", "interior Re beta must lie in (-1/2, 1/2)");
  }

  const SmoothPart& v = w.smooth_u();
  if (!v.is_even(1e-13)) throw Error("hypothesis", "weight smooth part must be even");
  int r = int(w.nodes().size());
  Complex a0 = w.alpha_plus1(), ar1 = w.alpha_minus1();
  Complex A = w.alpha_total();
  double ln_n = std::log(double(n));

  // lambda/theta tables with endpoints included: index 0..r+1
  std::vector<double> lambda{1.0}, theta{0.0};
  std::vector<Complex> alpha{a0}, beta{Complex(0.0, 0.0)};
  for (const auto& nd : w.nodes()) {
    lambda.push_back(nd.lambda);
    theta.push_back(std::acos(nd.lambda));
    alpha.push_back(nd.alpha);
    beta.push_back(nd.beta);
  }
  lambda.push_back(-1.0);
  theta.push_back(kPi);
  alpha.push_back(ar1);
  beta.push_back(Complex(0.0, 0.0));

  std::vector<std::pair<std::string, LogScaled>> terms;
  terms.push_back({"dn_one", hankel_det_one(n)});

  Complex v1 = v.eval(0.0), vm1 = v.eval(kPi);
  Complex pairing(0.0, 0.0);
  for (int k = 1; k <= v.bandwidth(); ++k)
    pairing += double(k) * v.coeff(k) * v.coeff(k);
  Complex szego = (double(n) + a0 + ar1) * v.v0() - a0 * v1 - ar1 * vm1 +
                  0.5 * pairing;
  terms.push_back({"szego", LogScaled::from_log(szego)});

  Complex smooth_sing(0.0, 0.0);
  for (const auto& nd : w.nodes()) {
    Complex zj = std::exp(kI * std::acos(nd.lambda));
    smooth_sing += (-nd.alpha - nd.beta) * v.half_sum_plus(zj);
    smooth_sing += (-nd.alpha + nd.beta) * v.half_sum_minus(zj);
  }
  terms.push_back({"smooth_singularity", LogScaled::from_log(smooth_sing)});

  // oscillatory + constant phases
  Complex arcsum(0.0, 0.0);
  for (const auto& nd : w.nodes()) arcsum += nd.beta * std::asin(nd.lambda);
  Complex cross_ab(0.0, 0.0);
  for (int j = 0; j <= r + 1; ++j)
    for (int k = j + 1; k <= r + 1; ++k)
      cross_ab += alpha[j] * beta[k] - alpha[k] * beta[j];
  terms.push_back(
      {"oscillatory",
       LogScaled::from_log(2.0 * kI * (double(n) + A) * arcsum + kI * kPi * cross_ab)});

  // powers of 4, 2*pi and n
  Complex quart = A * double(n) + a0 * a0 + ar1 * ar1;
  for (int j = 0; j <= r + 1; ++j)
    for (int k = j + 1; k <= r + 1; ++k) quart += alpha[j] * alpha[k];
  for (const auto& nd : w.nodes()) quart += nd.beta * nd.beta;
  Complex power = -quart * std::log(4.0) + (a0 + ar1) * std::log(2.0 * kPi);
  Complex npow = 2.0 * (a0 * a0 + ar1 * ar1);
  for (const auto& nd : w.nodes())
    npow += nd.alpha * nd.alpha - nd.beta * nd.beta;
  power += npow * ln_n;
  terms.push_back({"power", LogScaled::from_log(power)});

  Complex pair(0.0, 0.0);
  for (int j = 0; j <= r + 1; ++j)
    for (int k = j + 1; k <= r + 1; ++k) {
      double dl = std::abs(lambda[j] - lambda[k]);
      pair += -2.0 * (alpha[j] * alpha[k] + beta[j] * beta[k]) * std::log(dl);
      double chord = std::abs(lambda[j] * lambda[k] - 1.0 +
                              std::sqrt((1.0 - lambda[j] * lambda[j]) *
                                        (1.0 - lambda[k] * lambda[k])));
      if (chord > 0.0) pair += 2.0 * beta[j] * beta[k] * std::log(chord);
    }
  for (const auto& nd : w.nodes())
    pair += -0.5 * (nd.alpha * nd.alpha + nd.beta * nd.beta) *
            std::log(1.0 - nd.lambda * nd.lambda);
  terms.push_back({"pairwise", LogScaled::from_log(pair)});

  Complex barnes = -ln_barnes_g(1.0 + 2.0 * a0) - ln_barnes_g(1.0 + 2.0 * ar1);
  for (const auto& nd : w.nodes()) {
    check_not_degenerate(nd.alpha, nd.beta);
    barnes += ln_barnes_g(1.0 + nd.alpha + nd.beta) +
              ln_barnes_g(1.0 + nd.alpha - nd.beta) -
              ln_barnes_g(1.0 + 2.0 * nd.alpha);
  }
  terms.push_back({"barnes", LogScaled::from_log(barnes)});

  AsymptoticResult res;
  res.terms = std::move(terms);
  res.value = product(res.terms);
  std::vector<Complex> betas = beta;
  res.delta_scale = delta_scale_of(betas, n);
  res.error_order = "o(1)";
  return res;
}

AsymptoticResult tph_asym(const FHSymbol& f, int n, TphVariant variant) {
  if (!f.is_even()) throw Error("hypothesis", "T+H asymptotics need an even symbol");

  double s, t, p;
  switch (variant) {
    case TphVariant::PLUS: p = -2.0 * n + 2.0; s = -0.5; t = -0.5; break;
    case TphVariant::MINUS2: p = 0.0; s = 0.5; t = 0.5; break;
    case TphVariant::PLUS1: p = -double(n); s = -0.5; t = 0.5; break;
    case TphVariant::MINUS1: p = -double(n); s = 0.5; t = -0.5; break;
    default: throw Error("hypothesis", "unknown variant");
  }

  // half data: theta = 0 and theta = pi entries plus the (0, pi) interior list
  Complex a0(0.0, 0.0), ar1(0.0, 0.0);
  std::vector<Singularity> interior;
  for (const auto& sg : f.singularities()) {
    if (sg.theta == 0.0)
      a0 = sg.alpha;
    else if (std::abs(sg.theta - kPi) < 1e-15)
      ar1 = sg.alpha;
    else if (sg.theta < kPi)
      interior.push_back(sg);
  }
  for (const auto& sg : interior) {
    double rb = sg.beta.real();
    if (rb <= -0.5 || rb >= 0.5)
      throw Error("hypothesis", "interior Re beta must lie in (-1/2, 1/2)");
    check_not_degenerate(sg.alpha, sg.beta);
  }

  const SmoothPart& v = f.smooth();
  double ln_n = std::log(double(n));
  Complex est = a0 + ar1 + s + t;
  Complex atilde = 0.5 * est;
  for (const auto& sg : interior) atilde += sg.alpha;

  std::vector<std::pair<std::string, LogScaled>> terms;

  Complex pairing(0.0, 0.0);
  for (int k = 1; k <= v.bandwidth(); ++k)
    pairing += double(k) * v.coeff(k) * v.coeff(k);
  Complex szego = double(n) * v.v0() +
                  0.5 * (est * v.v0() - (a0 + s) * v.eval(0.0) -
                         (ar1 + t) * v.eval(kPi) + pairing);
  terms.push_back({"szego", LogScaled::from_log(szego)});

  Complex smooth_sing(0.0, 0.0);
  for (const auto& sg : interior) {
    Complex zj = std::exp(kI * sg.theta);
    smooth_sing += (-sg.alpha + sg.beta) * v.half_sum_plus(zj);
    smooth_sing += (-sg.alpha - sg.beta) * v.half_sum_minus(zj);
  }
  terms.push_back({"smooth_singularity", LogScaled::from_log(smooth_sing)});

  Complex bsum(0.0, 0.0), phase_ab(0.0, 0.0);
  for (const auto& sg : interior) bsum += sg.beta;
  Complex lead = a0 + s;
  for (const auto& sg : interior) lead += sg.alpha;
  phase_ab = lead * bsum;
  for (size_t j = 0; j < interior.size(); ++j)
    for (size_t k = j + 1; k < interior.size(); ++k)
      phase_ab += interior[j].alpha * interior[k].beta -
                  interior[k].alpha * interior[j].beta;
  Complex osc = -kI * kPi * phase_ab;
  for (const auto& sg : interior)
    osc += 2.0 * atilde * sg.beta * kI * sg.theta;  // z_j^{2 A~ beta_j}
  terms.push_back({"oscillatory", LogScaled::from_log(osc)});

  Complex two_pow = (1.0 - s - t) * double(n) + p - 0.5 * est * est + 0.5 * est;
  for (const auto& sg : interior)
    two_pow += sg.alpha * sg.alpha - sg.beta * sg.beta;
  Complex npow = 0.5 * (a0 * a0 + ar1 * ar1) + a0 * s + ar1 * t;
  for (const auto& sg : interior) npow += sg.alpha * sg.alpha - sg.beta * sg.beta;
  Complex pipow = 0.5 * (est + 1.0);
  terms.push_back({"power", LogScaled::from_log(two_pow * std::log(2.0) +
                                                npow * ln_n +
                                                pipow * std::log(kPi))});

  Complex pair(0.0, 0.0);
  for (size_t j = 0; j < interior.size(); ++j)
    for (size_t k = j + 1; k < interior.size(); ++k) {
      const auto &sj = interior[j], &sk = interior[k];
      double d1 = std::abs(2.0 * std::sin(0.5 * (sj.theta - sk.theta)));
      double d2 = std::abs(2.0 * std::sin(0.5 * (sj.theta + sk.theta)));
      pair += -2.0 * (sj.alpha * sk.alpha - sj.beta * sk.beta) * std::log(d1);
      pair += -2.0 * (sj.alpha * sk.alpha + sj.beta * sk.beta) * std::log(d2);
    }
  for (const auto& sg : interior) {
    double s2 = std::abs(2.0 * std::sin(sg.theta));          // |1 - z_j^2|
    double sm = std::abs(2.0 * std::sin(0.5 * sg.theta));    // |1 - z_j|
    double sp = std::abs(2.0 * std::cos(0.5 * sg.theta));    // |1 + z_j|
    pair += -(sg.alpha * sg.alpha + sg.beta * sg.beta) * std::log(s2);
    pair += -2.0 * sg.alpha * (a0 + s) * std::log(sm);
    pair += -2.0 * sg.alpha * (ar1 + t) * std::log(sp);
  }
  terms.push_back({"pairwise", LogScaled::from_log(pair)});

  Complex barnes = 2.0 * ln_barnes_g(Complex(0.5, 0.0)) -
                   ln_barnes_g(1.0 + a0 + s) - ln_barnes_g(1.0 + ar1 + t);
  for (const auto& sg : interior)
    barnes += ln_barnes_g(1.0 + sg.alpha + sg.beta) +
              ln_barnes_g(1.0 + sg.alpha - sg.beta) -
              ln_barnes_g(1.0 + 2.0 * sg.alpha);
  terms.push_back({"barnes", LogScaled::from_log(barnes)});

  AsymptoticResult res;
  res.terms = std::move(terms);
  res.value = product(res.terms);
  std::vector<Complex> betas{Complex(0.0, 0.0)};
  for (const auto& sg : interior) betas.push_back(sg.beta);
  res.delta_scale = delta_scale_of(betas, n);
  res.error_order = "o(1)";
  return res;
}

}  // namespace fhdet
