#include "fhdet/relations.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "fhdet/quadrature.hpp"
#include "fhdet/special_functions.hpp"

namespace fhdet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

IdentityReport make_report(std::string name, int n, LogScaled lhs, LogScaled rhs,
                           double threshold, std::string note = "") {
  IdentityReport rep;
  rep.name = std::move(name);
  rep.n = n;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.threshold = threshold;
  // exact or numerical zero on both sides counts as agreement
  bool tiny_l = lhs.is_zero() || lhs.log_mod() < -30.0;
  bool tiny_r = rhs.is_zero() || rhs.log_mod() < -30.0;
  if (tiny_l && tiny_r) {
    rep.relative_residual = 0.0;
    note += (note.empty() ? "" : "; ");
    note += "both sides numerically zero";
  } else {
    rep.relative_residual = relative_residual(lhs, rhs);
  }
  rep.pass = rep.relative_residual < threshold;
  rep.note = std::move(note);
  return rep;
}

CoeffWindow shifted_coeffs(const CoeffWindow& f, int ell, int jmax) {
  VectorXc out(2 * jmax + 1);
  for (int j = -jmax; j <= jmax; ++j) out[j + jmax] = f.coeff(j - ell);
  return CoeffWindow(std::move(out));
}
}  // namespace

WeightLift weight_of_circle_symbol(const FHSymbol& f) {
  if (!f.is_even())
    throw Error("hypothesis", "only even symbols induce a weight on [-1,1]");
  Complex a0(0.0, 0.0), ar1(0.0, 0.0);
  std::vector<WeightNode> nodes;
  for (const auto& s : f.singularities()) {
    if (s.theta == 0.0)
      a0 = s.alpha;
    else if (std::abs(s.theta - kPi) < 1e-15)
      ar1 = s.alpha;
    else if (s.theta < kPi)
      nodes.push_back({std::cos(s.theta), s.alpha, -s.beta});
  }
  HankelWeight w(f.smooth(), 0.5 * (a0 - 0.5), 0.5 * (ar1 - 0.5), std::move(nodes));
  Complex phase(0.0, 0.0);
  for (const auto& n : w.nodes()) phase += n.beta * std::asin(n.lambda);
  Complex constant =
      std::exp(-(2.0 * w.alpha_total() + 1.0) * std::log(2.0) + 2.0 * kI * phase);
  return WeightLift{std::move(w), constant};
}

IdentityReport check_shift_identity(const FHSymbol& f, int ell, int n,
                                    double threshold) {
  if (ell == 0 || std::abs(ell) > 3)
    throw Error("hypothesis", "1 <= |ell| <= 3");
  int l = std::abs(ell);
  int jmax = n + l + 2;
  CoeffWindow coeffs(fourier_coeffs(f, jmax));
  LogScaled lhs = toeplitz_logdet(shifted_coeffs(coeffs, ell, jmax), n);

  OPData op(coeffs, n + l);
  auto fk_det = [&](int k) -> Complex {
    Eigen::MatrixXcd fk(l, l);
    for (int s = 0; s < l; ++s)
      for (int i = 0; i < l; ++i) {
        const VectorXc& c = ell > 0 ? op.monic_phi(k + i) : op.monic_hatphi(k + i);
        fk(s, i) = (s < c.size()) ? c[s] : Complex(0.0, 0.0);
      }
    return fk.determinant();
  };

  // F_k != 0 for k < n is the identity's hypothesis; annotate if violated
  std::string note;
  for (int k = 1; k < n; ++k)
    if (std::abs(fk_det(k)) < 1e-13) {
      note = "F_k vanishes at k = " + std::to_string(k) +
             "; identity hypotheses fail";
      break;
    }

  // F_n with rows d^s/dz^s Phi_{n+i}(0) = s! * coeff_s; the s! factors cancel
  // against prod_{j<ell} j! exactly
  Complex fn_det = fk_det(n);
  LogScaled dn = op.toeplitz_logdet(n);
  LogScaled rhs;
  if (fn_det == Complex(0.0, 0.0))
    rhs = LogScaled::zero();
  else
    rhs = LogScaled::from_value(fn_det) * dn * LogScaled(0.0, kPi * double(l * n));
  return make_report("shift", n, lhs, rhs, threshold, note);
}

IdentityReport check_hankel_toeplitz(const HankelWeight& w, int n,
                                     double threshold) {
  VectorXc moments = hankel_moments(w, 2 * n - 2 < 0 ? 0 : 2 * n - 2);
  LogScaled dn = hankel_logdet(moments, n);
  LogScaled lhs = dn * dn;

  CircleLift lift = circle_symbol_of_weight(w);
  CoeffWindow coeffs(
      VectorXc(lift.constant * fourier_coeffs(lift.symbol, 2 * n).eval()));
  OPData op(coeffs, 2 * n);
  Complex phi0 = op.monic_phi0(2 * n);
  Complex p1 = op.eval_monic_phi(2 * n, Complex(1.0, 0.0));
  Complex pm1 = op.eval_monic_phi(2 * n, Complex(-1.0, 0.0));
  LogScaled rhs = LogScaled(2.0 * double(n) * std::log(kPi), 0.0) /
                  LogScaled(double(n - 1) * double(n - 1) * std::log(4.0), 0.0);
  rhs *= LogScaled::from_value(1.0 + phi0).pow(2.0);
  rhs *= op.toeplitz_logdet(2 * n);
  rhs /= LogScaled::from_value(p1) * LogScaled::from_value(pm1);
  return make_report("hankel_toeplitz", n, lhs, rhs, threshold);
}

LogScaled route_hankel_via_toeplitz(const HankelWeight& w, int n) {
  CircleLift lift = circle_symbol_of_weight(w);
  CoeffWindow coeffs(
      VectorXc(lift.constant * fourier_coeffs(lift.symbol, 2 * n).eval()));
  OPData op(coeffs, 2 * n);

  int anchor_max = std::min(n, 6);
  VectorXc moments = hankel_moments(w, std::max(0, 2 * anchor_max - 2));

  double prev_phase = 0.0, prev_prev_phase = 0.0;
  LogScaled result = LogScaled::one();
  for (int k = 1; k <= n; ++k) {
    LogScaled sq = LogScaled(2.0 * double(k) * std::log(kPi), 0.0) /
                   LogScaled(double(k - 1) * double(k - 1) * std::log(4.0), 0.0);
    sq *= LogScaled::from_value(1.0 + op.monic_phi0(2 * k)).pow(2.0);
    sq *= op.toeplitz_logdet(2 * k);
    sq /= LogScaled::from_value(op.eval_monic_phi(2 * k, Complex(1.0, 0.0))) *
          LogScaled::from_value(op.eval_monic_phi(2 * k, Complex(-1.0, 0.0)));
    LogScaled root = sq.sqrt();

    double target;
    if (k <= anchor_max) {
      LogScaled lu = hankel_logdet(moments, k);
      if (lu.is_zero())
        throw Error("sign_anchor", "LU anchor determinant vanished at n = " +
                                       std::to_string(k));
      if (std::abs(root.log_mod() - lu.log_mod()) > 1e-3 * std::max(1.0, std::abs(lu.log_mod())))
        throw Error("sign_anchor",
                    "Toeplitz route and LU disagree in modulus at n = " +
                        std::to_string(k));
      target = lu.phase();
    } else {
      target = 2.0 * prev_phase - prev_prev_phase;  // linear continuation
    }
    double m = std::round((target - root.phase()) / kPi);
    LogScaled fixed(root.log_mod(), root.phase() + kPi * m);
    prev_prev_phase = prev_phase;
    prev_phase = fixed.phase();
    result = fixed;
  }
  return result;
}

IdentityReport check_tph_reduction(const FHSymbol& f, int n, TphVariant variant,
                                   double threshold) {
  CoeffWindow coeffs(fourier_coeffs(f, 2 * n + 1));
  LogScaled lhs = tph_logdet(coeffs, n, variant);

  WeightLift lift = weight_of_circle_symbol(f);
  const HankelWeight& base = lift.weight;
  Complex dap(0.0, 0.0), dam(0.0, 0.0);
  double log2 = std::log(2.0);
  LogScaled prefactor;
  switch (variant) {
    case TphVariant::PLUS:
      prefactor = LogScaled((double(n) * double(n) - 2.0 * n + 2.0) * log2 -
                                double(n) * std::log(kPi),
                            0.0);
      break;
    case TphVariant::MINUS2:
      prefactor = LogScaled(double(n) * double(n) * log2 - double(n) * std::log(kPi), 0.0);
      dap = dam = 0.5;
      break;
    case TphVariant::PLUS1:
      prefactor = LogScaled((double(n) * double(n) - n) * log2 - double(n) * std::log(kPi), 0.0);
      dam = 0.5;
      break;
    case TphVariant::MINUS1:
      prefactor = LogScaled((double(n) * double(n) - n) * log2 - double(n) * std::log(kPi), 0.0);
      dap = 0.5;
      break;
  }
  HankelWeight adjusted(base.smooth_u(), base.alpha_plus1() + dap,
                        base.alpha_minus1() + dam, base.nodes());
  // weight = constant * f / |sin|, so the reduction's Hankel symbol
  // f * (endpoint factors) carries 1/constant
  VectorXc moments = hankel_moments(adjusted, std::max(0, 2 * n - 2));
  moments /= lift.constant;
  LogScaled rhs = prefactor * hankel_logdet(moments, n);
  return make_report("tph_reduction", n, lhs, rhs, threshold);
}

IdentityReport check_szego_map(const FHSymbol& f, int n, double threshold) {
  if (!f.is_even()) throw Error("hypothesis", "Szego map needs an even symbol");
  CoeffWindow coeffs(fourier_coeffs(f, 2 * n + 2));
  OPData op(coeffs, 2 * n + 2);

  // evenness of f forces hatPhi = Phi
  for (int k = 0; k <= 2 * n; ++k) {
    double d = (op.monic_phi(k) - op.monic_hatphi(k)).cwiseAbs().maxCoeff();
    if (d > 1e-9)
      return make_report("szego_map", n, LogScaled::one(), LogScaled::zero(),
                         threshold, "hat polynomials differ from phi on an even symbol");
  }

  Complex a2nm1 = -op.monic_phi0(2 * n);
  Complex chi2n = op.chi(2 * n);
  Complex kappa = std::pow(2.0, n) * chi2n * std::sqrt((1.0 - a2nm1) / (2.0 * kPi));

  // orthogonality: int p_n(x) x^m f(e^{i theta(x)})/|sin theta| dx
  //              = int_0^pi p_n(cos theta) cos^m theta f(e^{i theta}) dtheta
  const auto& sing = f.singularities();
  std::vector<double> cuts{0.0};
  for (const auto& s : sing)
    if (s.theta > 0.0 && s.theta < kPi) cuts.push_back(s.theta);
  cuts.push_back(kPi);

  Complex norm = std::sqrt(2.0 * kPi * (1.0 - a2nm1));
  auto pn = [&](double theta) -> Complex {
    Complex z = std::exp(kI * theta);
    Complex val = std::pow(z, -n) * op.eval_monic_phi(2 * n, z) +
                  std::pow(z, n) * op.eval_monic_phi(2 * n, 1.0 / z);
    return chi2n * val / norm;
  };

  double kappa_min = 1.0;
  for (const auto& s : sing)
    kappa_min = std::min(kappa_min, 1.0 + 2.0 * s.alpha.real());
  double u_max = de_u_max_for_exponent(kappa_min);

  double worst = 0.0;
  double kappa_scale = std::abs(1.0 / kappa);
  for (int m = 0; m <= n; ++m) {
    Complex total(0.0, 0.0);
    for (size_t c = 0; c + 1 < cuts.size(); ++c) {
      double tl = cuts[c];
      double tr = (cuts[c + 1] == kPi) ? kPi : cuts[c + 1];
      auto integrand = [&](double theta, double dlo, double dhi) -> Complex {
        return pn(theta) * std::pow(std::cos(theta), m) *
               f.eval_near(theta, tl, dlo, tr, dhi);
      };
      total += tanh_sinh(integrand, cuts[c], cuts[c + 1], 1e-13, 11, u_max).value;
    }
    Complex expected = (m == n) ? 1.0 / kappa : Complex(0.0, 0.0);
    worst = std::max(worst, std::abs(total - expected) / kappa_scale);
  }

  // endpoint relation (1-a_{2k-1})^2 = -4 (chi_{2k+1}/chi_{2k})^2
  //   P_{k+1}(1) P_{k+1}(-1) / (P_k(1) P_k(-1))
  auto monic_p_at = [&](int k, double x) -> Complex {
    Complex z(x, 0.0);
    Complex val = op.eval_monic_phi(2 * k, z) +
                  std::pow(z, 2 * k) * op.eval_monic_phi(2 * k, 1.0 / z);
    return val / (std::pow(2.0 * z, k) * (1.0 - (-op.monic_phi0(2 * k))));
  };
  int k = n;
  Complex lhs_ap = std::pow(1.0 - (-op.monic_phi0(2 * k)), 2.0);
  Complex rhs_ap = -4.0 * (op.chi_sq(2 * k + 1) / op.chi_sq(2 * k)) *
                   monic_p_at(k + 1, 1.0) * monic_p_at(k + 1, -1.0) /
                   (monic_p_at(k, 1.0) * monic_p_at(k, -1.0));
  worst = std::max(worst, std::abs(lhs_ap / rhs_ap - 1.0));

  IdentityReport rep = make_report("szego_map", n, LogScaled::from_value(1.0 / kappa),
                                   LogScaled::from_value(1.0 / kappa), threshold);
  rep.relative_residual = worst;
  rep.pass = worst < threshold;
  return rep;
}

IdentityReport check_cd(const FHSymbol& f, int n, Complex z, Complex a,
                        double threshold) {
  CoeffWindow coeffs(fourier_coeffs(f, n + 1));
  OPData op(coeffs, n + 1);
  double res = cd_residual(op, n, z, a);
  IdentityReport rep = make_report("christoffel_darboux", n, LogScaled::one(),
                                   LogScaled::one(), threshold);
  rep.relative_residual = res;
  rep.pass = res < threshold;
  return rep;
}

}  // namespace fhdet
