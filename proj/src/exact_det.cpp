#include "fhdet/exact_det.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace fhdet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

LogScaled lu_logdet(Eigen::MatrixXcd m, const LuOptions& opt,
                    ConditionReport* report = nullptr) {
  int n = int(m.rows());
  if (n == 0) return LogScaled::one();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  if (report) {
    report->rcond = lu.rcond();
    // crude determinant error estimate: n * eps / rcond
    report->warning = report->rcond <= 0.0 ||
                      double(n) * std::numeric_limits<double>::epsilon() /
                              report->rcond >
                          1e-6;
  }
  double log_mod = 0.0, phase = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex u = lu.matrixLU()(i, i);
    if (std::abs(u) < opt.pivot_floor) return LogScaled::zero();
    log_mod += std::log(std::abs(u));
    phase += std::arg(u);
  }
  if (lu.permutationP().determinant() < 0) phase += kPi;
  return LogScaled(log_mod, phase);
}
}  // namespace

LogScaled toeplitz_logdet(const CoeffWindow& f, int n, const LuOptions& opt) {
  if (n == 0) return LogScaled::one();
  if (f.jmax() < n - 1)
    throw Error("hypothesis", "need coefficients up to |j| = n-1");
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = f.coeff(j - k);
  return lu_logdet(std::move(m), opt);
}

LogScaled hankel_logdet(const VectorXc& moments, int n, ConditionReport* report,
                        const LuOptions& opt) {
  if (n == 0) return LogScaled::one();
  if (moments.size() < 2 * n - 1)
    throw Error("hypothesis", "need moments m_0..m_{2n-2}");
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = moments[j + k];
  return lu_logdet(std::move(m), opt, report);
}

LogScaled tph_logdet(const CoeffWindow& f, int n, TphVariant variant,
                     const LuOptions& opt) {
  if (n == 0) return LogScaled::one();
  if (f.jmax() < 2 * n)
    throw Error("hypothesis", "need coefficients up to |j| = 2n");
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Complex t = f.coeff(j - k);
      switch (variant) {
        case TphVariant::PLUS: t += f.coeff(j + k); break;
        case TphVariant::MINUS2: t -= f.coeff(j + k + 2); break;
        case TphVariant::PLUS1: t += f.coeff(j + k + 1); break;
        case TphVariant::MINUS1: t -= f.coeff(j + k + 1); break;
      }
      m(j, k) = t;
    }
  return lu_logdet(std::move(m), opt);
}

// ---------------------------------------------------------------------------
// OPData
// ---------------------------------------------------------------------------

OPData::OPData(const CoeffWindow& f, int nmax, double breakdown_floor)
    : nmax_(nmax) {
  if (f.jmax() < nmax)
    throw Error("hypothesis", "recursion to degree n needs |j| <= n coefficients");
  if (std::abs(f.coeff(0)) == 0.0)
    throw Error("breakdown", "D_1 = f_0 vanishes at k = 0");

  phi_.resize(nmax + 1);
  hatphi_.resize(nmax + 1);
  chi_sq_.resize(nmax + 1);
  phi0_.resize(nmax + 1);
  hatphi0_.resize(nmax + 1);
  chi_sq_log_.resize(nmax + 1);

  phi_[0] = VectorXc::Ones(1);
  hatphi_[0] = VectorXc::Ones(1);
  chi_sq_[0] = 1.0 / f.coeff(0);
  chi_sq_log_[0] = LogScaled::from_value(chi_sq_[0]);
  phi0_[0] = hatphi0_[0] = Complex(1.0, 0.0);  // Phi_0(0) = 1 by convention

  for (int k = 0; k < nmax; ++k) {
    const VectorXc& P = phi_[k];
    const VectorXc& Q = hatphi_[k];
    // <z Phi_k>_0 = sum_s P_s f_{-s-1};   <hatPhi_k reversed>_0 = chi_k^{-2}
    Complex ip(0.0, 0.0), iq(0.0, 0.0);
    for (int s = 0; s <= k; ++s) {
      ip += P[s] * f.coeff(-s - 1);
      iq += Q[s] * f.coeff(s + 1);
    }
    Complex phi0 = -chi_sq_[k] * ip;     // Phi_{k+1}(0)
    Complex hatphi0 = -chi_sq_[k] * iq;  // hatPhi_{k+1}(0)
    Complex one_minus = 1.0 - phi0 * hatphi0;
    if (std::abs(one_minus) < breakdown_floor)
      throw Error("breakdown",
                  "near-vanishing D at degree " + std::to_string(k + 1) +
                      "; fall back to LU");

    VectorXc Pn = VectorXc::Zero(k + 2), Qn = VectorXc::Zero(k + 2);
    for (int s = 0; s <= k; ++s) {
      Pn[s + 1] += P[s];                     // z Phi_k
      Pn[s] += phi0 * Q[k - s];              // + Phi_{k+1}(0) hatPhi_k^*
      Qn[s + 1] += Q[s];                     // z hatPhi_k
      Qn[s] += hatphi0 * P[k - s];           // + hatPhi_{k+1}(0) Phi_k^*
    }
    Pn[0] = phi0;  // exact reflection value at z = 0
    Qn[0] = hatphi0;
    phi_[k + 1] = std::move(Pn);
    hatphi_[k + 1] = std::move(Qn);
    phi0_[k + 1] = phi0;
    hatphi0_[k + 1] = hatphi0;
    chi_sq_[k + 1] = chi_sq_[k] / one_minus;
    chi_sq_log_[k + 1] =
        chi_sq_log_[k] / LogScaled::from_value(one_minus);  // unwrapped chain
  }
}

Complex OPData::chi(int k) const {
  LogScaled half = chi_sq_log_.at(k).sqrt();
  return half.value();
}

Complex OPData::eval_monic_phi(int k, Complex z) const {
  const VectorXc& c = phi_.at(k);
  Complex v(0.0, 0.0);
  for (int s = int(c.size()) - 1; s >= 0; --s) v = v * z + c[s];
  return v;
}

Complex OPData::eval_monic_hatphi(int k, Complex z) const {
  const VectorXc& c = hatphi_.at(k);
  Complex v(0.0, 0.0);
  for (int s = int(c.size()) - 1; s >= 0; --s) v = v * z + c[s];
  return v;
}

LogScaled OPData::toeplitz_logdet(int n) const {
  LogScaled d = LogScaled::one();
  for (int k = 0; k < n; ++k) d /= chi_sq_log_.at(k);
  return d;
}

double cd_residual(const OPData& op, int n, Complex z, Complex a) {
  if (z == Complex(0.0, 0.0) || a == Complex(0.0, 0.0))
    throw Error("hypothesis", "CD residual needs z, a != 0");
  Complex ainv = 1.0 / a, zinv = 1.0 / z;

  // (CD1): (1 - z/a) sum_{k<n} hatphi_k(1/a) phi_k(z)
  //        = a^{-n} phi_n(a) z^n hatphi_n(1/z) - hatphi_n(1/a) phi_n(z)
  Complex sum1(0.0, 0.0);
  for (int k = 0; k < n; ++k)
    sum1 += op.chi_sq(k) * op.eval_monic_hatphi(k, ainv) * op.eval_monic_phi(k, z);
  Complex lhs1 = (1.0 - ainv * z) * sum1;
  Complex term1 = op.chi_sq(n) * std::pow(ainv, n) * op.eval_monic_phi(n, a) *
                  std::pow(z, n) * op.eval_monic_hatphi(n, zinv);
  Complex term2 =
      op.chi_sq(n) * op.eval_monic_hatphi(n, ainv) * op.eval_monic_phi(n, z);
  Complex rhs1 = term1 - term2;
  // scale by the constituents so the a -> z degeneration (0 = 0) stays finite
  double scale1 = std::max({std::abs(lhs1), std::abs(term1), std::abs(term2)});
  double r1 = scale1 == 0.0 ? 0.0 : std::abs(lhs1 - rhs1) / scale1;

  // (CD2): sum_{k<n} hatphi_k(1/z) phi_k(z) =
  //   -n phi_n hatphi_n + z (hatphi_n phi_n' - phi_n d/dz[hatphi_n(1/z)])
  Complex sum2(0.0, 0.0);
  for (int k = 0; k < n; ++k)
    sum2 += op.chi_sq(k) * op.eval_monic_hatphi(k, zinv) * op.eval_monic_phi(k, z);
  const VectorXc& pc = op.monic_phi(n);
  const VectorXc& qc = op.monic_hatphi(n);
  Complex dphi(0.0, 0.0);
  for (int s = int(pc.size()) - 1; s >= 1; --s) dphi = dphi * z + double(s) * pc[s];
  // d/dz hatPhi_n(z^{-1}) = -z^{-2} hatPhi_n'(z^{-1})
  Complex dhat_at(0.0, 0.0);
  for (int s = int(qc.size()) - 1; s >= 1; --s)
    dhat_at = dhat_at * zinv + double(s) * qc[s];
  Complex dhat = -zinv * zinv * dhat_at;
  Complex phin = op.eval_monic_phi(n, z), hatn = op.eval_monic_hatphi(n, zinv);
  Complex part1 = op.chi_sq(n) * (-double(n)) * phin * hatn;
  Complex part2 = op.chi_sq(n) * z * (hatn * dphi - phin * dhat);
  Complex rhs2 = part1 + part2;
  double scale2 = std::max({std::abs(sum2), std::abs(part1), std::abs(part2)});
  double r2 = scale2 == 0.0 ? 0.0 : std::abs(sum2 - rhs2) / scale2;

  return std::max(r1, r2);
}

}  // namespace fhdet
