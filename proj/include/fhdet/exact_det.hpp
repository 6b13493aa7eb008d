#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fhdet/error.hpp"
#include "fhdet/log_scaled.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

// Two-sided coefficient window f_j, |j| <= jmax, as produced by
// fourier_coeffs. coeff(j) is zero outside the window.
class CoeffWindow {
 public:
  CoeffWindow() = default;
  explicit CoeffWindow(VectorXc two_sided)
      : coeffs_(std::move(two_sided)), jmax_((int(coeffs_.size()) - 1) / 2) {}

  int jmax() const { return jmax_; }
  Complex coeff(int j) const {
    return (std::abs(j) > jmax_) ? Complex(0.0, 0.0) : coeffs_[j + jmax_];
  }
  CoeffWindow scaled(Complex c) const { return CoeffWindow(VectorXc(c * coeffs_)); }

 private:
  VectorXc coeffs_;
  int jmax_ = 0;
};

struct LuOptions {
  double pivot_floor = 1e-280;  // |pivot| below this reports an exact zero
};

// D_n(f) = det(f_{j-k}), dense LU with partial pivoting; the phase is the
// running sum of pivot arguments (plus pi per row swap), not reduced mod 2pi.
// D_0 = 1.
LogScaled toeplitz_logdet(const CoeffWindow& f, int n, const LuOptions& opt = {});

// Hankel determinant det(m_{j+k})_{j,k<n} from moments m_0..m_{2n-2}.
// Reliable in double precision only up to n ~ 12 (Hilbert-type conditioning);
// rcond_out reports the LU condition estimate, and conditioning_warning is
// set when the estimated relative error exceeds 1e-6.
struct ConditionReport {
  double rcond = 1.0;
  bool warning = false;
};
LogScaled hankel_logdet(const VectorXc& moments, int n,
                        ConditionReport* report = nullptr,
                        const LuOptions& opt = {});

// det(f_{j-k} + f_{j+k}), det(f_{j-k} - f_{j+k+2}), det(f_{j-k} +- f_{j+k+1})
LogScaled tph_logdet(const CoeffWindow& f, int n, TphVariant variant,
                     const LuOptions& opt = {});

// ---------------------------------------------------------------------------
// Szego-Levinson recursion state (monic polynomials of both families)
// ---------------------------------------------------------------------------

class OPData {
 public:
  // Recursion driven by moment inner products; requires coefficients for
  // |j| <= nmax. Throws Error("breakdown") when
  // |1 - Phi_{k+1}(0) hatPhi_{k+1}(0)| falls below breakdown_floor
  // (callers should fall back to LU determinants).
  OPData(const CoeffWindow& f, int nmax, double breakdown_floor = 1e-10);

  int nmax() const { return nmax_; }

  // chi_k^2 = D_k / D_{k+1}
  Complex chi_sq(int k) const { return chi_sq_.at(k); }
  LogScaled chi_sq_log(int k) const { return chi_sq_log_.at(k); }
  // chi_k on the branch continuous in k (phase of chi^2 accumulated, halved)
  Complex chi(int k) const;

  // monic reflection values Phi_k(0), hatPhi_k(0) (k >= 1)
  Complex monic_phi0(int k) const { return phi0_.at(k); }
  Complex monic_hatphi0(int k) const { return hatphi0_.at(k); }
  // orthonormal phi_k(0) = chi_k Phi_k(0)
  Complex phi0(int k) const { return chi(k) * phi0_.at(k); }
  Complex hatphi0(int k) const { return chi(k) * hatphi0_.at(k); }

  // dense monic coefficient vectors (degree k -> k+1 entries, ascending)
  const VectorXc& monic_phi(int k) const { return phi_.at(k); }
  const VectorXc& monic_hatphi(int k) const { return hatphi_.at(k); }

  Complex eval_monic_phi(int k, Complex z) const;
  Complex eval_monic_hatphi(int k, Complex z) const;

  // D_n through the chi chain: D_n = prod_{k<n} chi_k^{-2}
  LogScaled toeplitz_logdet(int n) const;

 private:
  int nmax_;
  std::vector<Complex> chi_sq_, phi0_, hatphi0_;
  std::vector<LogScaled> chi_sq_log_;
  std::vector<VectorXc> phi_, hatphi_;
};

// Maximum relative residual of the two Christoffel-Darboux identities at
// (z, a), degree n <= op.nmax.
double cd_residual(const OPData& op, int n, Complex z, Complex a);

}  // namespace fhdet
