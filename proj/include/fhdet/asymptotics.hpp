#pragma once

#include <string>
#include <vector>

#include "fhdet/error.hpp"
#include "fhdet/fh_rep.hpp"
#include "fhdet/log_scaled.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

// A predicted determinant value with its factor breakdown. The named factors
// multiply back to `value` exactly (log-space additions); multi-term
// predictions (several FH-representations) collapse to a single "sum" entry.
struct AsymptoticResult {
  LogScaled value;
  std::vector<std::pair<std::string, LogScaled>> terms;
  double delta_scale = 0.0;   // max_{j,k} n^{2 Re(beta_j - beta_k - 1)}
  std::string error_order;    // reported order of the dropped error term

  LogScaled term(const std::string& name) const;
};

// nu_j of the polynomial asymptotics; (z_j/z_p)^{alpha_p} is taken as
// exp(i alpha_p (theta_j - theta_p)) with theta in [0, 2*pi).
struct NuFactor {
  std::vector<Complex> nu;
};
NuFactor nu_factors(const FHSymbol& f);

// Strong Szego limit: exp(n V_0 + sum_k k V_k V_{-k}).
AsymptoticResult szego_asym(const SmoothPart& v, int n);

// Main term for |||beta||| < 1 (no error factor). Preconditions:
// Re alpha_j > -1/2, |Re beta_j - Re beta_k| < 1, alpha_j +- beta_j not a
// negative integer.
AsymptoticResult ehrhardt_asym(const FHSymbol& f, int n);

// General (sum over the minimizing FH-representations M); requires M
// non-degenerate.
AsymptoticResult basor_tracy_asym(const FHSymbol& f, int n);

// D_n of the symbol with beta_{j0} shifted by +-1, via the extremal-index
// sum (valid for Re beta_j in (-1/2, 1/2], several singularities,
// alpha_j +- beta_j != 0).
AsymptoticResult bt1_asym(const FHSymbol& f, int j0, int sign, int n);

// Monic polynomial data predicted at degree n: chi_{n-1}^2 (with the e^{-V_0}
// normalisation), Phi_n(0), hatPhi_n(0), and the error scales of the three
// expansions.
struct PolyAsym {
  Complex chi_sq_nm1;
  Complex monic_phi0;
  Complex monic_hatphi0;
  double delta = 0.0;
  double chi_err_scale = 0.0;
  double phi_err_scale = 0.0;
  double hatphi_err_scale = 0.0;
};
PolyAsym poly_asym(const FHSymbol& f, int n);

// Hankel asymptotics on [-1,1]; interior Re beta_j in (-1/2, 1/2).
AsymptoticResult hankel_asym(const HankelWeight& w, int n);

// D_n(1) = 2^{n^2} prod k!^3/(n+k)!  (exact product for n <= 200, the
// displayed asymptotic beyond).
LogScaled hankel_det_one(int n);

// Toeplitz+Hankel asymptotics for an even symbol.
AsymptoticResult tph_asym(const FHSymbol& f, int n, TphVariant variant);

}  // namespace fhdet
