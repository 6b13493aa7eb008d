#pragma once

#include <string>

#include "fhdet/asymptotics.hpp"
#include "fhdet/exact_det.hpp"
#include "fhdet/symbol.hpp"

namespace fhdet {

struct IdentityReport {
  std::string name;
  int n = 0;
  LogScaled lhs, rhs;
  double relative_residual = 0.0;
  bool pass = false;
  double threshold = 0.0;
  std::string note;
};

// Hankel-weight data of an even circle symbol:
// weight(cos theta) = constant * f(e^{i theta}) / |sin theta|
// (the inverse of circle_symbol_of_weight).
struct WeightLift {
  HankelWeight weight;
  Complex constant;
};
WeightLift weight_of_circle_symbol(const FHSymbol& f);

// D_n(z^ell f) = (-1)^{ell n} F_n / prod_{j<ell} j! * D_n(f), F_n the
// derivative determinant of the monic polynomials at 0 (hat family for
// ell < 0). Brute-force LU on the shifted coefficients versus the formula.
IdentityReport check_shift_identity(const FHSymbol& f, int ell, int n,
                                    double threshold = 1e-8);

// D_n(w)^2 = pi^{2n} / 4^{(n-1)^2} (1 + Phi_{2n}(0))^2 D_{2n}(f) /
//            (Phi_{2n}(1) Phi_{2n}(-1))
IdentityReport check_hankel_toeplitz(const HankelWeight& w, int n,
                                     double threshold = 1e-8);

// D_n(w) through the Toeplitz side; the square-root sign is anchored by
// direct LU at small n and extended by phase continuity in n.
LogScaled route_hankel_via_toeplitz(const HankelWeight& w, int n);

// The four Toeplitz+Hankel reductions to endpoint-modified Hankel
// determinants.
IdentityReport check_tph_reduction(const FHSymbol& f, int n, TphVariant variant,
                                   double threshold = 1e-8);

// Szego map: kappa_n = 2^n chi_{2n} sqrt((1-a_{2n-1})/(2 pi)), orthogonality
// of p_n built from Phi_{2n}, and the (1-a_{2k-1})^2 relation at the
// endpoints.
IdentityReport check_szego_map(const FHSymbol& f, int n,
                               double threshold = 1e-8);

// Christoffel-Darboux residual packaged as a report.
IdentityReport check_cd(const FHSymbol& f, int n, Complex z, Complex a,
                        double threshold = 1e-9);

}  // namespace fhdet
