#pragma once

#include <complex>
#include <utility>

#include <Eigen/Core>

#include "fhdet/error.hpp"
#include "fhdet/log_scaled.hpp"

namespace fhdet {

using Matrix2c = Eigen::Matrix2cd;

// Principal branch of ln Gamma(z). exp(ln_gamma(z)) reproduces Gamma(z) to
// ~1e-14 relative away from the poles z = 0, -1, -2, ...
// Throws Error("gamma_pole") at (near-)poles.
Complex ln_gamma(Complex z);

// 1/Gamma(z), entire; exactly 0 at the poles of Gamma.
Complex rgamma(Complex z);

// Gamma(a)/Gamma(b) through logs; 0 whenever b is a pole of Gamma.
Complex gamma_ratio(Complex a, Complex b);

// Branch of ln G(z) (Barnes G) continuous on C cut along (-inf, 0],
// normalised by G(1) = 1.  G vanishes at z = 0, -1, -2, ...; these points
// raise Error("barnes_zero").
Complex ln_barnes_g(Complex z);

// A point zeta != 0 of the universal covering of the punctured plane.
// The argument is exact input data and is never reduced mod 2*pi; it encodes
// the covering sheet.
struct CoveringPoint {
  double log_modulus = 0.0;
  double argument = 0.0;  // radians, unrestricted

  static CoveringPoint from_polar(double modulus, double argument) {
    return {std::log(modulus), argument};
  }
  Complex value() const { return std::exp(Complex(log_modulus, argument)); }
  // zeta^w on this sheet
  Complex power(Complex w) const {
    return std::exp(w * Complex(log_modulus, argument));
  }
  CoveringPoint rotated(double dargument) const {
    return {log_modulus, argument + dargument};
  }
};

// Tricomi's confluent hypergeometric function psi(a, c, zeta), analytically
// continued to the covering sheet encoded by zeta.argument.  Matches the
// standard z->0 expansion and behaves like zeta^{-a} (1 + O(1/zeta)) for
// large |zeta| with |arg zeta| < 3*pi/2.
Complex psi_chf(Complex a, Complex c, const CoveringPoint& zeta);

// Sectors between the eight rays of the local-parametrix contour.  Covering
// arguments: I = (pi/2, 3pi/4), II = (3pi/4, pi), III = (pi, 5pi/4),
// IV = (5pi/4, 3pi/2), V = (3pi/2, 7pi/4), VI = (7pi/4, 2pi),
// VII = (2pi, 9pi/4), VIII = (9pi/4, 5pi/2).  Ray k separates sectors k-1
// and k; ray 1 (plane angle pi/2) closes the circuit between VIII and the
// next sheet's I.
enum class Sector { I, II, III, IV, V, VI, VII, VIII };

struct ParametrixInput {
  Complex alpha;
  Complex beta;
  Sector sector = Sector::I;
};

// Constant jump matrix J_k attached to ray k (k = 1..8).
Matrix2c parametrix_jump(int ray, Complex alpha, Complex beta);

// Covering argument ranges of the sector (lo, hi).
std::pair<double, double> sector_argument_range(Sector s);

// The 2x2 local parametrix Psi(zeta) in the requested sector, built from the
// sector-I confluent-hypergeometric solution by applying the constant jump
// matrices.  det Psi = exp(-i*pi*(alpha-beta)).
// Preconditions: Re alpha > -1/2, alpha +- beta not a negative integer.
Matrix2c parametrix_matrix(const ParametrixInput& p, const CoveringPoint& zeta);

// Large-|zeta| model of the sector-I/II parametrix including the 1/zeta
// correction: [I + A/zeta] zeta^{-beta s3} e^{-zeta s3/2} D.
Matrix2c parametrix_large_zeta(Complex alpha, Complex beta,
                               const CoveringPoint& zeta);

}  // namespace fhdet
