#pragma once

#include <functional>
#include <vector>

#include "fhdet/error.hpp"
#include "fhdet/log_scaled.hpp"

namespace fhdet {

// Integrands receive (x, x - a, b - x); the endpoint distances are computed
// without cancellation so algebraic singularities |t|^{2 Re alpha} with
// Re alpha > -1/2 can be evaluated accurately at double-exponential nodes.
using PanelIntegrand = std::function<Complex(double, double, double)>;

struct DeNode {
  double x;
  double w;      // quadrature weight (jacobian, without the step h)
  double d_lo;   // x - a
  double d_hi;   // b - x
};

// tanh-sinh nodes on (a, b). Level 0 is the coarse grid (step h0 = 0.5,
// including u = 0); level L > 0 returns only the new nodes (odd multiples of
// h0 / 2^L), so running sums nest: S_L = S_{L-1} / 2 + h_L * sum(new).
std::vector<DeNode> tanh_sinh_level(double a, double b, int level, double u_max);

inline double tanh_sinh_step(int level) {
  return 0.5 / double(1 << level);
}

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  int levels_used = 0;
};

// Adaptive tanh-sinh integration of f over (a, b); throws
// Error("quadrature") if the doubling test never reaches abs_tol.
QuadratureResult tanh_sinh(const PanelIntegrand& f, double a, double b,
                           double abs_tol, int max_level = 10,
                           double u_max = 4.0);

// u_max large enough for an endpoint factor t^{kappa-1} (kappa = 1+2 Re alpha)
double de_u_max_for_exponent(double kappa_min);

}  // namespace fhdet
