#include "fhdet/quadrature.hpp"

#include <cmath>

namespace fhdet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

DeNode make_node(double mid, double half, double u) {
  double t = 0.5 * kPi * std::sinh(u);
  double at = std::abs(t);
  double e2 = std::exp(-2.0 * at);         // e^{-2|t|}
  double dfar = 2.0 * half * e2 / (1.0 + e2);   // distance to the far... near endpoint
  double dnear = 2.0 * half / (1.0 + e2);       // distance to the other endpoint
  double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
  DeNode n;
  n.w = half * 0.5 * kPi * std::cosh(u) * sech2;
  if (t >= 0.0) {
    n.d_hi = dfar;
    n.d_lo = dnear;
    n.x = (mid + half) - dfar;
  } else {
    n.d_lo = dfar;
    n.d_hi = dnear;
    n.x = (mid - half) + dfar;
  }
  return n;
}
}  // namespace

std::vector<DeNode> tanh_sinh_level(double a, double b, int level, double u_max) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double h = tanh_sinh_step(level);
  std::vector<DeNode> nodes;
  if (level == 0) {
    int kmax = int(u_max / h);
    nodes.reserve(2 * kmax + 1);
    for (int k = -kmax; k <= kmax; ++k) nodes.push_back(make_node(mid, half, k * h));
  } else {
    int kmax = int(u_max / h);
    nodes.reserve(kmax);
    for (int k = 1; k <= kmax; k += 2) {
      nodes.push_back(make_node(mid, half, k * h));
      nodes.push_back(make_node(mid, half, -k * h));
    }
  }
  return nodes;
}

QuadratureResult tanh_sinh(const PanelIntegrand& f, double a, double b,
                           double abs_tol, int max_level, double u_max) {
  Complex sum(0.0, 0.0);
  QuadratureResult res;
  double diff = 0.0;
  for (int level = 0; level <= max_level; ++level) {
    double h = tanh_sinh_step(level);
    Complex add(0.0, 0.0);
    for (const DeNode& n : tanh_sinh_level(a, b, level, u_max))
      add += n.w * f(n.x, n.d_lo, n.d_hi);
    Complex next = (level == 0) ? h * add : 0.5 * sum + h * add;
    diff = std::abs(next - sum);
    sum = next;
    res.levels_used = level;
    if (level >= 3 && diff < abs_tol) {
      res.value = sum;
      res.error_estimate = diff;
      return res;
    }
  }
  throw Error("quadrature", "tanh-sinh did not reach the requested tolerance (last delta " +
                                std::to_string(diff) + ")");
}

double de_u_max_for_exponent(double kappa_min) {
  if (kappa_min >= 1.0) return 4.0;
  double u = std::log(64.0 / (kPi * kappa_min));
  return std::min(6.5, std::max(4.0, u + 1.0));
}

}  // namespace fhdet
