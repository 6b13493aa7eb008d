#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "fhdet/error.hpp"
#include "fhdet/log_scaled.hpp"

namespace fhdet {

using VectorXc = Eigen::VectorXcd;

// The four Toeplitz+Hankel determinant families:
//   PLUS   det(f_{j-k} + f_{j+k})
//   MINUS2 det(f_{j-k} - f_{j+k+2})
//   PLUS1  det(f_{j-k} + f_{j+k+1})
//   MINUS1 det(f_{j-k} - f_{j+k+1})
enum class TphVariant { PLUS, MINUS2, PLUS1, MINUS1 };

// Finite two-sided Fourier series V(z) = sum_{|k| <= K} V_k z^k.
class SmoothPart {
 public:
  SmoothPart() = default;
  explicit SmoothPart(int bandwidth) : coeffs_(VectorXc::Zero(2 * bandwidth + 1)) {}

  int bandwidth() const { return coeffs_.size() ? (int(coeffs_.size()) - 1) / 2 : 0; }
  Complex coeff(int k) const {
    if (coeffs_.size() == 0) return Complex(0.0, 0.0);
    int K = bandwidth();
    return (k < -K || k > K) ? Complex(0.0, 0.0) : coeffs_[k + K];
  }
  void set_coeff(int k, Complex v);
  bool is_even(double tol = 0.0) const;  // V_k == V_{-k}

  Complex eval(double theta) const;            // V(e^{i theta})
  Complex half_sum_plus(Complex z) const;      // sum_{k>=1} V_k z^k
  Complex half_sum_minus(Complex z) const;     // sum_{k<=-1} V_k z^k
  Complex v0() const { return coeff(0); }
  Complex szego_pairing() const;               // sum_{k>=1} k V_k V_{-k}

 private:
  VectorXc coeffs_;  // index k + bandwidth
};

// Wiener-Hopf split of e^V: b_+(z) = e^{sum_{k>=1} V_k z^k}, constant e^{V_0},
// b_-(z) = e^{sum_{k<=-1} V_k z^k}. Halves keep the series form; values are
// produced on demand.
struct WienerHopf {
  SmoothPart bplus;   // coefficients for k >= 1
  Complex v0;
  SmoothPart bminus;  // coefficients for k <= -1

  Complex bplus_at(Complex z) const { return std::exp(bplus.half_sum_plus(z)); }
  Complex bminus_at(Complex z) const { return std::exp(bminus.half_sum_minus(z)); }
};

WienerHopf wiener_hopf(const SmoothPart& v);

struct Singularity {
  double theta = 0.0;  // in [0, 2*pi)
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
};

// f(z) = e^{V(z)} z^{sum beta_j} prod_j |z - z_j|^{2 alpha_j}
//        g_{beta_j}(z) z_j^{-beta_j},  z_j = e^{i theta_j}.
// The singularity list always contains the theta = 0 entry first (possibly
// with alpha = beta = 0); thetas strictly increase; Re alpha_j > -1/2.
class FHSymbol {
 public:
  FHSymbol() : FHSymbol(SmoothPart(), {}) {}
  FHSymbol(SmoothPart smooth, std::vector<Singularity> singularities);

  const SmoothPart& smooth() const { return smooth_; }
  const std::vector<Singularity>& singularities() const { return sing_; }
  int count() const { return int(sing_.size()); }  // m + 1

  Complex beta_sum() const;
  bool is_even(double tol = 1e-13) const;

  // Pointwise value; unbounded at theta_j when Re alpha_j < 0
  // (Error("singularity_eval") within `guard` of such a point).
  Complex eval(double theta, double guard = 1e-14) const;

  // Value at a quadrature node of the panel (theta_l, theta_r) with accurate
  // endpoint distances d_l = theta - theta_l, d_r = theta_r - theta
  // (theta_r = 0 denotes the 2*pi wrap back to the first singularity).
  Complex eval_near(double theta, double theta_l, double d_l, double theta_r,
                    double d_r) const;

  // Same symbol with beta_j -> beta_j + shift_j (an FH-representation of it).
  FHSymbol shifted(const std::vector<int>& shifts) const;

 private:
  SmoothPart smooth_;
  std::vector<Singularity> sing_;
};

// Even weight on [-1, 1]:
// w(x) = e^{U(x)} prod_{j=0}^{r+1} |x - lambda_j|^{2 alpha_j} omega_j(x),
// lambda_0 = 1 > lambda_1 > ... > lambda_{r+1} = -1, beta_0 = beta_{r+1} = 0.
// smooth_u stores the induced even V (V(e^{i theta}) = U(cos theta)).
struct WeightNode {
  double lambda = 0.0;  // in (-1, 1)
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
};

class HankelWeight {
 public:
  HankelWeight() = default;
  HankelWeight(SmoothPart smooth_u, Complex alpha_plus1, Complex alpha_minus1,
               std::vector<WeightNode> nodes);

  const SmoothPart& smooth_u() const { return smooth_u_; }
  Complex alpha_plus1() const { return alpha_p_; }    // exponent at x = +1
  Complex alpha_minus1() const { return alpha_m_; }   // exponent at x = -1
  const std::vector<WeightNode>& nodes() const { return nodes_; }

  Complex eval(double x, double guard = 1e-14) const;
  Complex alpha_total() const;  // A = alpha_0 + sum_j alpha_j + alpha_{r+1}

 private:
  SmoothPart smooth_u_;
  Complex alpha_p_{0.0, 0.0}, alpha_m_{0.0, 0.0};
  std::vector<WeightNode> nodes_;  // strictly decreasing lambda
};

// Fourier coefficients f_j = (1/2pi) int f(e^{i theta}) e^{-i j theta} dtheta
// for |j| <= jmax, by singularity-split double-exponential quadrature,
// each accurate to abs_tol.
VectorXc fourier_coeffs(const FHSymbol& f, int jmax, double abs_tol = 1e-12);

// Moments m_k = int_{-1}^1 x^k w(x) dx, k = 0..kmax.
VectorXc hankel_moments(const HankelWeight& w, int kmax, double abs_tol = 1e-12);

// The even circle symbol generating w: w(x) = constant * f(e^{i theta}) /
// |sin theta|, x = cos theta, with mirrored singularities and halved endpoint
// exponents. Returns the symbol (fFH-normalised) and the constant C.
struct CircleLift {
  FHSymbol symbol;
  Complex constant;  // C = 2^{-2A-1} exp(2i sum beta_j arcsin lambda_j)
};
CircleLift circle_symbol_of_weight(const HankelWeight& w);

// ---------------------------------------------------------------------------
// Description files (shared by the CLI and test fixtures):
//   V.k = re[,im]           one line per smooth coefficient
//   [singularity] blocks with theta/alpha/beta     (symbol files)
//   alpha_plus1 / alpha_minus1 scalars and [node] blocks with
//   lambda/alpha/beta                              (weight files)
// ---------------------------------------------------------------------------
FHSymbol parse_symbol_file(const std::string& path);
HankelWeight parse_weight_file(const std::string& path);
FHSymbol parse_symbol_text(const std::string& text);
HankelWeight parse_weight_text(const std::string& text);

}  // namespace fhdet
