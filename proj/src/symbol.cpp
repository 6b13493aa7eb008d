#include "fhdet/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fhdet/quadrature.hpp"

namespace fhdet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);
}  // namespace

// ---------------------------------------------------------------------------
// SmoothPart
// ---------------------------------------------------------------------------

void SmoothPart::set_coeff(int k, Complex v) {
  int K = bandwidth();
  if (coeffs_.size() == 0 || std::abs(k) > K) {
    VectorXc grown = VectorXc::Zero(2 * std::abs(k) + 1);
    int shift = std::abs(k) - K;
    for (int i = 0; i < coeffs_.size(); ++i) grown[i + shift] = coeffs_[i];
    coeffs_ = std::move(grown);
    K = std::abs(k);
  }
  coeffs_[k + K] = v;
}

bool SmoothPart::is_even(double tol) const {
  int K = bandwidth();
  for (int k = 1; k <= K; ++k)
    if (std::abs(coeff(k) - coeff(-k)) > tol) return false;
  return true;
}

Complex SmoothPart::eval(double theta) const {
  int K = bandwidth();
  Complex z = std::exp(kI * theta), s = coeff(0);
  Complex zp = 1.0, zm = 1.0;
  for (int k = 1; k <= K; ++k) {
    zp *= z;
    zm /= z;
    s += coeff(k) * zp + coeff(-k) * zm;
  }
  return s;
}

Complex SmoothPart::half_sum_plus(Complex z) const {
  Complex s(0.0, 0.0), zp(1.0, 0.0);
  for (int k = 1; k <= bandwidth(); ++k) {
    zp *= z;
    s += coeff(k) * zp;
  }
  return s;
}

Complex SmoothPart::half_sum_minus(Complex z) const {
  Complex s(0.0, 0.0), zm(1.0, 0.0);
  for (int k = 1; k <= bandwidth(); ++k) {
    zm /= z;
    s += coeff(-k) * zm;
  }
  return s;
}

Complex SmoothPart::szego_pairing() const {
  Complex s(0.0, 0.0);
  for (int k = 1; k <= bandwidth(); ++k) s += double(k) * coeff(k) * coeff(-k);
  return s;
}

WienerHopf wiener_hopf(const SmoothPart& v) {
  WienerHopf wh;
  wh.v0 = v.v0();
  int K = v.bandwidth();
  wh.bplus = SmoothPart(K);
  wh.bminus = SmoothPart(K);
  for (int k = 1; k <= K; ++k) {
    wh.bplus.set_coeff(k, v.coeff(k));
    wh.bminus.set_coeff(-k, v.coeff(-k));
  }
  return wh;
}

// ---------------------------------------------------------------------------
// FHSymbol
// ---------------------------------------------------------------------------

FHSymbol::FHSymbol(SmoothPart smooth, std::vector<Singularity> singularities)
    : smooth_(std::move(smooth)), sing_(std::move(singularities)) {
  std::sort(sing_.begin(), sing_.end(),
            [](const Singularity& a, const Singularity& b) { return a.theta < b.theta; });
  if (sing_.empty() || sing_.front().theta != 0.0)
    sing_.insert(sing_.begin(), Singularity{0.0, {0.0, 0.0}, {0.0, 0.0}});
  for (size_t j = 0; j < sing_.size(); ++j) {
    if (sing_[j].theta < 0.0 || sing_[j].theta >= 2.0 * kPi)
      throw Error("hypothesis", "singularity angle outside [0, 2*pi)");
    if (j > 0 && sing_[j].theta <= sing_[j - 1].theta)
      throw Error("hypothesis", "singularity angles must strictly increase");
    if (sing_[j].alpha.real() <= -0.5)
      throw Error("hypothesis", "Re alpha must exceed -1/2 for integrability");
  }
}

Complex FHSymbol::beta_sum() const {
  Complex s(0.0, 0.0);
  for (const auto& sg : sing_) s += sg.beta;
  return s;
}

bool FHSymbol::is_even(double tol) const {
  if (!smooth_.is_even(tol)) return false;
  // every singularity off the real axis needs a mirror with equal alpha and
  // opposite beta; entries at theta = 0, pi must have beta = 0
  for (const auto& s : sing_) {
    if (s.theta == 0.0 || std::abs(s.theta - kPi) < 1e-15) {
      if (std::abs(s.beta) > tol) return false;
      continue;
    }
    double mirror = 2.0 * kPi - s.theta;
    bool found = false;
    for (const auto& t : sing_)
      if (std::abs(t.theta - mirror) < 1e-12) {
        if (std::abs(t.alpha - s.alpha) > tol || std::abs(t.beta + s.beta) > tol)
          return false;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

Complex FHSymbol::eval(double theta, double guard) const {
  theta = theta - 2.0 * kPi * std::floor(theta / (2.0 * kPi));
  Complex lg = smooth_.eval(theta) + kI * theta * beta_sum();
  for (const auto& s : sing_) {
    double half = 0.5 * (theta - s.theta);
    double mod = std::abs(2.0 * std::sin(half));
    if (mod < guard && s.alpha != Complex(0.0, 0.0)) {
      if (s.alpha.real() < 0.0)
        throw Error("singularity_eval", "symbol unbounded at theta_j");
      if (mod == 0.0) return Complex(0.0, 0.0);  // genuine zero, Re alpha > 0
    }
    if (s.alpha != Complex(0.0, 0.0)) lg += 2.0 * s.alpha * std::log(mod);
    // jump factor: e^{i pi beta} strictly before theta_j, e^{-i pi beta} at
    // and after it (half-open convention of the jump definition)
    lg += (theta < s.theta ? kI * kPi * s.beta : -kI * kPi * s.beta);
    lg += -kI * s.theta * s.beta;  // z_j^{-beta_j}
  }
  return std::exp(lg);
}

Complex FHSymbol::eval_near(double theta, double theta_l, double d_l,
                            double theta_r, double d_r) const {
  Complex lg = smooth_.eval(theta) + kI * theta * beta_sum();
  for (const auto& s : sing_) {
    // The side of the jump is decided by the panel geometry, never by
    // comparing theta with theta_j: nodes hugging an endpoint round onto it
    // and a flipped jump factor would bias the integral.
    double dist;
    bool before;  // node lies strictly before theta_j
    if (s.theta == theta_l && s.theta == theta_r) {
      dist = std::min(d_l, d_r);  // single singularity bordering both ends
      before = false;
    } else if (s.theta == theta_l) {
      dist = d_l;
      before = false;
    } else if (s.theta == theta_r) {
      dist = d_r;
      // theta_r = 0 marks the 2*pi wrap back to the first singularity; the
      // panel then lies after it
      before = theta_r != 0.0;
    } else {
      dist = theta - s.theta;
      before = theta < s.theta;
    }
    if (s.alpha != Complex(0.0, 0.0)) {
      double mod = std::abs(2.0 * std::sin(0.5 * dist));
      lg += 2.0 * s.alpha * std::log(mod);
    }
    lg += (before ? kI * kPi * s.beta : -kI * kPi * s.beta);
    lg += -kI * s.theta * s.beta;
  }
  return std::exp(lg);
}

FHSymbol FHSymbol::shifted(const std::vector<int>& shifts) const {
  if (shifts.size() != sing_.size())
    throw Error("hypothesis", "shift vector length mismatch");
  std::vector<Singularity> s = sing_;
  for (size_t j = 0; j < s.size(); ++j) s[j].beta += double(shifts[j]);
  return FHSymbol(smooth_, std::move(s));
}

// ---------------------------------------------------------------------------
// HankelWeight
// ---------------------------------------------------------------------------

HankelWeight::HankelWeight(SmoothPart smooth_u, Complex alpha_plus1,
                           Complex alpha_minus1, std::vector<WeightNode> nodes)
    : smooth_u_(std::move(smooth_u)),
      alpha_p_(alpha_plus1),
      alpha_m_(alpha_minus1),
      nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const WeightNode& a, const WeightNode& b) { return a.lambda > b.lambda; });
  if (!smooth_u_.is_even(1e-13))
    throw Error("hypothesis", "weight smooth part must be even (V_k = V_{-k})");
  if (alpha_p_.real() <= -0.5 || alpha_m_.real() <= -0.5)
    throw Error("hypothesis", "endpoint exponents need Re alpha > -1/2");
  for (size_t j = 0; j < nodes_.size(); ++j) {
    if (!(nodes_[j].lambda > -1.0 && nodes_[j].lambda < 1.0))
      throw Error("hypothesis", "interior nodes must lie in (-1, 1)");
    if (j > 0 && nodes_[j].lambda >= nodes_[j - 1].lambda)
      throw Error("hypothesis", "node positions must strictly decrease");
    if (nodes_[j].alpha.real() <= -0.5)
      throw Error("hypothesis", "Re alpha must exceed -1/2");
    double rb = nodes_[j].beta.real();
    if (rb <= -0.5 || rb > 0.5)
      throw Error("hypothesis", "interior jumps need Re beta in (-1/2, 1/2]");
  }
}

Complex HankelWeight::eval(double x, double guard) const {
  if (x <= -1.0 || x >= 1.0)
    throw Error("singularity_eval", "weight evaluated outside (-1, 1)");
  Complex lg = smooth_u_.eval(std::acos(x));
  lg += 2.0 * alpha_p_ * std::log(1.0 - x) + 2.0 * alpha_m_ * std::log(1.0 + x);
  for (const auto& n : nodes_) {
    double d = std::abs(x - n.lambda);
    if (d < guard && n.alpha != Complex(0.0, 0.0)) {
      if (n.alpha.real() < 0.0)
        throw Error("singularity_eval", "weight unbounded at lambda_j");
      if (d == 0.0) return Complex(0.0, 0.0);
    }
    if (n.alpha != Complex(0.0, 0.0)) lg += 2.0 * n.alpha * std::log(d);
    lg += (x <= n.lambda ? kI * kPi * n.beta : -kI * kPi * n.beta);
  }
  return std::exp(lg);
}

Complex HankelWeight::alpha_total() const {
  Complex a = alpha_p_ + alpha_m_;
  for (const auto& n : nodes_) a += n.alpha;
  return a;
}

// ---------------------------------------------------------------------------
// Fourier coefficients and moments
// ---------------------------------------------------------------------------

namespace {

// Family integration: evaluate `weighted` at double-exponential nodes of the
// panel once per node, and accumulate kernel-weighted sums for all outputs.
// Kernel j at node x contributes weighted(x, dlo, dhi) * kernel(j, x).
struct FamilyPanel {
  double a, b;
  std::function<Complex(const DeNode&)> weighted;
};

void integrate_family(const std::vector<FamilyPanel>& panels, int count,
                      const std::function<Complex(int, double)>& kernel,
                      double abs_tol, int max_level, double u_max,
                      VectorXc& out) {
  out = VectorXc::Zero(count);
  std::vector<VectorXc> sums(panels.size(), VectorXc::Zero(count));
  for (size_t p = 0; p < panels.size(); ++p) {
    double delta = 0.0;
    for (int level = 0; level <= max_level; ++level) {
      double h = tanh_sinh_step(level);
      VectorXc add = VectorXc::Zero(count);
      for (const DeNode& n : tanh_sinh_level(panels[p].a, panels[p].b, level, u_max)) {
        Complex wf = n.w * panels[p].weighted(n);
        if (wf == Complex(0.0, 0.0)) continue;
        for (int j = 0; j < count; ++j) add[j] += wf * kernel(j, n.x);
      }
      VectorXc next = (level == 0) ? VectorXc(h * add) : VectorXc(0.5 * sums[p] + h * add);
      delta = (next - sums[p]).cwiseAbs().maxCoeff();
      sums[p] = next;
      if (level >= 4 && delta < abs_tol) break;
      if (level == max_level)
        throw Error("quadrature",
                    "panel [" + std::to_string(panels[p].a) + ", " +
                        std::to_string(panels[p].b) +
                        "] did not converge; last delta " + std::to_string(delta));
    }
    out += sums[p];
  }
}

}  // namespace

VectorXc fourier_coeffs(const FHSymbol& f, int jmax, double abs_tol) {
  const auto& sing = f.singularities();
  double kappa_min = 1.0;
  for (const auto& s : sing) kappa_min = std::min(kappa_min, 1.0 + 2.0 * s.alpha.real());
  double u_max = de_u_max_for_exponent(kappa_min);

  // split at every theta_j; the two singular factors adjacent to a panel are
  // evaluated through the cancellation-free endpoint distances
  std::vector<FamilyPanel> panels;
  int m1 = f.count();
  for (int p = 0; p < m1; ++p) {
    double a = sing[p].theta;
    double b = (p + 1 < m1) ? sing[p + 1].theta : 2.0 * kPi;
    double theta_l = sing[p].theta;
    double theta_r = sing[(p + 1) % m1].theta;  // 0 means the 2*pi wrap
    FamilyPanel panel;
    panel.a = a;
    panel.b = b;
    panel.weighted = [&f, theta_l, theta_r](const DeNode& n) -> Complex {
      return f.eval_near(n.x, theta_l, n.d_lo, theta_r, n.d_hi) / (2.0 * kPi);
    };
    panels.push_back(std::move(panel));
  }

  VectorXc half;  // kernels e^{-i j theta}, j = -jmax..jmax
  integrate_family(
      panels, 2 * jmax + 1,
      [&](int idx, double theta) { return std::exp(-kI * double(idx - jmax) * theta); },
      abs_tol, 11, u_max, half);
  return half;
}

VectorXc hankel_moments(const HankelWeight& w, int kmax, double abs_tol) {
  double kappa_min = std::min(1.0 + 2.0 * w.alpha_plus1().real(),
                              1.0 + 2.0 * w.alpha_minus1().real());
  for (const auto& n : w.nodes())
    kappa_min = std::min(kappa_min, 1.0 + 2.0 * n.alpha.real());
  double u_max = de_u_max_for_exponent(kappa_min);

  std::vector<double> cuts{-1.0};
  for (auto it = w.nodes().rbegin(); it != w.nodes().rend(); ++it)
    cuts.push_back(it->lambda);
  cuts.push_back(1.0);

  std::vector<FamilyPanel> panels;
  for (size_t p = 0; p + 1 < cuts.size(); ++p) {
    double a = cuts[p], b = cuts[p + 1];
    FamilyPanel panel;
    panel.a = a;
    panel.b = b;
    panel.weighted = [&w, a, b](const DeNode& n) -> Complex {
      Complex lg = w.smooth_u().eval(std::acos(std::min(1.0, std::max(-1.0, n.x))));
      // endpoint factors via accurate distances
      double d_to_p1 = (b == 1.0) ? n.d_hi : 1.0 - n.x;
      double d_to_m1 = (a == -1.0) ? n.d_lo : n.x + 1.0;
      lg += 2.0 * w.alpha_plus1() * std::log(d_to_p1) +
            2.0 * w.alpha_minus1() * std::log(d_to_m1);
      for (const auto& nd : w.nodes()) {
        // distances and jump sides from the panel geometry (nodes hugging an
        // endpoint round onto it in floating point)
        double d;
        bool left_of_node;
        if (nd.lambda == a) {
          d = n.d_lo;
          left_of_node = false;
        } else if (nd.lambda == b) {
          d = n.d_hi;
          left_of_node = true;
        } else {
          d = std::abs(n.x - nd.lambda);
          left_of_node = n.x <= nd.lambda;
        }
        if (nd.alpha != Complex(0.0, 0.0)) lg += 2.0 * nd.alpha * std::log(d);
        lg += (left_of_node ? kI * kPi * nd.beta : -kI * kPi * nd.beta);
      }
      return std::exp(lg);
    };
    panels.push_back(std::move(panel));
  }

  VectorXc out;
  integrate_family(
      panels, kmax + 1, [](int k, double x) { return Complex(std::pow(x, k), 0.0); },
      abs_tol, 11, u_max, out);
  return out;
}

CircleLift circle_symbol_of_weight(const HankelWeight& w) {
  std::vector<Singularity> sing;
  sing.push_back({0.0, 2.0 * w.alpha_plus1() + 0.5, {0.0, 0.0}});
  for (const auto& n : w.nodes())
    sing.push_back({std::acos(n.lambda), n.alpha, -n.beta});
  sing.push_back({kPi, 2.0 * w.alpha_minus1() + 0.5, {0.0, 0.0}});
  for (auto it = w.nodes().rbegin(); it != w.nodes().rend(); ++it)
    sing.push_back({2.0 * kPi - std::acos(it->lambda), it->alpha, it->beta});

  Complex phase(0.0, 0.0);
  for (const auto& n : w.nodes()) phase += n.beta * std::asin(n.lambda);
  Complex constant =
      std::exp(-(2.0 * w.alpha_total() + 1.0) * std::log(2.0) + 2.0 * kI * phase);
  return CircleLift{FHSymbol(w.smooth_u(), std::move(sing)), constant};
}

// ---------------------------------------------------------------------------
// Description files
// ---------------------------------------------------------------------------

namespace {

Complex parse_complex(const std::string& text) {
  std::string s = text;
  auto comma = s.find(',');
  if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
  return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

struct KvBlocks {
  SmoothPart smooth;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> blocks;
  std::vector<std::pair<std::string, std::string>> top;
};

KvBlocks parse_kv(const std::string& text) {
  KvBlocks kv;
  std::istringstream in(text);
  std::string line;
  std::string current_block;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto strip = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      size_t e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      auto close = line.find(']');
      if (close == std::string::npos) throw Error("io", "unterminated block header");
      kv.blocks.push_back({strip(line.substr(1, close - 1)), {}});
      current_block = kv.blocks.back().first;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("io", "expected key = value: " + line);
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (key.rfind("V.", 0) == 0) {
      kv.smooth.set_coeff(std::stoi(key.substr(2)), parse_complex(val));
    } else if (kv.blocks.empty()) {
      kv.top.push_back({key, val});
    } else {
      kv.blocks.back().second.push_back({key, val});
    }
  }
  return kv;
}

}  // namespace

FHSymbol parse_symbol_text(const std::string& text) {
  KvBlocks kv = parse_kv(text);
  std::vector<Singularity> sing;
  for (const auto& blk : kv.blocks) {
    if (blk.first != "singularity")
      throw Error("io", "unexpected block [" + blk.first + "] in symbol file");
    Singularity s;
    for (const auto& [k, v] : blk.second) {
      if (k == "theta")
        s.theta = std::stod(v);
      else if (k == "alpha")
        s.alpha = parse_complex(v);
      else if (k == "beta")
        s.beta = parse_complex(v);
      else
        throw Error("io", "unknown key " + k);
    }
    sing.push_back(s);
  }
  return FHSymbol(kv.smooth, std::move(sing));
}

HankelWeight parse_weight_text(const std::string& text) {
  KvBlocks kv = parse_kv(text);
  Complex ap(0.0, 0.0), am(0.0, 0.0);
  for (const auto& [k, v] : kv.top) {
    if (k == "alpha_plus1")
      ap = parse_complex(v);
    else if (k == "alpha_minus1")
      am = parse_complex(v);
    else
      throw Error("io", "unknown key " + k);
  }
  std::vector<WeightNode> nodes;
  for (const auto& blk : kv.blocks) {
    if (blk.first != "node")
      throw Error("io", "unexpected block [" + blk.first + "] in weight file");
    WeightNode n;
    for (const auto& [k, v] : blk.second) {
      if (k == "lambda")
        n.lambda = std::stod(v);
      else if (k == "alpha")
        n.alpha = parse_complex(v);
      else if (k == "beta")
        n.beta = parse_complex(v);
      else
        throw Error("io", "unknown key " + k);
    }
    nodes.push_back(n);
  }
  return HankelWeight(kv.smooth, ap, am, std::move(nodes));
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

FHSymbol parse_symbol_file(const std::string& path) {
  return parse_symbol_text(slurp(path));
}
HankelWeight parse_weight_file(const std::string& path) {
  return parse_weight_text(slurp(path));
}

}  // namespace fhdet
