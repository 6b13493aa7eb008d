#include "fhdet/special_functions.hpp"

#include <array>
#include <cmath>

#include <Eigen/LU>

namespace fhdet {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

// zeta'(-1); ln A (Glaisher) = 1/12 - zeta'(-1)
constexpr double kZetaPrimeM1 = -0.16542114370045092921391966024278064;
constexpr double kLnGlaisher = 1.0 / 12.0 - kZetaPrimeM1;

bool near_nonpositive_integer(Complex z, double tol = 1e-12) {
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

// ln of the Lanczos sum; valid for Re z >= 0.5
Complex lanczos_ln_gamma(Complex z) {
  static const double g = 7.0;
  static const std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
      771.32342877765313,   -176.61502916214059, 12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  Complex x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + double(i));
  Complex t = z + g + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// branch of ln sin(pi z) making the reflection formula produce the branch of
// ln Gamma that is continuous off (-inf, 0]
Complex ln_sin_pi(Complex z) {
  if (z.imag() >= 0.0) {
    Complex w = Complex(0.0, 2.0 * kPi) * z;
    return std::log(0.5) + kI * (kPi / 2.0) - kI * kPi * z +
           std::log(1.0 - std::exp(w));
  }
  return std::conj(ln_sin_pi(std::conj(z)));
}

}  // namespace

Complex ln_gamma(Complex z) {
  if (near_nonpositive_integer(z))
    throw Error("gamma_pole", "ln_gamma at non-positive integer");
  if (z.real() >= 0.5) return lanczos_ln_gamma(z);
  return std::log(kPi) - ln_sin_pi(z) - lanczos_ln_gamma(1.0 - z);
}

Complex rgamma(Complex z) {
  if (near_nonpositive_integer(z, 1e-14)) return Complex(0.0, 0.0);
  return std::exp(-ln_gamma(z));
}

Complex gamma_ratio(Complex a, Complex b) {
  if (near_nonpositive_integer(b, 1e-14)) {
    if (near_nonpositive_integer(a, 1e-14))
      throw Error("gamma_pole", "gamma_ratio with poles in both arguments");
    return Complex(0.0, 0.0);
  }
  return std::exp(ln_gamma(a) - ln_gamma(b));
}

Complex ln_barnes_g(Complex z) {
  if (near_nonpositive_integer(z))
    throw Error("barnes_zero", "G vanishes at non-positive integers");
  // shift into the far right half-plane, then the Bernoulli expansion
  int k = 0;
  if (z.real() < 25.0) k = int(std::ceil(25.0 - z.real()));
  Complex shift(0.0, 0.0);
  for (int i = 0; i < k; ++i) shift += ln_gamma(z + double(i));
  Complex w = z + double(k) - 1.0;  // ln G(1+w) with Re w >= 24
  Complex lw = std::log(w);
  // DLMF 5.17.5
  Complex s = 0.25 * w * w + w * ln_gamma(w + 1.0) -
              (0.5 * w * (w + 1.0) + 1.0 / 12.0) * lw - kLnGlaisher;
  static const std::array<double, 6> coef = {
      -1.0 / 720.0,      1.0 / 5040.0,       -1.0 / 10080.0,
      1.0 / 9504.0,      -691.0 / 3603600.0, 1.0 / 1872.0};
  Complex w2 = w * w, pw = w2;
  for (double c : coef) {
    s += c / pw;
    pw *= w2;
  }
  return s - shift;
}

// ---------------------------------------------------------------------------
// Tricomi psi(a, c, zeta) on the universal covering
// ---------------------------------------------------------------------------

namespace {

constexpr double kAsymRadius = 34.0;
constexpr double kKummerReLimit = 8.0;
constexpr double kPlainSeriesRadius = 8.0;
constexpr int kMaxSeriesTerms = 600;

// ---- double-double helpers for the cancellation-heavy series region ----
// The Kummer series loses ~e^{|z|} in the annulus 14 < |z| < 34, so the sum
// is accumulated in ~31-digit double-double arithmetic there. Only the
// series needs the extra precision; the connection prefactors multiply
// O(1)-balanced terms in that region.
struct DD {
  double hi = 0.0, lo = 0.0;
};

inline DD dd_two_sum(double x, double y) {
  double s = x + y;
  double b = s - x;
  return {s, (x - (s - b)) + (y - b)};
}
inline DD dd_quick(double h, double l) {
  double s = h + l;
  return {s, l - (s - h)};
}
inline DD dd_add(DD x, DD y) {
  DD s = dd_two_sum(x.hi, y.hi);
  return dd_quick(s.hi, s.lo + x.lo + y.lo);
}
inline DD dd_mul(DD x, DD y) {
  double p = x.hi * y.hi;
  double e = std::fma(x.hi, y.hi, -p);
  return dd_quick(p, e + x.hi * y.lo + x.lo * y.hi);
}
inline DD dd_from(double x) { return {x, 0.0}; }
inline DD dd_div(DD x, DD y) {
  double q1 = x.hi / y.hi;
  DD r = dd_add(x, dd_mul(dd_from(-q1), y));
  double q2 = r.hi / y.hi;
  DD r2 = dd_add(r, dd_mul(dd_from(-q2), y));
  double q3 = r2.hi / y.hi;
  return dd_quick(q1, q2 + q3);
}
inline DD dd_neg(DD x) { return {-x.hi, -x.lo}; }

struct DDC {
  DD re, im;
};
inline DDC ddc_from(Complex z) { return {dd_from(z.real()), dd_from(z.imag())}; }
inline DDC ddc_add(DDC x, DDC y) {
  return {dd_add(x.re, y.re), dd_add(x.im, y.im)};
}
inline DDC ddc_mul(DDC x, DDC y) {
  DD re = dd_add(dd_mul(x.re, y.re), dd_neg(dd_mul(x.im, y.im)));
  DD im = dd_add(dd_mul(x.re, y.im), dd_mul(x.im, y.re));
  return {re, im};
}
inline DDC ddc_div(DDC x, DDC y) {
  DD den = dd_add(dd_mul(y.re, y.re), dd_mul(y.im, y.im));
  DDC num = ddc_mul(x, DDC{y.re, dd_neg(y.im)});
  return {dd_div(num.re, den), dd_div(num.im, den)};
}
inline Complex ddc_value(DDC x) {
  return Complex(x.re.hi + x.re.lo, x.im.hi + x.im.lo);
}

inline DDC ddc_scale(DDC x, DD s) {
  return {dd_mul(x.re, s), dd_mul(x.im, s)};
}

Complex kummer_m_dd(Complex a, Complex c, Complex z) {
  DDC sum = ddc_from(Complex(1.0, 0.0));
  DDC term = sum;
  DDC zz = ddc_from(z);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    // a + k and c + k held exactly as double-doubles
    DDC ak{dd_two_sum(a.real(), double(k)), dd_from(a.imag())};
    DDC ck{dd_two_sum(c.real(), double(k)), dd_from(c.imag())};
    term = ddc_mul(term, ddc_div(ak, ck));
    term = ddc_mul(term, zz);
    DD inv = dd_div(dd_from(1.0), dd_from(double(k + 1)));
    term = ddc_scale(term, inv);
    sum = ddc_add(sum, term);
    double tm = std::abs(ddc_value(term));
    if (tm < 1e-34 * std::max(1.0, std::abs(ddc_value(sum))) && k > std::abs(z))
      break;
  }
  return ddc_value(sum);
}

// Kummer M(a, c, z) by power series (entire in z; c away from non-positive
// integers up to the detour below).
Complex kummer_m(Complex a, Complex c, Complex z) {
  if (std::abs(z) > kPlainSeriesRadius) return kummer_m_dd(a, c, z);
  Complex sum(1.0, 0.0), term(1.0, 0.0);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + double(k)) / (c + double(k)) * z / double(k + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > std::abs(z)) break;
  }
  return sum;
}

// two-term connection psi = G1*M(a,c,z) + G2*zeta^{1-c}*M(a-c+1,2-c,z);
// requires c bounded away from the integers
Complex kummer_pair(Complex a, Complex c, const CoveringPoint& zeta) {
  Complex z = zeta.value();
  Complex t1 = std::exp(ln_gamma(1.0 - c)) * rgamma(1.0 + a - c) * kummer_m(a, c, z);
  Complex t2 = std::exp(ln_gamma(c - 1.0)) * rgamma(a) * zeta.power(1.0 - c) *
               kummer_m(a - c + 1.0, 2.0 - c, z);
  return t1 + t2;
}

// Laplace integral (1/Gamma(a)) int_0^inf e^{-zt} t^{a-1} (1+t)^{c-a-1} dt
// via an exp-sinh rule; requires Re a > 0.25 and Re z > 0.
Complex laplace_integral_raw(Complex a, Complex c, Complex z) {
  auto node_term = [&](double u) -> Complex {
    double s = (kPi / 2.0) * std::sinh(u);
    if (s > 690.0 || s < -690.0) return Complex(0.0, 0.0);
    double t = std::exp(s);
    if (z.real() * t > 745.0) return Complex(0.0, 0.0);
    // e^{-zt} t^{a} (1+t)^{c-a-1} * (pi/2) cosh(u)  (the extra t is the
    // jacobian dt = t du ... merged with t^{a-1})
    return std::exp(-z * t + a * std::log(t) + (c - a - 1.0) * std::log1p(t)) *
           (kPi / 2.0) * std::cosh(u);
  };
  const double u_limit = 4.6;
  double h = 0.5;
  Complex sum(0.0, 0.0);
  for (int level = 0; level <= 9; ++level) {
    Complex add(0.0, 0.0);
    if (level == 0) {
      int kmax = int(u_limit / h);
      add = node_term(0.0);
      for (int k = 1; k <= kmax; ++k) add += node_term(h * k) + node_term(-h * k);
      sum = h * add;
    } else {
      int kmax = int(u_limit / h);
      for (int k = 1; k <= kmax; k += 2)
        add += node_term(h * k) + node_term(-h * k);
      Complex next = 0.5 * sum + h * add;
      if (level >= 4 && std::abs(next - sum) < 5e-16 * std::abs(next)) {
        sum = next;
        break;
      }
      sum = next;
    }
    h *= 0.5;
  }
  return rgamma(a) * sum;
}

Complex laplace_integral(Complex a, Complex c, Complex z, int depth = 0) {
  if (depth > 8)
    throw Error("degenerate_parameter", "psi parameter lift did not terminate");
  if (a.real() > 0.25) return laplace_integral_raw(a, c, z);
  // DLMF 13.3.7 rearranged to raise a
  Complex u1 = laplace_integral(a + 1.0, c, z, depth + 1);
  Complex u2 = laplace_integral(a + 2.0, c, z, depth + 1);
  return (2.0 * a + 2.0 + z - c) * u1 - (a + 1.0) * (a - c + 2.0) * u2;
}

// asymptotic series zeta^{-a} sum_k (-1)^k (a)_k (a-c+1)_k / (k! z^k),
// optimal truncation
Complex psi_asymptotic(Complex a, Complex c, const CoveringPoint& zeta) {
  Complex z = zeta.value();
  Complex sum(1.0, 0.0), term(1.0, 0.0);
  double best = 1.0;
  for (int k = 0; k < 200; ++k) {
    Complex next = term * (-(a + double(k)) * (a - c + 1.0 + double(k)) /
                           (double(k + 1) * z));
    if (std::abs(next) > best) break;
    term = next;
    best = std::abs(term);
    sum += term;
    if (best < 1e-18 * std::abs(sum)) break;
  }
  return zeta.power(-a) * sum;
}

Complex psi_base(Complex a, Complex c, const CoveringPoint& zeta) {
  double r = std::exp(zeta.log_modulus);
  Complex z = zeta.value();
  if (r >= kAsymRadius) return psi_asymptotic(a, c, zeta);
  if (z.real() <= kKummerReLimit) {
    double dist = std::abs(c.real() - std::round(c.real()));
    if (std::abs(c.imag()) < 1e-6 && dist < 1e-6) {
      // integer-c degeneracy: two-sided Richardson detour in c
      const double d = 1e-3;
      Complex f1 = 0.5 * (kummer_pair(a, c + d, zeta) + kummer_pair(a, c - d, zeta));
      Complex f2 = 0.5 * (kummer_pair(a, c + 2.0 * d, zeta) +
                          kummer_pair(a, c - 2.0 * d, zeta));
      return (4.0 * f1 - f2) / 3.0;
    }
    return kummer_pair(a, c, zeta);
  }
  return laplace_integral(a, c, z);
}

}  // namespace

Complex psi_chf(Complex a, Complex c, const CoveringPoint& zeta) {
  double phi = zeta.argument;
  if (phi > kPi) {
    // invert the covering transformation: move down one sheet
    Complex z = zeta.value();
    Complex K = 2.0 * kPi * kI * std::exp(kI * kPi * a) * rgamma(a) *
                rgamma(a - c + 1.0);
    return std::exp(-2.0 * kPi * kI * a) *
           (psi_chf(a, c, zeta.rotated(-2.0 * kPi)) +
            K * std::exp(z) * psi_chf(c - a, c, zeta.rotated(-kPi)));
  }
  if (phi < -kPi) {
    Complex z = zeta.value();
    Complex K = 2.0 * kPi * kI * std::exp(kI * kPi * a) * rgamma(a) *
                rgamma(a - c + 1.0);
    return std::exp(2.0 * kPi * kI * a) * psi_chf(a, c, zeta.rotated(2.0 * kPi)) -
           K * std::exp(z) * psi_chf(c - a, c, zeta.rotated(kPi));
  }
  return psi_base(a, c, zeta);
}

// ---------------------------------------------------------------------------
// Local parametrix
// ---------------------------------------------------------------------------

namespace {

Complex epi(Complex w) { return std::exp(kI * kPi * w); }  // e^{i pi w}

void check_parametrix_params(Complex alpha, Complex beta) {
  if (alpha.real() <= -0.5)
    throw Error("hypothesis", "parametrix requires Re alpha > -1/2");
  for (Complex s : {alpha + beta, alpha - beta}) {
    double r = std::round(s.real());
    if (r <= -1.0 && std::abs(s.real() - r) < 1e-12 && std::abs(s.imag()) < 1e-12)
      throw Error("degenerate_parameter",
                  "alpha +- beta is a negative integer");
  }
}

}  // namespace

Matrix2c parametrix_jump(int ray, Complex a, Complex b) {
  Matrix2c j;
  switch (ray) {
    case 1:
      j << 0.0, epi(-b), -epi(b), 0.0;
      break;
    case 2:
      j << 1.0, 0.0, epi(b - 2.0 * a), 1.0;
      break;
    case 3:
    case 7:
      j << epi(a), 0.0, 0.0, epi(-a);
      break;
    case 4:
      j << 1.0, 0.0, epi(-(b - 2.0 * a)), 1.0;
      break;
    case 5:
      j << 0.0, epi(b), -epi(-b), 0.0;
      break;
    case 6:
      j << 1.0, 0.0, epi(-(b + 2.0 * a)), 1.0;
      break;
    case 8:
      j << 1.0, 0.0, epi(b + 2.0 * a), 1.0;
      break;
    default:
      throw Error("hypothesis", "ray index must be 1..8");
  }
  return j;
}

std::pair<double, double> sector_argument_range(Sector s) {
  double lo = kPi / 2.0 + kPi / 4.0 * double(int(s));
  return {lo, lo + kPi / 4.0};
}

namespace {

// cumulative constant factor carrying sector I to sector s
Matrix2c sector_factor(Sector s, Complex a, Complex b) {
  Matrix2c m = Matrix2c::Identity();
  int idx = int(s);
  if (idx >= 1) m = m * parametrix_jump(2, a, b);
  if (idx >= 2) m = m * parametrix_jump(3, a, b);
  if (idx >= 3) m = m * parametrix_jump(4, a, b).inverse();
  if (idx >= 4) m = m * parametrix_jump(5, a, b).inverse();
  if (idx >= 5) m = m * parametrix_jump(6, a, b).inverse();
  if (idx >= 6) m = m * parametrix_jump(7, a, b);
  if (idx >= 7) m = m * parametrix_jump(8, a, b);
  return m;
}

Matrix2c psi_matrix_sector1(Complex a, Complex b, const CoveringPoint& zeta) {
  Complex z = zeta.value();
  Complex za = zeta.power(a), zma = zeta.power(-a);
  Complex em = std::exp(-0.5 * z), ep = std::exp(0.5 * z);
  CoveringPoint zr = zeta.rotated(-kPi);  // e^{-i pi} zeta
  Matrix2c m;
  m(0, 0) = za * psi_chf(a + b, 1.0 + 2.0 * a, zeta) * epi(2.0 * b + a) * em;
  m(1, 0) = -zma * psi_chf(1.0 - a + b, 1.0 - 2.0 * a, zeta) * epi(b - 3.0 * a) *
            em * gamma_ratio(1.0 + a + b, a - b);
  m(0, 1) = -za * psi_chf(1.0 + a - b, 1.0 + 2.0 * a, zr) * epi(b + a) * ep *
            gamma_ratio(1.0 + a - b, a + b);
  m(1, 1) = zma * psi_chf(-a - b, 1.0 - 2.0 * a, zr) * epi(-a) * ep;
  return m;
}

}  // namespace

Matrix2c parametrix_matrix(const ParametrixInput& p, const CoveringPoint& zeta) {
  check_parametrix_params(p.alpha, p.beta);
  return psi_matrix_sector1(p.alpha, p.beta, zeta) *
         sector_factor(p.sector, p.alpha, p.beta);
}

Matrix2c parametrix_large_zeta(Complex a, Complex b, const CoveringPoint& zeta) {
  check_parametrix_params(a, b);
  Complex z = zeta.value();
  Matrix2c corr;
  corr(0, 0) = a * a - b * b;
  corr(0, 1) = gamma_ratio(1.0 + a - b, a + b) * epi(b + 4.0 * a);
  corr(1, 0) = -gamma_ratio(1.0 + a + b, a - b) * epi(-(b + 4.0 * a));
  corr(1, 1) = -(a * a - b * b);
  Matrix2c m = Matrix2c::Identity() + corr / z;
  Matrix2c d = Matrix2c::Zero();
  d(0, 0) = zeta.power(-b) * std::exp(-0.5 * z) * epi(2.0 * b + a);
  d(1, 1) = zeta.power(b) * std::exp(0.5 * z) * epi(-(b + 2.0 * a));
  return m * d;
}

}  // namespace fhdet
