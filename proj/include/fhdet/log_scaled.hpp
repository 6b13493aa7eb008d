#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace fhdet {

using Complex = std::complex<double>;

// A nonzero complex value stored as (log-modulus, phase). The phase is kept
// as a plain running sum -- it is never reduced mod 2*pi -- so products over
// many factors (LU pivots, chi_k^{-2} chains, z_j^n powers) keep a continuous
// argument that can be compared across n. Exact zeros are a separate state.
class LogScaled {
 public:
  LogScaled() : log_mod_(0.0), phase_(0.0), zero_(false) {}
  LogScaled(double log_mod, double phase)
      : log_mod_(log_mod), phase_(phase), zero_(false) {}

  static LogScaled one() { return LogScaled(0.0, 0.0); }
  static LogScaled zero() {
    LogScaled z;
    z.zero_ = true;
    z.log_mod_ = -std::numeric_limits<double>::infinity();
    return z;
  }
  // exp(w): w = log_mod + i*phase
  static LogScaled from_log(Complex w) { return LogScaled(w.real(), w.imag()); }
  static LogScaled from_value(Complex v) {
    if (v == Complex(0.0, 0.0)) return zero();
    return LogScaled(std::log(std::abs(v)), std::arg(v));
  }
  // x > 0 real
  static LogScaled from_positive(double x) { return LogScaled(std::log(x), 0.0); }

  bool is_zero() const { return zero_; }
  double log_mod() const { return log_mod_; }
  double phase() const { return phase_; }

  // May overflow/underflow; callers wanting safety stay in log space.
  Complex value() const {
    if (zero_) return Complex(0.0, 0.0);
    return std::exp(Complex(log_mod_, phase_));
  }

  LogScaled operator*(const LogScaled& o) const {
    if (zero_ || o.zero_) return zero();
    return LogScaled(log_mod_ + o.log_mod_, phase_ + o.phase_);
  }
  LogScaled operator/(const LogScaled& o) const {
    if (zero_) return zero();
    return LogScaled(log_mod_ - o.log_mod_, phase_ - o.phase_);
  }
  LogScaled& operator*=(const LogScaled& o) { return *this = *this * o; }
  LogScaled& operator/=(const LogScaled& o) { return *this = *this / o; }

  // this^w for complex w: exp(w * (log_mod + i*phase))
  LogScaled pow(Complex w) const {
    if (zero_) return zero();
    return LogScaled(w.real() * log_mod_ - w.imag() * phase_,
                     w.imag() * log_mod_ + w.real() * phase_);
  }
  LogScaled sqrt() const {
    if (zero_) return zero();
    return LogScaled(0.5 * log_mod_, 0.5 * phase_);
  }

  // Ratio against another value, as a plain complex number.
  Complex ratio(const LogScaled& o) const {
    return std::exp(Complex(log_mod_ - o.log_mod_, phase_ - o.phase_));
  }

 private:
  double log_mod_;
  double phase_;
  bool zero_;
};

// |a/b - 1|. Both zero counts as exact agreement.
inline double relative_residual(const LogScaled& a, const LogScaled& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return std::numeric_limits<double>::infinity();
  return std::abs(a.ratio(b) - 1.0);
}

// Sum of log-scaled values. The result phase is the principal argument of the
// scaled sum lifted near the dominant addend's phase, so dominated sums keep
// phase continuity. A relative cancellation below cancel_tol yields ZERO.
inline LogScaled log_sum(const std::vector<LogScaled>& terms,
                         double cancel_tol = 1e-12) {
  double lmax = -std::numeric_limits<double>::infinity();
  const LogScaled* dominant = nullptr;
  for (const auto& t : terms)
    if (!t.is_zero() && t.log_mod() > lmax) {
      lmax = t.log_mod();
      dominant = &t;
    }
  if (!dominant) return LogScaled::zero();
  Complex s(0.0, 0.0);
  for (const auto& t : terms)
    if (!t.is_zero()) s += std::exp(Complex(t.log_mod() - lmax, t.phase()));
  if (std::abs(s) < cancel_tol) return LogScaled::zero();
  double ph = std::arg(s);
  // lift near the dominant phase
  double target = dominant->phase();
  double k = std::round((target - ph) / (2.0 * M_PI));
  ph += 2.0 * M_PI * k;
  return LogScaled(lmax + std::log(std::abs(s)), ph);
}

}  // namespace fhdet
