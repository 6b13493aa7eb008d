#pragma once

#include <cstdint>
#include <random>

#include "fhdet/symbol.hpp"

namespace fhdet {

// Seeded generators of hypothesis-satisfying random inputs for the identity
// suites. Parameter ranges keep Re alpha > -0.3 (quadrature comfort),
// |||beta||| < 1 and the recursion away from breakdown.
class CorpusRng {
 public:
  explicit CorpusRng(uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return Complex(uniform(re_lo, re_hi), uniform(im_lo, im_hi));
  }
  std::mt19937_64& raw() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// General symbol with `extra` singularities beyond the mandatory theta = 0
// entry and a small random smooth part.
FHSymbol random_symbol(CorpusRng& rng, int extra_singularities,
                       bool with_smooth = true);

// Even symbol: theta = 0 and theta = pi entries (beta = 0) plus `pairs`
// mirrored interior singularities; even smooth part.
FHSymbol random_even_symbol(CorpusRng& rng, int pairs, bool with_smooth = true);

// Weight on [-1,1] with `nodes` interior jump/root points.
HankelWeight random_weight(CorpusRng& rng, int nodes, bool with_smooth = true);

}  // namespace fhdet
