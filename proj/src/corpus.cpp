#include "fhdet/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace fhdet {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

SmoothPart small_smooth(CorpusRng& rng, int bandwidth, bool even) {
  SmoothPart v(bandwidth);
  for (int k = 1; k <= bandwidth; ++k) {
    Complex c = rng.box(-0.25, 0.25, -0.25, 0.25);
    if (even) {
      v.set_coeff(k, c);
      v.set_coeff(-k, c);
    } else {
      v.set_coeff(k, c);
      v.set_coeff(-k, rng.box(-0.25, 0.25, -0.25, 0.25));
    }
  }
  v.set_coeff(0, rng.box(-0.2, 0.2, -0.1, 0.1));
  return v;
}
}  // namespace

FHSymbol random_symbol(CorpusRng& rng, int extra, bool with_smooth) {
  std::vector<Singularity> sing;
  sing.push_back({0.0, rng.box(-0.25, 0.5, -0.3, 0.3), rng.box(-0.3, 0.3, -0.3, 0.3)});
  std::vector<double> thetas;
  for (int j = 0; j < extra; ++j) {
    double t;
    bool ok;
    do {
      t = rng.uniform(0.4, 2.0 * kPi - 0.4);
      ok = true;
      for (double s : thetas)
        if (std::abs(s - t) < 0.35) ok = false;
    } while (!ok);
    thetas.push_back(t);
  }
  std::sort(thetas.begin(), thetas.end());
  for (double t : thetas)
    sing.push_back({t, rng.box(-0.25, 0.5, -0.3, 0.3), rng.box(-0.3, 0.3, -0.3, 0.3)});
  SmoothPart v = with_smooth ? small_smooth(rng, 2, false) : SmoothPart();
  return FHSymbol(std::move(v), std::move(sing));
}

FHSymbol random_even_symbol(CorpusRng& rng, int pairs, bool with_smooth) {
  std::vector<Singularity> sing;
  sing.push_back({0.0, rng.box(-0.25, 0.5, 0.0, 0.0), {0.0, 0.0}});
  sing.push_back({kPi, rng.box(-0.25, 0.5, 0.0, 0.0), {0.0, 0.0}});
  std::vector<double> thetas;
  for (int j = 0; j < pairs; ++j) {
    double t;
    bool ok;
    do {
      t = rng.uniform(0.4, kPi - 0.4);
      ok = true;
      for (double s : thetas)
        if (std::abs(s - t) < 0.3) ok = false;
    } while (!ok);
    thetas.push_back(t);
  }
  std::sort(thetas.begin(), thetas.end());
  for (double t : thetas) {
    Complex alpha = rng.box(-0.25, 0.5, 0.0, 0.0);
    Complex beta = rng.box(-0.35, 0.35, -0.3, 0.3);
    sing.push_back({t, alpha, beta});
    sing.push_back({2.0 * kPi - t, alpha, -beta});
  }
  SmoothPart v = with_smooth ? small_smooth(rng, 2, true) : SmoothPart();
  // an even symbol needs a real V_0 contribution symmetric in k; the
  // generator above already enforces V_k = V_{-k}
  return FHSymbol(std::move(v), std::move(sing));
}

HankelWeight random_weight(CorpusRng& rng, int nodes, bool with_smooth) {
  std::vector<WeightNode> list;
  std::vector<double> lambdas;
  for (int j = 0; j < nodes; ++j) {
    double l;
    bool ok;
    do {
      l = rng.uniform(-0.75, 0.75);
      ok = true;
      for (double s : lambdas)
        if (std::abs(s - l) < 0.25) ok = false;
    } while (!ok);
    lambdas.push_back(l);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
  for (double l : lambdas)
    list.push_back({l, rng.box(-0.2, 0.45, -0.25, 0.25),
                    rng.box(-0.35, 0.35, -0.3, 0.3)});
  SmoothPart v = with_smooth ? small_smooth(rng, 2, true) : SmoothPart();
  return HankelWeight(std::move(v), rng.box(-0.2, 0.45, -0.25, 0.25),
                      rng.box(-0.2, 0.45, -0.25, 0.25), std::move(list));
}

}  // namespace fhdet
