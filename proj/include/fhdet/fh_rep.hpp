#pragma once

#include <complex>
#include <vector>

#include "fhdet/error.hpp"
#include "fhdet/log_scaled.hpp"

namespace fhdet {

// beta parameters of the singularities, in theta order
struct BetaVector {
  std::vector<Complex> betas;
};

// An FH-representation: the same symbol with beta_j -> beta_j + n_j,
// sum n_j = 0.
struct FHRep {
  BetaVector base;
  std::vector<int> shifts;

  std::vector<Complex> shifted_betas() const {
    std::vector<Complex> out = base.betas;
    for (size_t j = 0; j < out.size(); ++j) out[j] += double(shifts[j]);
    return out;
  }
};

// |||beta||| = max_{j,k} |Re beta_j - Re beta_k|
double seminorm(const BetaVector& b);

// The set M of representations minimizing sum (Re beta_j + n_j)^2, by the
// constructive reduction: move a smallest-Re entry up and a largest-Re entry
// down until the seminorm is <= 1; a strict minimum gives a singleton, a
// seminorm exactly 1 gives the closure of that move. Ties branch.
std::vector<FHRep> minimize_reps(const BetaVector& b, double tie_tol = 1e-9);

// True iff alpha_j + (beta_j + n_j) or alpha_j - (beta_j + n_j) is a negative
// integer for some j (within 1e-12).
bool is_degenerate(const FHRep& rep, const std::vector<Complex>& alphas);

}  // namespace fhdet
