#include "fhdet/fh_rep.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fhdet {

double seminorm(const BetaVector& b) {
  if (b.betas.empty()) throw Error("hypothesis", "empty beta vector");
  double lo = b.betas.front().real(), hi = lo;
  for (const auto& z : b.betas) {
    lo = std::min(lo, z.real());
    hi = std::max(hi, z.real());
  }
  return hi - lo;
}

namespace {

double spread(const std::vector<Complex>& base, const std::vector<int>& n) {
  double lo = base.front().real() + n.front(), hi = lo;
  for (size_t j = 0; j < base.size(); ++j) {
    double r = base[j].real() + n[j];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return hi - lo;
}

std::vector<int> tied_minima(const std::vector<Complex>& base,
                             const std::vector<int>& n, double tol, bool maxima) {
  double best = base.front().real() + n.front();
  for (size_t j = 0; j < base.size(); ++j) {
    double r = base[j].real() + n[j];
    best = maxima ? std::max(best, r) : std::min(best, r);
  }
  std::vector<int> idx;
  for (size_t j = 0; j < base.size(); ++j) {
    double r = base[j].real() + n[j];
    if (std::abs(r - best) < tol) idx.push_back(int(j));
  }
  return idx;
}

}  // namespace

std::vector<FHRep> minimize_reps(const BetaVector& b, double tie_tol) {
  const auto& base = b.betas;
  if (base.empty()) throw Error("hypothesis", "empty beta vector");
  const size_t m = base.size();

  // Phase 1: reduce until the seminorm is <= 1 (+ tolerance), branching over
  // ties so that every terminal shift vector is found.
  std::set<std::vector<int>> frontier{std::vector<int>(m, 0)}, terminal;
  while (!frontier.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& n : frontier) {
      if (spread(base, n) <= 1.0 + tie_tol) {
        terminal.insert(n);
        continue;
      }
      for (int s : tied_minima(base, n, tie_tol, false))
        for (int t : tied_minima(base, n, tie_tol, true)) {
          if (s == t) continue;
          std::vector<int> moved = n;
          moved[s] += 1;
          moved[t] -= 1;
          next.insert(std::move(moved));
        }
    }
    frontier = std::move(next);
  }

  // Strict-minimum case: the representative with seminorm < 1 is unique.
  for (const auto& n : terminal)
    if (spread(base, n) < 1.0 - tie_tol) return {FHRep{b, n}};

  // Seminorm-1 case: M is the closure of the min-up/max-down move.
  std::set<std::vector<int>> closure = terminal, grow = terminal;
  while (!grow.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& n : grow)
      for (int s : tied_minima(base, n, tie_tol, false))
        for (int t : tied_minima(base, n, tie_tol, true)) {
          if (s == t) continue;
          std::vector<int> moved = n;
          moved[s] += 1;
          moved[t] -= 1;
          if (std::abs(spread(base, moved) - 1.0) < tie_tol &&
              !closure.count(moved)) {
            closure.insert(moved);
            next.insert(std::move(moved));
          }
        }
    grow = std::move(next);
  }

  std::vector<FHRep> out;
  for (const auto& n : closure) out.push_back(FHRep{b, n});
  return out;
}

bool is_degenerate(const FHRep& rep, const std::vector<Complex>& alphas) {
  if (alphas.size() != rep.base.betas.size())
    throw Error("hypothesis", "alpha/beta length mismatch");
  auto shifted = rep.shifted_betas();
  for (size_t j = 0; j < shifted.size(); ++j) {
    for (Complex s : {alphas[j] + shifted[j], alphas[j] - shifted[j]}) {
      double r = std::round(s.real());
      if (r <= -1.0 && std::abs(s.real() - r) < 1e-12 && std::abs(s.imag()) < 1e-12)
        return true;
    }
  }
  return false;
}

}  // namespace fhdet
