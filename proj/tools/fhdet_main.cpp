// fhdet: Fisher-Hartwig determinant laboratory command line.
#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fhdet/asymptotics.hpp"
#include "fhdet/corpus.hpp"
#include "fhdet/exact_det.hpp"
#include "fhdet/relations.hpp"
#include "fhdet/special_functions.hpp"
#include "fhdet/sweep.hpp"
#include "fhdet/symbol.hpp"

using namespace fhdet;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

std::string fmt(Complex v) { return fmt(v.real()) + "," + fmt(v.imag()); }

std::vector<int> parse_grid(const std::string& text) {
  // a:b:step
  std::vector<int> grid;
  size_t c1 = text.find(':');
  size_t c2 = text.find(':', c1 + 1);
  if (c1 == std::string::npos)
    throw Error("io", "expected a:b:step grid, got " + text);
  int a = std::stoi(text.substr(0, c1));
  int b, step = 1;
  if (c2 == std::string::npos) {
    b = std::stoi(text.substr(c1 + 1));
  } else {
    b = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
    step = std::stoi(text.substr(c2 + 1));
  }
  for (int n = a; n <= b; n += step) grid.push_back(n);
  return grid;
}

TphVariant parse_variant(const std::string& name) {
  if (name == "plus") return TphVariant::PLUS;
  if (name == "minus2") return TphVariant::MINUS2;
  if (name == "plus1") return TphVariant::PLUS1;
  if (name == "minus1") return TphVariant::MINUS1;
  throw Error("io", "unknown variant " + name);
}

void print_logscaled(const std::string& label, const LogScaled& v) {
  if (v.is_zero()) {
    std::cout << label << ": exact zero\n";
    return;
  }
  std::cout << label << ": log_mod = " << fmt(v.log_mod())
            << "  phase = " << fmt(v.phase());
  if (std::abs(v.log_mod()) < 600.0) {
    std::cout << "  value = " << fmt(v.value())
              << "  |value| = " << fmt(std::exp(v.log_mod()))
              << "  arg = " << fmt(std::remainder(v.phase(), 2.0 * kPi));
  }
  std::cout << "\n";
}

struct CommonOpts {
  std::string symbol_path, weight_path;
  std::optional<FHSymbol> symbol;
  std::optional<HankelWeight> weight;

  void load() {
    if (!symbol_path.empty()) symbol = parse_symbol_file(symbol_path);
    if (!weight_path.empty()) weight = parse_weight_file(weight_path);
  }
  const FHSymbol& need_symbol() const {
    if (!symbol) throw Error("io", "this command needs --symbol");
    return *symbol;
  }
  const HankelWeight& need_weight() const {
    if (!weight) throw Error("io", "this command needs --weight");
    return *weight;
  }
};

int run_verify(const std::string& identity, const std::string& corpus,
               uint64_t seed, double tol, int cases, int nmax) {
  CorpusRng rng(seed);
  int failures = 0;
  std::cout << "identity,case,n,residual,threshold,status\n";
  auto emit = [&](const std::string& name, int idx, int n, double residual,
                  double threshold, bool pass) {
    std::cout << name << ',' << idx << ',' << n << ',' << fmt(residual) << ','
              << fmt(threshold) << ',' << (pass ? "pass" : "FAIL") << "\n";
    if (!pass) ++failures;
  };

  std::vector<FHSymbol> symbols;
  std::vector<HankelWeight> weights;
  if (corpus == "builtin") {
    for (int i = 0; i < cases; ++i) {
      symbols.push_back(random_symbol(rng, rng.uniform_int(1, 3)));
      weights.push_back(random_weight(rng, rng.uniform_int(0, 2)));
    }
  } else {
    std::ifstream in(corpus);
    if (!in) throw Error("io", "cannot open corpus " + corpus);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.find("weight") != std::string::npos)
        weights.push_back(parse_weight_file(line));
      else
        symbols.push_back(parse_symbol_file(line));
    }
  }
  auto even_symbols = [&](int count) {
    std::vector<FHSymbol> list;
    for (int i = 0; i < count; ++i)
      list.push_back(random_even_symbol(rng, rng.uniform_int(0, 2)));
    return list;
  };

  if (identity == "shift") {
    int idx = 0;
    for (const auto& f : symbols) {
      int ell = (idx % 4 < 2) ? ((idx % 2) ? 1 : 2) : ((idx % 2) ? -1 : -2);
      int n = 4 + idx % std::max(1, nmax - 4);
      IdentityReport r = check_shift_identity(f, ell, n, tol);
      emit("shift", idx++, n, r.relative_residual, r.threshold, r.pass);
    }
  } else if (identity == "ht") {
    int idx = 0;
    for (const auto& w : weights) {
      int n = 2 + idx % std::max(1, std::min(nmax, 6) - 1);
      IdentityReport r = check_hankel_toeplitz(w, n, tol);
      emit("ht", idx++, n, r.relative_residual, r.threshold, r.pass);
    }
  } else if (identity == "hth") {
    int idx = 0;
    for (const auto& f : even_symbols(cases)) {
      TphVariant variant = TphVariant(idx % 4);
      int n = 2 + idx % std::max(2, std::min(nmax, 8));
      IdentityReport r = check_tph_reduction(f, n, variant, tol);
      emit("hth", idx++, n, r.relative_residual, r.threshold, r.pass);
    }
  } else if (identity == "szegomap") {
    int idx = 0;
    for (const auto& f : even_symbols(cases)) {
      int n = 2 + idx % std::max(2, std::min(nmax, 5));
      IdentityReport r = check_szego_map(f, n, tol);
      emit("szegomap", idx++, n, r.relative_residual, r.threshold, r.pass);
    }
  } else if (identity == "cd") {
    int idx = 0;
    for (const auto& f : symbols) {
      int n = 3 + idx % std::max(1, nmax - 3);
      Complex z = (0.5 + 0.8 * rng.uniform(0.0, 1.0)) *
                  std::exp(Complex(0.0, rng.uniform(0.0, 2.0 * kPi)));
      Complex a = (0.6 + 0.9 * rng.uniform(0.0, 1.0)) *
                  std::exp(Complex(0.0, rng.uniform(0.0, 2.0 * kPi)));
      IdentityReport r = check_cd(f, n, z, a, tol);
      emit("cd", idx++, n, r.relative_residual, r.threshold, r.pass);
    }
  } else if (identity == "parametrix") {
    for (int idx = 0; idx < cases; ++idx) {
      Complex alpha = rng.box(-0.4, 0.8, -0.5, 0.5);
      Complex beta = rng.box(-0.6, 0.6, -0.5, 0.5);
      bool skip = false;
      for (Complex s : {alpha + beta, alpha - beta})
        if (std::abs(s - std::round(s.real())) < 0.1 && s.real() < -0.5)
          skip = true;
      if (skip) {
        --idx;
        continue;
      }
      // closure-ray jump residual plus the determinant identity
      double r = 0.05 * std::pow(12.0 / 0.05, rng.uniform(0.0, 1.0));
      Matrix2c plus = parametrix_matrix(
          {alpha, beta, Sector::I}, CoveringPoint::from_polar(r, kPi / 2.0));
      Matrix2c minus = parametrix_matrix(
          {alpha, beta, Sector::VIII},
          CoveringPoint::from_polar(r, kPi / 2.0 + 2.0 * kPi));
      Matrix2c gap = plus - minus * parametrix_jump(1, alpha, beta);
      double res = gap.cwiseAbs().maxCoeff() / minus.cwiseAbs().maxCoeff();
      Complex det = plus(0, 0) * plus(1, 1) - plus(0, 1) * plus(1, 0);
      double det_res =
          std::abs(det - std::exp(Complex(0.0, -kPi) * (alpha - beta)));
      emit("parametrix", idx, 0, std::max(res, det_res), tol,
           std::max(res, det_res) < tol);
    }
  } else {
    throw Error("io", "unknown identity " + identity);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz/Hankel determinant laboratory"};
  app.require_subcommand(1);

  CommonOpts common;
  int n = 8;
  int jmax = 8, kmax = 8;
  double theta = 0.0, x = 0.0;
  std::string family = "toeplitz", variant = "plus", predictor = "ehrhardt";
  std::string target = "toeplitz", grid = "4:32:4", out_path, svg_path;
  std::string identity = "shift", corpus = "builtin", betas;
  std::string route = "auto";
  uint64_t seed = 1;
  double tol = 1e-8;
  int cases = 50;
  double fit_fraction = 0.5;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--symbol", common.symbol_path, "symbol description file");
    cmd->add_option("--weight", common.weight_path, "weight description file");
  };

  auto* cmd_eval = app.add_subcommand("eval", "evaluate a symbol or weight");
  add_io(cmd_eval);
  cmd_eval->add_option("--theta", theta, "angle for symbol evaluation");
  cmd_eval->add_option("--x", x, "abscissa for weight evaluation");

  auto* cmd_coeffs = app.add_subcommand("coeffs", "Fourier coefficients");
  add_io(cmd_coeffs);
  cmd_coeffs->add_option("--jmax", jmax, "coefficient window");
  cmd_coeffs->add_option("--out", out_path, "write CSV here");

  auto* cmd_moments = app.add_subcommand("moments", "weight moments");
  add_io(cmd_moments);
  cmd_moments->add_option("--kmax", kmax, "highest moment");
  cmd_moments->add_option("--out", out_path, "write CSV here");

  auto* cmd_det = app.add_subcommand("det", "exact determinant");
  add_io(cmd_det);
  cmd_det->add_option("--n", n, "dimension");
  cmd_det->add_option("--family", family, "toeplitz|hankel|tph");
  cmd_det->add_option("--variant", variant, "plus|minus2|plus1|minus1");
  cmd_det->add_option("--route", route, "hankel route: auto|lu|toeplitz");

  auto* cmd_asym = app.add_subcommand("asym", "asymptotic prediction");
  add_io(cmd_asym);
  cmd_asym->add_option("--n", n, "dimension");
  cmd_asym->add_option("--predictor", predictor,
                       "szego|ehrhardt|bt|poly|hankel|tph");
  cmd_asym->add_option("--variant", variant, "plus|minus2|plus1|minus1");

  auto* cmd_sweep = app.add_subcommand("sweep", "convergence sweep");
  add_io(cmd_sweep);
  cmd_sweep->add_option("--target", target, "toeplitz|hankel|tph|chi|phi0");
  cmd_sweep->add_option("--predictor", predictor,
                        "szego|ehrhardt|bt|poly|hankel|tph");
  cmd_sweep->add_option("--n-grid", grid, "a:b:step");
  cmd_sweep->add_option("--variant", variant, "plus|minus2|plus1|minus1");
  cmd_sweep->add_option("--out", out_path, "CSV output path");
  cmd_sweep->add_option("--svg", svg_path, "SVG output path");
  cmd_sweep->add_option("--fit-fraction", fit_fraction,
                        "top fraction of the grid used for the slope fit");

  auto* cmd_verify = app.add_subcommand("verify", "identity suites");
  cmd_verify->add_option("--identity", identity,
                         "shift|ht|hth|szegomap|parametrix|cd");
  cmd_verify->add_option("--corpus", corpus, "builtin or a file of paths");
  cmd_verify->add_option("--seed", seed, "corpus seed");
  cmd_verify->add_option("--tol", tol, "residual threshold");
  cmd_verify->add_option("--cases", cases, "number of corpus cases");
  cmd_verify->add_option("--n", n, "dimension cap");

  auto* cmd_fhrep = app.add_subcommand("fhrep", "minimizing representations");
  add_io(cmd_fhrep);
  cmd_fhrep->add_option("--betas", betas,
                        "inline beta list: re,im;re,im;... (alphas 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    common.load();

    if (cmd_eval->parsed()) {
      if (common.symbol) {
        print_logscaled("f(e^{i theta})",
                        LogScaled::from_value(common.need_symbol().eval(theta)));
      } else {
        print_logscaled("w(x)",
                        LogScaled::from_value(common.need_weight().eval(x)));
      }
      return 0;
    }

    if (cmd_coeffs->parsed()) {
      VectorXc c = fourier_coeffs(common.need_symbol(), jmax);
      std::ostringstream body;
      body << "j,re,im\n";
      for (int j = -jmax; j <= jmax; ++j)
        body << j << ',' << fmt(c[j + jmax].real()) << ','
             << fmt(c[j + jmax].imag()) << "\n";
      if (out_path.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream f(out_path);
        f << body.str();
      }
      return 0;
    }

    if (cmd_moments->parsed()) {
      VectorXc m = hankel_moments(common.need_weight(), kmax);
      std::ostringstream body;
      body << "k,re,im\n";
      for (int k = 0; k <= kmax; ++k)
        body << k << ',' << fmt(m[k].real()) << ',' << fmt(m[k].imag()) << "\n";
      if (out_path.empty()) {
        std::cout << body.str();
      } else {
        std::ofstream f(out_path);
        f << body.str();
      }
      return 0;
    }

    if (cmd_det->parsed()) {
      if (family == "toeplitz") {
        CoeffWindow c(fourier_coeffs(common.need_symbol(), n + 1));
        print_logscaled("D_n", toeplitz_logdet(c, n));
      } else if (family == "hankel") {
        const HankelWeight& w = common.need_weight();
        bool use_lu = route == "lu" || (route == "auto" && n <= 12);
        if (use_lu) {
          ConditionReport rep;
          VectorXc m = hankel_moments(w, std::max(0, 2 * n - 2));
          LogScaled d = hankel_logdet(m, n, &rep);
          print_logscaled("D_n", d);
          if (rep.warning)
            std::cout << "# conditioning warning: rcond = " << fmt(rep.rcond)
                      << " (consider --route toeplitz)\n";
        } else {
          print_logscaled("D_n", route_hankel_via_toeplitz(w, n));
        }
      } else if (family == "tph") {
        CoeffWindow c(fourier_coeffs(common.need_symbol(), 2 * n + 1));
        print_logscaled("D_n", tph_logdet(c, n, parse_variant(variant)));
      } else {
        throw Error("io", "unknown family " + family);
      }
      return 0;
    }

    if (cmd_asym->parsed()) {
      AsymptoticResult r;
      if (predictor == "szego")
        r = szego_asym(common.need_symbol().smooth(), n);
      else if (predictor == "ehrhardt")
        r = ehrhardt_asym(common.need_symbol(), n);
      else if (predictor == "bt")
        r = basor_tracy_asym(common.need_symbol(), n);
      else if (predictor == "hankel")
        r = hankel_asym(common.need_weight(), n);
      else if (predictor == "tph")
        r = tph_asym(common.need_symbol(), n, parse_variant(variant));
      else if (predictor == "poly") {
        PolyAsym p = poly_asym(common.need_symbol(), n);
        std::cout << "chi_sq(n-1) = " << fmt(p.chi_sq_nm1) << "\n"
                  << "Phi_n(0) = " << fmt(p.monic_phi0) << "\n"
                  << "hatPhi_n(0) = " << fmt(p.monic_hatphi0) << "\n"
                  << "delta = " << fmt(p.delta)
                  << "  err(chi) ~ " << fmt(p.chi_err_scale)
                  << "  err(phi) ~ " << fmt(p.phi_err_scale)
                  << "  err(hat) ~ " << fmt(p.hatphi_err_scale) << "\n";
        return 0;
      } else {
        throw Error("io", "unknown predictor " + predictor);
      }
      print_logscaled("prediction", r.value);
      std::cout << "delta_scale = " << fmt(r.delta_scale)
                << "  error order: " << r.error_order << "\n";
      for (const auto& [name, term] : r.terms) {
        if (term.is_zero()) {
          std::cout << "  " << name << ": exact zero\n";
        } else {
          std::cout << "  " << name << ": log_mod = " << fmt(term.log_mod())
                    << "  phase = " << fmt(term.phase()) << "\n";
        }
      }
      return 0;
    }

    if (cmd_sweep->parsed()) {
      SweepSpec spec;
      spec.n_grid = parse_grid(grid);
      spec.fit_fraction = fit_fraction;
      spec.variant = parse_variant(variant);
      if (target == "toeplitz")
        spec.target = SweepTarget::TOEPLITZ;
      else if (target == "hankel")
        spec.target = SweepTarget::HANKEL;
      else if (target == "tph")
        spec.target = SweepTarget::TPH;
      else if (target == "chi")
        spec.target = SweepTarget::CHI;
      else if (target == "phi0")
        spec.target = SweepTarget::PHI0;
      else
        throw Error("io", "unknown target " + target);
      if (predictor == "szego")
        spec.predictor = Predictor::SZEGO;
      else if (predictor == "ehrhardt")
        spec.predictor = Predictor::EHRHARDT;
      else if (predictor == "bt")
        spec.predictor = Predictor::BASOR_TRACY;
      else if (predictor == "poly")
        spec.predictor = Predictor::POLY;
      else if (predictor == "hankel")
        spec.predictor = Predictor::HANKEL;
      else if (predictor == "tph")
        spec.predictor = Predictor::TPH;
      else
        throw Error("io", "unknown predictor " + predictor);

      SweepInput input = common.symbol ? SweepInput(common.need_symbol())
                                       : SweepInput(common.need_weight());
      SweepTable table = run_sweep(spec, input);
      if (out_path.empty())
        std::cout << emit_csv(table);
      else
        emit_csv_file(table, out_path);
      if (!svg_path.empty()) emit_svg_file(table, svg_path);
      if (table.fit_slope)
        std::cout << "# fitted slope: " << fmt(*table.fit_slope) << "\n";
      return table.all_ok() ? 0 : 1;
    }

    if (cmd_verify->parsed())
      return run_verify(identity, corpus, seed, tol, cases, n);

    if (cmd_fhrep->parsed()) {
      BetaVector bv;
      std::vector<Complex> alphas;
      if (!betas.empty()) {
        std::istringstream in(betas);
        std::string item;
        while (std::getline(in, item, ';')) {
          auto comma = item.find(',');
          double re = std::stod(item.substr(0, comma));
          double im = comma == std::string::npos
                          ? 0.0
                          : std::stod(item.substr(comma + 1));
          bv.betas.push_back(Complex(re, im));
          alphas.push_back(Complex(0.0, 0.0));
        }
      } else {
        for (const auto& s : common.need_symbol().singularities()) {
          bv.betas.push_back(s.beta);
          alphas.push_back(s.alpha);
        }
      }
      auto reps = minimize_reps(bv);
      std::cout << "{\n  \"seminorm\": " << fmt(seminorm(bv))
                << ",\n  \"representations\": [\n";
      for (size_t i = 0; i < reps.size(); ++i) {
        const auto& rep = reps[i];
        std::cout << "    {\"shifts\": [";
        for (size_t j = 0; j < rep.shifts.size(); ++j)
          std::cout << rep.shifts[j] << (j + 1 < rep.shifts.size() ? ", " : "");
        std::cout << "], \"shifted_betas\": [";
        auto sb = rep.shifted_betas();
        for (size_t j = 0; j < sb.size(); ++j)
          std::cout << '"' << fmt(sb[j]) << '"'
                    << (j + 1 < sb.size() ? ", " : "");
        std::cout << "], \"seminorm\": "
                  << fmt(seminorm(BetaVector{rep.shifted_betas()}))
                  << ", \"degenerate\": "
                  << (is_degenerate(rep, alphas) ? "true" : "false") << "}"
                  << (i + 1 < reps.size() ? "," : "") << "\n";
      }
      std::cout << "  ]\n}\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
