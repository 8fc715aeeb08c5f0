#include "circleop/acceptance.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "circleop/reference.hpp"
#include "circleop/symbol.hpp"
#include "circleop/toeplitz.hpp"

namespace circleop::acceptance {

namespace {

using Rng = std::mt19937_64;

FourierSeries random_real_series(Rng& rng, int degree, double amplitude,
                                 bool zero_mean = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries s = FourierSeries::zero(degree);
  s.at(0) = zero_mean ? cplx(0.0, 0.0) : cplx(0.5 * amplitude * u(rng), 0.0);
  for (int n = 1; n <= degree; ++n) {
    const cplx c = amplitude / (2.0 * n) * cplx(u(rng), u(rng));
    s.at(n) = c;
    s.at(-n) = std::conj(c);
  }
  return s;
}

FourierSeries random_complex_series(Rng& rng, int degree, double amplitude) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries s = FourierSeries::zero(degree);
  for (int n = -degree; n <= degree; ++n)
    s.at(n) = amplitude / (1.0 + std::abs(n)) * cplx(u(rng), u(rng));
  return s;
}

// chi_n * exp(w) * exp(i*g) on the grid.
GridFunction model_symbol(int n, const FourierSeries& w, const FourierSeries& g,
                          const CircleGrid& grid) {
  GridFunction we = evaluate(w, grid).force_real(1e-9, "acceptance");
  GridFunction ge = evaluate(g, grid).force_real(1e-9, "acceptance");
  GridFunction out = GridFunction::zeros(grid);
  for (int j = 0; j < grid.size(); ++j)
    out.values[j] = std::exp(cplx(we.values[j].real(), ge.values[j].real())) *
                    std::polar(1.0, n * grid.theta(j));
  return out;
}

struct Check {
  bool ok = true;
  std::string first_failure;
  int count = 0;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

CriterionResult criterion1_transform_identities() {
  Rng rng(101);
  const CircleGrid grid(512);
  Check chk;
  double worst_residual = 0.0;

  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> deg(1, 32);
    const bool zero_mean = trial % 2 == 0;
    const FourierSeries s = random_real_series(rng, deg(rng), 0.8, zero_mean);

    const TransformReport rep = double_hilbert_check(s);
    const double res = rep.identity_residuals.at("double_hilbert_sup");
    worst_residual = std::max(worst_residual, res);
    chk.expect(res < 1e-12, "double hilbert residual " + fmt(res));

    const FourierSeries c = conjugation(s);
    const FourierSeries h = hilbert(s);
    bool exact = true;
    for (int n = -s.degree; n <= s.degree; ++n)
      if (c.at(n) != -h.at(n)) exact = false;
    chk.expect(exact, "conjugation is not exactly -hilbert");

    const double in_e = s.l2_norm_sq();
    const double out_e = h.l2_norm_sq();
    chk.expect(out_e <= in_e, "L2 contraction violated");
    if (zero_mean)
      chk.expect(out_e == in_e, "contraction not an equality for zero-mean input");
    else if (std::abs(s.at(0)) > 1e-6)
      chk.expect(out_e < in_e, "contraction not strict for nonzero mean");
  }

  return {1, "transform-identities", chk.ok,
          chk.ok ? "50 series; worst residual " + fmt(worst_residual)
                 : chk.first_failure};
}

CriterionResult criterion2_outer_analyticity() {
  Rng rng(202);
  Check chk;
  double worst_offside = 0.0, worst_modulus = 0.0;

  OuterOptions oopt;
  oopt.grid_factor = 16;  // truncation tail must sit below the 1e-10 modulus gate
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> deg(1, 8);
    const FourierSeries w = random_real_series(rng, deg(rng), 1.0);
    const OuterFunction outer = outer_function(w, oopt);

    worst_offside = std::max(worst_offside, outer.offside_ratio);
    chk.expect(outer.offside_ratio < 1e-9,
               "off-side coefficient mass " + fmt(outer.offside_ratio));
    chk.expect(outer.spectrum_nonpositive, "spectrum not on the nonpositive side");

    const CircleGrid grid(256);
    const GridFunction ovals = evaluate(outer.series, grid);
    const GridFunction wvals = evaluate(w, grid);
    double sup = 0.0;
    for (int j = 0; j < grid.size(); ++j)
      sup = std::max(sup, std::abs(std::abs(ovals.values[j]) -
                                   std::exp(wvals.values[j].real())));
    worst_modulus = std::max(worst_modulus, sup);
    chk.expect(sup < 1e-10, "|outer| vs exp(w) mismatch " + fmt(sup));
  }

  return {2, "outer-function-analyticity", chk.ok,
          chk.ok ? "20 series; worst off-side " + fmt(worst_offside) +
                       ", worst modulus error " + fmt(worst_modulus)
                 : chk.first_failure};
}

CriterionResult criterion3_index_table() {
  Rng rng(303);
  Check chk;

  const CircleGrid grid(256);
  for (int n = -8; n <= 8; ++n) {
    const WindingResult wr = winding_number(evaluate(FourierSeries::delta(n), grid));
    chk.expect(wr.winding == n, "winding(chi_" + std::to_string(n) + ") != n");
    for (const auto& [r, v] : wr.stability)
      chk.expect(v == n, "stability radius disagrees for chi_" + std::to_string(n));
  }

  const CircleGrid grid512(512);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> deg(1, 8);
    const FourierSeries g = random_real_series(rng, deg(rng), 1.0);
    GridFunction f = evaluate(g, grid512).force_real(1e-9, "acceptance");
    const int wind = winding_number(pointwise_exp_i(f)).winding;
    chk.expect(wind == 0, "ind(exp(ig)) = " + std::to_string(wind));
  }

  std::uniform_int_distribution<int> nd(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n1 = nd(rng), n2 = nd(rng);
    const GridFunction f = model_symbol(n1, random_real_series(rng, 6, 0.8),
                                        random_real_series(rng, 6, 0.8), grid512);
    const GridFunction g = model_symbol(n2, random_real_series(rng, 6, 0.8),
                                        random_real_series(rng, 6, 0.8), grid512);
    const AdditivityReport rep = index_additivity_check(f, g);
    chk.expect(rep.additive && rep.ind_f == n1 && rep.ind_g == n2,
               "additivity failed: " + std::to_string(rep.ind_f) + "+" +
                   std::to_string(rep.ind_g) + " vs " + std::to_string(rep.ind_fg));
  }

  return {3, "index-table", chk.ok,
          chk.ok ? "chi_n table, 20 unimodular, 50 additivity pairs"
                 : chk.first_failure};
}

CriterionResult criterion4_factorization_roundtrip() {
  Rng rng(404);
  Check chk;
  const CircleGrid grid(512);
  double worst = 0.0;

  std::uniform_int_distribution<int> nd(-4, 4);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = nd(rng);
    const GridFunction f = model_symbol(n, random_real_series(rng, deg(rng), 0.8),
                                        random_real_series(rng, deg(rng), 0.8), grid);
    const Factorization fac = factorize(f, 64);
    worst = std::max(worst, fac.residual);
    chk.expect(fac.winding == n, "recovered winding " + std::to_string(fac.winding) +
                                     " expected " + std::to_string(n));
    chk.expect(fac.residual < 1e-8, "reconstruction residual " + fmt(fac.residual));
  }

  return {4, "factorization-roundtrip", chk.ok,
          chk.ok ? "30 symbols; worst residual " + fmt(worst) : chk.first_failure};
}

CriterionResult criterion5_oscillation() {
  Rng rng(505);
  Check chk;
  const CircleGrid grid(512);

  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_identity = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const GridFunction f =
        evaluate(random_complex_series(rng, 20, 1.0), grid);
    const Arc arc(u(rng) * two_pi, 0.1 + u(rng) * (two_pi - 0.1));
    const double raw = mean_oscillation_raw(f, arc);
    const double oracle = reference::mean_oscillation_double_integral(f, arc);
    const double diff = std::abs(raw - oracle);
    worst_identity = std::max(worst_identity, diff);
    chk.expect(diff < 1e-10, "double-integral identity residual " + fmt(diff));
  }

  const GridFunction semicircle =
      realize(SymbolSpec::indicator({Arc(0.0, std::numbers::pi)}), grid);
  const OscillationProfile prof = bmo_profile(semicircle, 6);
  for (const auto& level : prof.levels)
    chk.expect(level.worst_oscillation >= 0.4,
               "semicircle oscillation " + fmt(level.worst_oscillation) +
                   " below 0.4 at scale " + fmt(level.arc_length));

  const CircleGrid grid1024(1024);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> deg(2, 16);
    const FourierSeries v = random_real_series(rng, deg(rng), 1.0);
    GridFunction f = evaluate(hilbert(v), grid1024).force_real(1e-9, "acceptance");
    chk.expect(vmo_consistent(bmo_profile(f, default_profile_depth(grid1024))),
               "hilbert of continuous sample not VMO-consistent");
  }

  return {5, "oscillation", chk.ok,
          chk.ok ? "identity residual " + fmt(worst_identity) +
                       "; semicircle floor and VMO decay hold"
                 : chk.first_failure};
}

CriterionResult criterion6_example_h() {
  Check chk;

  // Coefficient identity at M = 1000, exact.
  {
    const long m = 1000;
    FourierSeries g = FourierSeries::zero(static_cast<int>(m));
    for (long k = 2; k <= m; ++k) {
      const double b = 0.5 / (k * std::log(static_cast<double>(k)));
      g.at(static_cast<int>(k)) = cplx(0.0, -b);
      g.at(static_cast<int>(-k)) = cplx(0.0, b);
    }
    const FourierSeries h = hilbert(g);
    bool exact = true;
    for (long k = 2; k <= m; ++k) {
      const double expected = -(0.5 / (k * std::log(static_cast<double>(k))));
      if (h.at(static_cast<int>(k)) != cplx(expected, 0.0)) exact = false;
      if (h.at(static_cast<int>(-k)) != cplx(expected, 0.0)) exact = false;
    }
    chk.expect(exact, "h_M coefficient identity not exact");
  }

  const ExampleH ex = example_h(512, CircleGrid(2048));
  chk.expect(ex.fejer_residual < 1e-8,
             "Fejer difference residual " + fmt(ex.fejer_residual));

  const double s3 = h_sup_at_zero(1000);
  const double s6 = h_sup_at_zero(1000000);
  const double integral = std::log(std::log(1e6)) - std::log(std::log(1e3));
  const double rel = std::abs((s6 - s3) - integral) / integral;
  chk.expect(rel < 0.10, "sup growth vs integral relative error " + fmt(rel));

  const auto rows = uniform_convergence_off_zero({64, 128, 256, 512},
                                                 std::numbers::pi / 2,
                                                 3 * std::numbers::pi / 2);
  for (size_t i = 1; i < rows.size(); ++i)
    chk.expect(rows[i].sup < rows[i - 1].sup,
               "off-zero ladder not strictly decreasing at M = " +
                   std::to_string(rows[i].terms));

  return {6, "example-h", chk.ok,
          chk.ok ? "coefficients exact; Fejer residual " + fmt(ex.fejer_residual) +
                       "; growth matches ln ln within " + fmt(rel)
                 : chk.first_failure};
}

CriterionResult criterion7_finite_sections() {
  Rng rng(707);
  Check chk;

  FourierSeries two_plus_cos = FourierSeries::zero(1);
  two_plus_cos.at(0) = cplx(2.0, 0.0);
  two_plus_cos.at(1) = cplx(0.5, 0.0);
  two_plus_cos.at(-1) = cplx(0.5, 0.0);

  const SectionReport rep = section_norm_convergence(two_plus_cos, {16, 64, 256, 1024});
  for (size_t i = 0; i < rep.norms.size(); ++i) {
    chk.expect(rep.norms[i].second <= rep.symbol_sup + 1e-10,
               "section norm exceeds the symbol sup");
    if (i > 0)
      chk.expect(rep.norms[i].second >= rep.norms[i - 1].second - 1e-12,
                 "section norms not nondecreasing");
  }
  const double top_norm = rep.norms.back().second;
  chk.expect(top_norm >= 2.97 && top_norm <= 3.0,
             "norm at N=1024 is " + fmt(top_norm) + ", outside [2.97, 3]");

  for (int n = -8; n <= 8; ++n) {
    for (int N : {64, 256}) {
      const KernelCountResult kc =
          kernel_count_index_estimate(FourierSeries::delta(n), N, 1e-6);
      chk.expect(kc.count == std::abs(n) && kc.predicted == std::abs(n),
                 "kernel count for chi_" + std::to_string(n) + " at N=" +
                     std::to_string(N) + ": count " + std::to_string(kc.count));
    }
  }

  {
    // Monomial cases: every entry is a single product, so zero is exact.
    const SemicommutatorReport sc =
        semicommutator(FourierSeries::delta(1), FourierSeries::delta(1), 64);
    chk.expect(sc.interior.cwiseAbs().maxCoeff() == 0.0,
               "T_chi1 T_chi1 - T_chi2 interior not exactly zero");

    const FourierSeries phi = random_complex_series(rng, 3, 1.0);
    const SemicommutatorReport sc2 = semicommutator(phi, FourierSeries::delta(2), 64);
    chk.expect(sc2.interior.cwiseAbs().maxCoeff() == 0.0,
               "semicommutator with analytic monomial not exactly zero");

    FourierSeries analytic = FourierSeries::zero(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 0; n <= 3; ++n) analytic.at(n) = cplx(u(rng), u(rng));
    const SemicommutatorReport sc3 = semicommutator(phi, analytic, 64);
    chk.expect(sc3.interior.cwiseAbs().maxCoeff() < 1e-13,
               "semicommutator with analytic symbol above rounding");
  }

  {
    const SemicommutatorReport sc =
        semicommutator(FourierSeries::delta(1), FourierSeries::delta(-1), 64);
    bool exact = sc.interior(0, 0) == cplx(-1.0, 0.0);
    for (int j = 0; j < sc.interior.rows() && exact; ++j)
      for (int k = 0; k < sc.interior.cols(); ++k)
        if ((j != 0 || k != 0) && sc.interior(j, k) != cplx(0.0, 0.0)) {
          exact = false;
          break;
        }
    chk.expect(exact, "T_chi1 T_chi-1 - T_1 interior is not exactly -P0");
    for (const auto& [m, norm] : sc.tail_norms)
      if (m >= 1) chk.expect(norm == 0.0, "tail norm nonzero beyond the corner");
  }

  {
    CompactPerturbation kill;
    Eigen::VectorXcd u1 = Eigen::VectorXcd::Zero(2), v1 = Eigen::VectorXcd::Zero(2);
    u1(1) = cplx(-1.0, 0.0);
    v1(0) = cplx(1.0, 0.0);
    kill.factors.emplace_back(u1, v1);
    const PerturbationNormCheck pc =
        compact_perturbation_norm_check(FourierSeries::delta(1), kill, 512);
    chk.expect(pc.holds && pc.lhs.back().second >= 0.98,
               "rank-one corner kill: top-rung norm " + fmt(pc.lhs.back().second));

    CompactPerturbation rand2;
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int i = 0; i < 2; ++i) {
      Eigen::VectorXcd a(8), b(8);
      for (int j = 0; j < 8; ++j) {
        a(j) = cplx(u(rng), u(rng));
        b(j) = cplx(u(rng), u(rng));
      }
      rand2.factors.emplace_back(a, b);
    }
    const PerturbationNormCheck pc2 =
        compact_perturbation_norm_check(two_plus_cos, rand2, 512);
    chk.expect(pc2.holds && pc2.lhs.back().second >= 0.98 * 3.0,
               "random rank-2 perturbation: top-rung norm " + fmt(pc2.lhs.back().second));
  }

  return {7, "finite-sections", chk.ok,
          chk.ok ? "norm at N=1024 " + fmt(top_norm) +
                       "; kernel counts, semicommutators, perturbation bounds hold"
                 : chk.first_failure};
}

CriterionResult criterion8_classification() {
  Rng rng(808);
  Check chk;
  const CircleGrid grid(512);

  std::uniform_int_distribution<int> nd(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = nd(rng);
    const GridFunction f1 = model_symbol(n, random_real_series(rng, 6, 0.7),
                                         random_real_series(rng, 6, 0.7), grid);
    // Same component: multiply by exp(q) * exp(i*b) with band-limited real q, b.
    const GridFunction q = evaluate(random_real_series(rng, 6, 0.5), grid);
    const GridFunction b = evaluate(random_real_series(rng, 6, 0.5), grid);
    GridFunction f2 = f1;
    for (int j = 0; j < grid.size(); ++j)
      f2.values[j] *= std::exp(cplx(q.values[j].real(), b.values[j].real()));

    const PairClassification pair = classify_pair(f1, f2);
    chk.expect(pair.verdict == ComponentVerdict::Same,
               "exp(QC)-type pair not recognized as same component: " + pair.reason);
  }

  for (int trial = 0; trial < 8; ++trial) {
    const int n1 = nd(rng);
    int n2 = nd(rng);
    if (n1 == n2) n2 = n1 + 1;
    const GridFunction f1 = model_symbol(n1, random_real_series(rng, 4, 0.5),
                                         random_real_series(rng, 4, 0.5), grid);
    const GridFunction f2 = model_symbol(n2, random_real_series(rng, 4, 0.5),
                                         random_real_series(rng, 4, 0.5), grid);
    const PairClassification pair = classify_pair(f1, f2);
    chk.expect(pair.verdict == ComponentVerdict::Different,
               "winding mismatch not detected");
  }

  // Scaled truncations of the unbounded-conjugate example: beta*H vs gamma*H
  // with |beta - gamma| >= 1 separates along the ladder 10^3..10^6.
  ClassifyOptions hopt;
  hopt.realize.exp_bandwidth_factor = 2;  // unimodular phases; spectral margin
                                          // is not needed for phase analysis
  {
    const SymbolSpec f1 = SymbolSpec::product(
        {SymbolSpec::character(2), SymbolSpec::exp_i_of(SymbolSpec::builtin_h(1000000, 4.0))});
    const SymbolSpec f2 = SymbolSpec::product(
        {SymbolSpec::character(2), SymbolSpec::exp_i_of(SymbolSpec::builtin_h(1000000, 3.0))});
    const PairClassification pair = classify_pair_symbol(f1, f2, hopt);
    chk.expect(pair.second.phase_bounded == Boundedness::UnboundedTrend,
               "beta=4 vs gamma=3 truncation ladder not flagged as growing");
    chk.expect(pair.verdict == ComponentVerdict::Different,
               "beta=4 vs gamma=3 not separated: " + pair.reason);
    bool increasing = true;
    for (size_t i = 1; i < pair.second.sup_ladder.size(); ++i)
      if (pair.second.sup_ladder[i].second <= pair.second.sup_ladder[i - 1].second)
        increasing = false;
    chk.expect(increasing && pair.second.sup_ladder.size() == 4,
               "sup ladder incomplete or not increasing");
  }
  {
    const SymbolSpec f1 = SymbolSpec::exp_i_of(SymbolSpec::builtin_h(1000000, 4.0));
    FourierSeries one = FourierSeries::zero(0);
    one.at(0) = cplx(1.0, 0.0);
    const PairClassification pair =
        classify_pair_symbol(f1, SymbolSpec::trig(one), hopt);
    chk.expect(pair.verdict == ComponentVerdict::Different,
               "exp(4iH) vs 1 not separated: " + pair.reason);
  }

  // Verdicts ignore compact parts: random rank <= 4 perturbations do not move
  // the operator-level decision.
  {
    const GridFunction f1 = model_symbol(1, random_real_series(rng, 4, 0.5),
                                         random_real_series(rng, 4, 0.5), grid);
    const GridFunction q = evaluate(random_real_series(rng, 4, 0.4), grid);
    GridFunction f2 = f1;
    for (int j = 0; j < grid.size(); ++j)
      f2.values[j] *= std::exp(cplx(q.values[j].real(), 0.0));

    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random_k = [&](int rank) {
      CompactPerturbation k;
      for (int i = 0; i < rank; ++i) {
        Eigen::VectorXcd a(6), b(6);
        for (int j = 0; j < 6; ++j) {
          a(j) = cplx(u(rng), u(rng));
          b(j) = cplx(u(rng), u(rng));
        }
        k.factors.emplace_back(a, b);
      }
      return k;
    };

    const OperatorComponentReport base =
        operator_component_test(f1, f2, CompactPerturbation::zero(),
                                CompactPerturbation::zero());
    for (int trial = 0; trial < 4; ++trial) {
      const OperatorComponentReport perturbed =
          operator_component_test(f1, f2, random_k(4), random_k(3));
      chk.expect(perturbed.verdict == base.verdict,
                 "operator verdict moved under a compact perturbation");
    }
    chk.expect(base.verdict == ComponentVerdict::Same,
               "exp(q) operator pair not in the same component");
  }

  return {8, "classification", chk.ok,
          chk.ok ? "20 same-component pairs, winding splits, H-ladder separation, "
                   "compact-part invariance"
                 : chk.first_failure};
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream* progress) {
  std::vector<CriterionResult> results;
  const auto run = [&](CriterionResult (*fn)()) {
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.number = static_cast<int>(results.size()) + 1;
      r.name = "criterion";
      r.passed = false;
      r.details = std::string("exception: ") + e.what();
    }
    results.push_back(r);
    if (progress)
      *progress << (r.passed ? "[PASS] " : "[FAIL] ") << r.number << " " << r.name
                << ": " << r.details << "\n";
  };

  run(&criterion1_transform_identities);
  run(&criterion2_outer_analyticity);
  run(&criterion3_index_table);
  run(&criterion4_factorization_roundtrip);
  run(&criterion5_oscillation);
  run(&criterion6_example_h);
  run(&criterion7_finite_sections);
  run(&criterion8_classification);
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return !results.empty();
}

}  // namespace circleop::acceptance
