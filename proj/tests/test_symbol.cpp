#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circleop/symbol_io.hpp"

using namespace circleop;

namespace {

const double pi = std::numbers::pi;

FourierSeries random_real_series(std::mt19937_64& rng, int degree, double amp = 0.8) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries s = FourierSeries::zero(degree);
  s.at(0) = cplx(0.5 * amp * u(rng), 0.0);
  for (int n = 1; n <= degree; ++n) {
    const cplx c = amp / (2.0 * n) * cplx(u(rng), u(rng));
    s.at(n) = c;
    s.at(-n) = std::conj(c);
  }
  return s;
}

SymbolSpec model_spec(int n, const FourierSeries& w, const FourierSeries& g) {
  return SymbolSpec::product({SymbolSpec::character(n),
                              SymbolSpec::exp_of(SymbolSpec::trig(w)),
                              SymbolSpec::exp_i_of(SymbolSpec::trig(g))});
}

}  // namespace

TEST_CASE("realize characters and products") {
  const CircleGrid grid(64);
  const GridFunction f = realize(SymbolSpec::character(3), grid);
  for (int j = 0; j < grid.size(); ++j)
    CHECK(std::abs(f.values[j] - std::polar(1.0, 3.0 * grid.theta(j))) < 1e-13);

  const GridFunction one = realize(
      SymbolSpec::product({SymbolSpec::character(1), SymbolSpec::character(-1)}), grid);
  for (int j = 0; j < grid.size(); ++j)
    CHECK(std::abs(one.values[j] - cplx(1.0, 0.0)) < 1e-13);
}

TEST_CASE("realize rejects grids below the declared bandwidth") {
  CHECK_THROWS_AS(realize(SymbolSpec::character(5), CircleGrid(8)), resolution_error);
  CHECK_NOTHROW(realize(SymbolSpec::character(5), CircleGrid(16)));
  // Exp multiplies the declared bandwidth by the configured factor (4).
  const SymbolSpec e = SymbolSpec::exp_of(SymbolSpec::trig(FourierSeries::zero(4)));
  CHECK(e.bandwidth(4) == 16);
  CHECK_THROWS_AS(realize(e, CircleGrid(32)), resolution_error);
  CHECK_NOTHROW(realize(e, CircleGrid(64)));
}

TEST_CASE("exp and expi nodes require real children") {
  CHECK_THROWS_AS(SymbolSpec::exp_of(SymbolSpec::character(1)), validation_error);
  CHECK_THROWS_AS(SymbolSpec::exp_i_of(SymbolSpec::character(2)), validation_error);
  CHECK_NOTHROW(SymbolSpec::exp_of(SymbolSpec::builtin_h(10)));
}

TEST_CASE("hilbert node realizes the transform of its child") {
  const CircleGrid grid(128);
  FourierSeries cosine = FourierSeries::zero(1);
  cosine.at(1) = cplx(0.5, 0.0);
  cosine.at(-1) = cplx(0.5, 0.0);
  const GridFunction f =
      realize(SymbolSpec::hilbert_of(SymbolSpec::trig(cosine)), grid);
  for (int j = 0; j < grid.size(); ++j)
    CHECK(f.values[j].real() == doctest::Approx(std::sin(grid.theta(j))).epsilon(1e-10));
}

TEST_CASE("builtin h at theta = 0 matches the direct partial sum") {
  const long m = 1000;
  const CircleGrid grid(4096);
  const GridFunction f = realize(SymbolSpec::builtin_h(m), grid);
  CHECK(f.values[0].real() == doctest::Approx(-h_sup_at_zero(m)).epsilon(1e-12));

  const GridFunction scaled = realize(SymbolSpec::builtin_h(m, 2.5), grid);
  CHECK(scaled.values[0].real() ==
        doctest::Approx(-2.5 * h_sup_at_zero(m)).epsilon(1e-12));
}

TEST_CASE("conjugate node conjugates") {
  const CircleGrid grid(32);
  const GridFunction f =
      realize(SymbolSpec::conjugate_of(SymbolSpec::character(2)), grid);
  for (int j = 0; j < grid.size(); ++j)
    CHECK(std::abs(f.values[j] - std::polar(1.0, -2.0 * grid.theta(j))) < 1e-13);
}

TEST_CASE("spec json round trip preserves every node type") {
  FourierSeries t = FourierSeries::zero(2);
  t.at(0) = cplx(2.0, 0.0);
  t.at(1) = cplx(0.5, -0.25);
  t.at(-1) = cplx(0.5, 0.25);
  const SymbolSpec spec = SymbolSpec::product(
      {SymbolSpec::character(-2), SymbolSpec::exp_of(SymbolSpec::trig(t)),
       SymbolSpec::exp_i_of(SymbolSpec::builtin_h(500, 1.5)),
       SymbolSpec::conjugate_of(SymbolSpec::hilbert_of(SymbolSpec::trig(t))),
       SymbolSpec::indicator({Arc(0.0, pi), Arc(4.0, 0.5)})});

  const SymbolSpec back = spec_from_json(spec_to_json(spec));
  CHECK(spec_to_json(back) == spec_to_json(spec));

  const CircleGrid grid = grid_for(spec);
  CHECK(sup_abs_diff(realize(spec, grid), realize(back, grid)) == 0.0);
}

TEST_CASE("spec trees nested beyond the depth cap are rejected") {
  nlohmann::json j = {{"type", "char"}, {"n", 1}};
  for (int i = 0; i < 100; ++i) j = {{"type", "conjugate"}, {"of", j}};
  CHECK_THROWS_AS(spec_from_json(j), validation_error);
}

TEST_CASE("inline mini-syntax") {
  const SymbolSpec c = parse_spec_inline("char:-3");
  CHECK(c.kind == SymbolSpec::Kind::Char);
  CHECK(c.n == -3);

  const SymbolSpec h = parse_spec_inline("h:1000:4");
  CHECK(h.kind == SymbolSpec::Kind::BuiltinH);
  CHECK(h.terms == 1000);
  CHECK(h.scale == 4.0);

  const SymbolSpec t = parse_spec_inline("trig:[0=2,1=0.5,-1=0.5]");
  CHECK(t.kind == SymbolSpec::Kind::Trig);
  CHECK(t.coeffs.at(0) == cplx(2.0, 0.0));
  CHECK(t.coeffs.at(1) == cplx(0.5, 0.0));

  const SymbolSpec z = parse_spec_inline("trig:[2=0.5/-0.25]");
  CHECK(z.coeffs.at(2) == cplx(0.5, -0.25));

  CHECK_THROWS_AS(parse_spec_inline("nope:1"), validation_error);
  CHECK_THROWS_AS(parse_spec_inline("char:x"), validation_error);
}

TEST_CASE("invertibility verdicts") {
  const CircleGrid grid(128);
  const GridFunction chi = realize(SymbolSpec::character(2), grid);
  const InvertibilityReport a = invertibility(chi);
  CHECK(a.min_modulus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.invertible_at_resolution);

  const GridFunction cosine =
      GridFunction::sample(grid, [](double t) { return std::cos(t); });
  CHECK_FALSE(invertibility(cosine).invertible_at_resolution);

  const GridFunction shifted =
      GridFunction::sample(grid, [](double t) { return 2.0 + std::cos(t); });
  const InvertibilityReport b = invertibility(shifted);
  CHECK(b.min_modulus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.invertible_at_resolution);
}

TEST_CASE("factorize a scaled character") {
  const CircleGrid grid(256);
  const GridFunction f = GridFunction::sample(grid, [](double t) {
    return 3.0 * std::polar(1.0, 2.0 * t);
  });
  const Factorization fac = factorize(f, 16);
  CHECK(fac.winding == 2);
  CHECK(fac.residual < 1e-10);
  CHECK(std::abs(fac.log_modulus.at(0) - cplx(std::log(3.0), 0.0)) < 1e-10);
  for (int n = 1; n <= 16; ++n) {
    CHECK(std::abs(fac.log_modulus.at(n)) < 1e-10);
    CHECK(std::abs(fac.log_modulus.at(-n)) < 1e-10);
  }
}

TEST_CASE("factorize exp(cos)") {
  const CircleGrid grid(256);
  const GridFunction f = GridFunction::sample(grid, [](double t) {
    return std::exp(std::cos(t));
  });
  const Factorization fac = factorize(f, 32);
  CHECK(fac.winding == 0);
  CHECK(fac.residual < 1e-10);
  CHECK(std::abs(fac.log_modulus.at(1) - cplx(0.5, 0.0)) < 1e-10);
  CHECK(std::abs(fac.log_modulus.at(-1) - cplx(0.5, 0.0)) < 1e-10);
}

TEST_CASE("factorize chi_-1 exp(0.3 i sin)") {
  const CircleGrid grid(512);
  const GridFunction f = GridFunction::sample(grid, [](double t) {
    return std::polar(1.0, -t + 0.3 * std::sin(t));
  });
  const Factorization fac = factorize(f, 32);
  CHECK(fac.winding == -1);
  CHECK(fac.residual < 1e-8);
}

TEST_CASE("factorize requires invertibility") {
  const CircleGrid grid(128);
  const GridFunction f = GridFunction::sample(grid, [](double t) { return std::cos(t); });
  CHECK_THROWS_AS(factorize(f, 8), validation_error);
}

TEST_CASE("phase unwrap failure is a resolution error") {
  // Unimodular with a localized ~3-radian phase step: the smoothed winding
  // curve interpolates across it, but the raw unwrap increment trips the
  // guard.
  const CircleGrid grid(256);
  GridFunction f = GridFunction::zeros(grid);
  for (int j = 0; j < grid.size(); ++j)
    f.values[j] = std::polar(1.0, j >= grid.size() / 2 ? 3.0 : 0.0);
  CHECK_THROWS_AS(factorize(f, 16), resolution_error);
}

TEST_CASE("factorization round trip on random model symbols") {
  std::mt19937_64 rng(11);
  const CircleGrid grid(512);
  std::uniform_int_distribution<int> nd(-4, 4);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = nd(rng);
    const SymbolSpec spec =
        model_spec(n, random_real_series(rng, 8), random_real_series(rng, 8));
    const GridFunction f = realize(spec, grid);
    const Factorization fac = factorize(f, 64);
    CHECK(fac.winding == n);
    CHECK(fac.residual < 1e-8);
    CHECK(sup_abs_diff(reconstruct(fac, grid), f) == fac.residual);
  }
}

TEST_CASE("winding additivity at the symbol level") {
  std::mt19937_64 rng(12);
  const CircleGrid grid(512);
  const GridFunction f = realize(model_spec(2, random_real_series(rng, 5),
                                            random_real_series(rng, 5)), grid);
  const GridFunction g = realize(model_spec(-3, random_real_series(rng, 5),
                                            random_real_series(rng, 5)), grid);
  const int wf = factorize(f, 32).winding;
  const int wg = factorize(g, 32).winding;
  const int wfg = factorize(pointwise_multiply(f, g), 32).winding;
  CHECK(wf == 2);
  CHECK(wg == -3);
  CHECK(wfg == wf + wg);
}

TEST_CASE("phase witness is stable modulo a 2 pi integer constant") {
  std::mt19937_64 rng(13);
  const CircleGrid grid(512);
  const SymbolSpec spec =
      model_spec(1, random_real_series(rng, 6), random_real_series(rng, 6));
  const GridFunction f = realize(spec, grid);

  // A global phase rotation moves the unwrap base point; the witnesses must
  // agree up to a constant (here compared after centering).
  GridFunction rotated = f;
  for (cplx& v : rotated.values) v *= std::polar(1.0, 2.5);
  const ClassifyResult a = classify(f);
  const ClassifyResult b = classify(rotated);

  double mean_diff = 0.0;
  for (int j = 0; j < grid.size(); ++j)
    mean_diff += b.phase_samples.values[j].real() - a.phase_samples.values[j].real();
  mean_diff /= grid.size();
  double dev = 0.0;
  for (int j = 0; j < grid.size(); ++j)
    dev = std::max(dev, std::abs(b.phase_samples.values[j].real() -
                                 a.phase_samples.values[j].real() - mean_diff));
  CHECK(dev < 1e-8);
}

TEST_CASE("classify: same component for exp(QC)-type factors") {
  std::mt19937_64 rng(14);
  const CircleGrid grid(512);
  const GridFunction f1 = realize(model_spec(1, random_real_series(rng, 6),
                                             random_real_series(rng, 6)), grid);
  const GridFunction q = evaluate(random_real_series(rng, 5, 0.5), grid);
  const GridFunction b = evaluate(random_real_series(rng, 5, 0.5), grid);
  GridFunction f2 = f1;
  for (int j = 0; j < grid.size(); ++j)
    f2.values[j] *= std::exp(cplx(q.values[j].real(), b.values[j].real()));

  const PairClassification pair = classify_pair(f1, f2);
  CHECK(pair.first.winding == 1);
  CHECK(pair.second.winding == 1);
  CHECK(pair.verdict == ComponentVerdict::Same);
}

TEST_CASE("classify: winding mismatch separates components") {
  const CircleGrid grid(256);
  const GridFunction f1 = realize(SymbolSpec::character(1), grid);
  const GridFunction f2 = realize(SymbolSpec::character(2), grid);
  const PairClassification pair = classify_pair(f1, f2);
  CHECK(pair.verdict == ComponentVerdict::Different);
  CHECK(pair.reason.find("winding") != std::string::npos);
}

TEST_CASE("classify against a reference phase function") {
  const CircleGrid grid(512);
  // f = exp(0.5) * exp(i cos): same component as chi_0 exp(i g_ref) with
  // g_ref = cos.
  const GridFunction f = GridFunction::sample(grid, [](double t) {
    return std::exp(cplx(0.5, std::cos(t)));
  });
  const GridFunction g_ref =
      GridFunction::sample(grid, [](double t) { return std::cos(t); });
  const ClassifyResult res = classify(f, g_ref, 0);
  REQUIRE(res.comparison.has_value());
  CHECK(*res.comparison == ComponentVerdict::Same);

  // Winding mismatch against the same reference.
  const GridFunction chi1 = realize(SymbolSpec::character(1), grid);
  const GridFunction zero_ref = GridFunction::zeros(grid);
  const ClassifyResult res2 = classify(chi1, zero_ref, 0);
  CHECK(*res2.comparison == ComponentVerdict::Different);
}

TEST_CASE("classify_symbol accepts trig reference phases") {
  FourierSeries cosine = FourierSeries::zero(1);
  cosine.at(1) = cplx(0.5, 0.0);
  cosine.at(-1) = cplx(0.5, 0.0);
  // exp(0.5) * exp(i cos) against the reference phase cos: same component.
  const SymbolSpec f = SymbolSpec::product(
      {SymbolSpec::trig(FourierSeries::delta(0, cplx(std::exp(0.5), 0.0))),
       SymbolSpec::exp_i_of(SymbolSpec::trig(cosine))});
  const ClassifyResult res = classify_symbol(f, SymbolSpec::trig(cosine), 0);
  REQUIRE(res.comparison.has_value());
  CHECK(*res.comparison == ComponentVerdict::Same);

  // Non-real reference specs are rejected up front.
  CHECK_THROWS_AS(classify_symbol(f, SymbolSpec::character(1), 0), validation_error);
}

TEST_CASE("classify_symbol runs a truncation ladder for builtin h") {
  ClassifyOptions opt;
  opt.realize.exp_bandwidth_factor = 2;
  const SymbolSpec f = SymbolSpec::product(
      {SymbolSpec::character(2),
       SymbolSpec::exp_i_of(SymbolSpec::builtin_h(100000, 4.0))});
  const ClassifyResult res = classify_symbol(f, std::nullopt, 0, opt);
  CHECK(res.fingerprint.winding == 2);
  REQUIRE(res.fingerprint.sup_ladder.size() == 4);  // 100, 1000, 10^4, top
  CHECK(res.fingerprint.sup_ladder.back().first == 100000);
  for (size_t i = 1; i < res.fingerprint.sup_ladder.size(); ++i)
    CHECK(res.fingerprint.sup_ladder[i].second >
          res.fingerprint.sup_ladder[i - 1].second);
  CHECK(res.fingerprint.phase_bounded == Boundedness::UnboundedTrend);
}

TEST_CASE("classify_pair_symbol separates different H multiples") {
  ClassifyOptions opt;
  opt.realize.exp_bandwidth_factor = 2;
  const SymbolSpec f1 = SymbolSpec::exp_i_of(SymbolSpec::builtin_h(100000, 3.0));
  const SymbolSpec f2 = SymbolSpec::exp_i_of(SymbolSpec::builtin_h(100000, 2.0));
  const PairClassification pair = classify_pair_symbol(f1, f2, opt);
  CHECK(pair.verdict == ComponentVerdict::Different);
  CHECK(pair.second.phase_bounded == Boundedness::UnboundedTrend);

  // Equal multiples stay together.
  const PairClassification same = classify_pair_symbol(f1, f1, opt);
  CHECK(same.verdict == ComponentVerdict::Same);
}

TEST_CASE("example h at M = 2") {
  const ExampleH ex = example_h(2, CircleGrid(64));
  CHECK(ex.h_m.values[0].real() ==
        doctest::Approx(-1.0 / (2.0 * std::log(2.0))).epsilon(1e-12));
  CHECK(ex.sup_at_zero == doctest::Approx(1.0 / (2.0 * std::log(2.0))).epsilon(1e-12));
  CHECK(ex.fejer_residual < 1e-12);
}

TEST_CASE("example h requires enough bandwidth") {
  CHECK_THROWS_AS(example_h(100, CircleGrid(64)), resolution_error);
  CHECK_THROWS_AS(example_h(1, CircleGrid(64)), validation_error);
}

TEST_CASE("example h coefficient identity and Fejer residual at M = 512") {
  const ExampleH ex = example_h(512, CircleGrid(2048));
  CHECK(ex.fejer_residual < 1e-8);
  CHECK(ex.sup_at_zero == doctest::Approx(h_sup_at_zero(512)));

  // h_M is even and negative near 0; g_M is odd.
  CHECK(ex.g_m.values[0].real() == doctest::Approx(0.0).epsilon(1e-12));
  const int g = ex.h_m.size();
  for (int j = 1; j < 16; ++j) {
    CHECK(ex.h_m.values[j].real() ==
          doctest::Approx(ex.h_m.values[g - j].real()).epsilon(1e-9));
    CHECK(ex.g_m.values[j].real() ==
          doctest::Approx(-ex.g_m.values[g - j].real()).epsilon(1e-9));
  }
}

TEST_CASE("partial sums of g converge uniformly") {
  // Cauchy sups of the sine series shrink as the truncation doubles; the
  // rate is ~1/ln M (the k*a_k -> 0 criterion), so the decay is slow but
  // strict.
  const CircleGrid grid(65536);
  double prev = 1e300;
  for (long m : {100L, 1000L, 10000L}) {
    FourierSeries diff = FourierSeries::zero(static_cast<int>(2 * m));
    for (long k = m + 1; k <= 2 * m; ++k) {
      const double b = 0.5 / (k * std::log(static_cast<double>(k)));
      diff.at(static_cast<int>(k)) = cplx(0.0, -b);
      diff.at(static_cast<int>(-k)) = cplx(0.0, b);
    }
    const double sup = sup_abs(evaluate(diff, grid));
    CHECK(sup < prev);
    prev = sup;
  }
  CHECK(prev < 0.15);
}

TEST_CASE("off-zero decay ladder decreases; the zero neighborhood lags") {
  const auto rows = uniform_convergence_off_zero({64, 128, 256, 512}, pi / 2, 3 * pi / 2);
  REQUIRE(rows.size() == 4);
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].sup < rows[i - 1].sup);
  // Fast decay off the singular point: better than halving per doubling.
  CHECK(rows.back().sup < 0.2 * rows.front().sup);

  // Contrast: over the full circle the sup sits at theta ~ 0 and decays only
  // logarithmically, so the ratio per doubling stays near 1.
  const auto full = uniform_convergence_off_zero({64, 128, 256, 512}, 0.0, two_pi);
  for (size_t i = 1; i < full.size(); ++i) {
    CHECK(full[i].sup < full[i - 1].sup);
    CHECK(full[i].sup > 0.8 * full[i - 1].sup);
  }

  // Degenerate sanity: zeroed coefficients give an all-zero table.
  FourierSeries empty = FourierSeries::zero(4);
  CHECK(sup_abs(evaluate(empty, CircleGrid(64))) == 0.0);
}

TEST_CASE("uniform_convergence_off_zero validates its interval") {
  CHECK_THROWS_AS(uniform_convergence_off_zero({64}, 2.0, 1.0), validation_error);
  CHECK_THROWS_AS(uniform_convergence_off_zero({64}, -1.0, 1.0), validation_error);
  CHECK_THROWS_AS(uniform_convergence_off_zero({}, 0.5, 1.0), validation_error);
}

TEST_CASE("classify invariance under exp(q) multiplication") {
  std::mt19937_64 rng(15);
  const CircleGrid grid(512);
  const GridFunction f = realize(model_spec(1, random_real_series(rng, 5),
                                            random_real_series(rng, 5)), grid);
  const ClassifyResult base = classify(f);

  for (int trial = 0; trial < 3; ++trial) {
    const GridFunction q = evaluate(random_real_series(rng, 6, 0.6), grid);
    GridFunction g = f;
    for (int j = 0; j < grid.size(); ++j)
      g.values[j] *= std::exp(cplx(q.values[j].real(), 0.0));
    const ClassifyResult res = classify(g);
    CHECK(res.fingerprint.winding == base.fingerprint.winding);
    CHECK(res.fingerprint.phase_bounded == base.fingerprint.phase_bounded);
    CHECK(res.fingerprint.vmo_consistent == base.fingerprint.vmo_consistent);
  }
}
