#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circleop/reference.hpp"
#include "circleop/transforms.hpp"

using namespace circleop;

namespace {

FourierSeries random_real_series(std::mt19937_64& rng, int degree, double amp = 1.0) {
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

FourierSeries cos_series() {
  FourierSeries s = FourierSeries::zero(1);
  s.at(1) = cplx(0.5, 0.0);
  s.at(-1) = cplx(0.5, 0.0);
  return s;
}

FourierSeries sin_series() {
  FourierSeries s = FourierSeries::zero(1);
  s.at(1) = cplx(0.0, -0.5);
  s.at(-1) = cplx(0.0, 0.5);
  return s;
}

}  // namespace

TEST_CASE("hilbert maps cos to sin and sin to -cos") {
  const FourierSeries hc = hilbert(cos_series());
  const FourierSeries expected_sin = sin_series();
  for (int n = -1; n <= 1; ++n) CHECK(hc.at(n) == expected_sin.at(n));

  // Oracle: apply the -i*sgn(n) weights by hand to the sin coefficients.
  const FourierSeries hs = hilbert(sin_series());
  CHECK(hs.at(1) == cplx(-0.5, 0.0));
  CHECK(hs.at(-1) == cplx(-0.5, 0.0));
  const FourierSeries minus_cos = cplx(-1.0, 0.0) * cos_series();
  for (int n = -1; n <= 1; ++n) CHECK(hs.at(n) == minus_cos.at(n));
}

TEST_CASE("hilbert kills constants and zeroes the mean") {
  const FourierSeries h = hilbert(FourierSeries::delta(0, cplx(3.0, 0.0)));
  CHECK(h.at(0) == cplx(0.0, 0.0));

  std::mt19937_64 rng(1);
  const FourierSeries s = random_real_series(rng, 12);
  CHECK(hilbert(s).at(0) == cplx(0.0, 0.0));
}

TEST_CASE("hilbert preserves realness") {
  std::mt19937_64 rng(2);
  const FourierSeries s = random_real_series(rng, 16);
  CHECK(hilbert(s).real_symmetric(0.0));
}

TEST_CASE("hilbert is linear") {
  std::mt19937_64 rng(3);
  const FourierSeries a = random_real_series(rng, 10);
  const FourierSeries b = random_real_series(rng, 10);
  const FourierSeries lhs = hilbert(a + b);
  const FourierSeries rhs = hilbert(a) + hilbert(b);
  for (int n = -10; n <= 10; ++n) CHECK(lhs.at(n) == rhs.at(n));
}

TEST_CASE("double hilbert identity: 1 + cos") {
  FourierSeries s = cos_series();
  s.at(0) = cplx(1.0, 0.0);
  const TransformReport rep = double_hilbert_check(s);
  CHECK(rep.identity_residuals.at("double_hilbert_sup") == 0.0);
  // hilbert^2 gives -cos = -s + 1.
  CHECK(rep.output.at(0) == cplx(0.0, 0.0));
  CHECK(rep.output.at(1) == cplx(-0.5, 0.0));
}

TEST_CASE("double hilbert identity: constant series") {
  const TransformReport rep = double_hilbert_check(FourierSeries::delta(0));
  CHECK(rep.identity_residuals.at("double_hilbert_sup") == 0.0);
  CHECK(rep.output.max_coeff_abs() == 0.0);
}

TEST_CASE("double hilbert identity on random real series") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const FourierSeries s = random_real_series(rng, 20);
    const TransformReport rep = double_hilbert_check(s);
    CHECK(rep.identity_residuals.at("double_hilbert_sup") < 1e-12);
    CHECK(rep.identity_residuals.at("l2_contraction_slack") >= 0.0);
  }
}

TEST_CASE("L2 contraction is an equality exactly when the mean vanishes") {
  std::mt19937_64 rng(5);
  FourierSeries s = random_real_series(rng, 8);
  s.at(0) = cplx(0.7, 0.0);
  CHECK(hilbert(s).l2_norm_sq() < s.l2_norm_sq());
  s.at(0) = cplx(0.0, 0.0);
  CHECK(hilbert(s).l2_norm_sq() == s.l2_norm_sq());
}

TEST_CASE("conjugation equals minus hilbert and matches the kernel oracle") {
  const FourierSeries c = conjugation(cos_series());
  const FourierSeries ms = cplx(-1.0, 0.0) * sin_series();
  for (int n = -1; n <= 1; ++n) CHECK(c.at(n) == ms.at(n));

  CHECK(conjugation(FourierSeries::delta(0, cplx(5.0, 0.0))).max_coeff_abs() == 0.0);

  // Kernel-quadrature oracle for a degree-8 series. The sampled kernel at
  // radius r carries frequencies out to ~1/(1-r), so the quadrature grid must
  // stay well above that; the residual error is the radial smoothing, which
  // shrinks as r -> 1.
  FourierSeries s = FourierSeries::zero(8);
  s.at(1) = cplx(0.2, 0.0);
  s.at(-1) = cplx(0.2, 0.0);
  s.at(8) = cplx(0.0, -0.025);
  s.at(-8) = cplx(0.0, 0.025);
  const CircleGrid grid(8192);
  const GridFunction exact = evaluate(conjugation(s), grid);
  const GridFunction w = evaluate(s, grid);

  double prev = 1e300;
  for (double r : {0.99, 0.999}) {
    const double err =
        sup_abs_diff(reference::conjugation_kernel_quadrature(w, r), exact);
    CHECK(err < 1e-2);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("outer function of zero is the constant one") {
  const OuterFunction outer = outer_function(FourierSeries::zero(1));
  CHECK(std::abs(outer.series.at(0) - cplx(1.0, 0.0)) < 1e-14);
  CHECK(outer.offside_ratio < 1e-14);
  for (int n = 1; n <= outer.series.degree; ++n)
    CHECK(std::abs(outer.series.at(n)) < 1e-14);
}

TEST_CASE("outer function of cos matches the Taylor expansion of exp(e^{-i t})") {
  const OuterFunction outer = outer_function(cos_series());
  CHECK(outer.spectrum_nonpositive);
  CHECK(outer.offside_ratio < 1e-9);

  // a(-k) = 1/k!, a(k > 0) = 0.
  double factorial = 1.0;
  for (int k = 0; k <= 12; ++k) {
    if (k > 0) factorial *= k;
    CHECK(std::abs(outer.series.at(-k) - cplx(1.0 / factorial, 0.0)) < 1e-12);
  }
  for (int k = 1; k <= 12; ++k) CHECK(std::abs(outer.series.at(k)) < 1e-12);
}

TEST_CASE("outer function modulus identity |exp(w - i w~)| = exp(w)") {
  std::mt19937_64 rng(7);
  const CircleGrid grid(512);
  for (int trial = 0; trial < 5; ++trial) {
    const FourierSeries w = random_real_series(rng, 8, 1.0);
    OuterOptions opt;
    opt.grid_factor = 16;  // pushes the truncation tail below the 1e-10 gate
    const OuterFunction outer = outer_function(w, opt);
    const GridFunction ovals = evaluate(outer.series, grid);
    const GridFunction wvals = evaluate(w, grid);
    double sup = 0.0;
    for (int j = 0; j < grid.size(); ++j)
      sup = std::max(sup, std::abs(std::abs(ovals.values[j]) -
                                   std::exp(wvals.values[j].real())));
    CHECK(sup < 1e-10);
  }
}

TEST_CASE("outer functions of w and -w are pointwise inverses") {
  std::mt19937_64 rng(8);
  const CircleGrid grid(512);
  const FourierSeries w = random_real_series(rng, 6, 1.0);
  const OuterFunction a = outer_function(w);
  const OuterFunction b = outer_function(cplx(-1.0, 0.0) * w);
  const GridFunction prod =
      pointwise_multiply(evaluate(a.series, grid), evaluate(b.series, grid));
  const GridFunction one = GridFunction::sample(grid, [](double) { return 1.0; });
  CHECK(sup_abs_diff(prod, one) < 1e-10);
}

TEST_CASE("outer function rejects non-real input") {
  FourierSeries s = FourierSeries::zero(2);
  s.at(1) = cplx(0.3, 0.0);  // no conjugate partner
  CHECK_THROWS_AS(outer_function(s), validation_error);
}

TEST_CASE("outer function flags unresolved exponentials") {
  // Large amplitude at high frequency with a tiny expansion grid.
  FourierSeries w = FourierSeries::zero(8);
  w.at(8) = cplx(3.0, 0.0);
  w.at(-8) = cplx(3.0, 0.0);
  OuterOptions opt;
  opt.grid_factor = 1;
  opt.degree = 8;
  CHECK_THROWS_AS(outer_function(w, opt), resolution_error);
}
