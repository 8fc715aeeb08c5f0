#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circleop/toeplitz.hpp"

using namespace circleop;

namespace {

FourierSeries two_plus_cos() {
  FourierSeries s = FourierSeries::zero(1);
  s.at(0) = cplx(2.0, 0.0);
  s.at(1) = cplx(0.5, 0.0);
  s.at(-1) = cplx(0.5, 0.0);
  return s;
}

FourierSeries random_series(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries s = FourierSeries::zero(degree);
  for (int n = -degree; n <= degree; ++n) s.at(n) = cplx(u(rng), u(rng));
  return s;
}

}  // namespace

TEST_CASE("finite section of chi_1 is the subdiagonal shift") {
  const FiniteToeplitz sec = finite_section(FourierSeries::delta(1), 4);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      CHECK(sec.entries(j, k) == (j - k == 1 ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
}

TEST_CASE("finite section of a constant is a scalar matrix") {
  const FiniteToeplitz sec = finite_section(FourierSeries::delta(0, cplx(3.0, -1.0)), 5);
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 5; ++k)
      CHECK(sec.entries(j, k) == (j == k ? cplx(3.0, -1.0) : cplx(0.0, 0.0)));
}

TEST_CASE("finite section of 2 + cos is tridiagonal") {
  const FiniteToeplitz sec = finite_section(two_plus_cos(), 3);
  CHECK(sec.entries(0, 0) == cplx(2.0, 0.0));
  CHECK(sec.entries(1, 0) == cplx(0.5, 0.0));
  CHECK(sec.entries(0, 1) == cplx(0.5, 0.0));
  CHECK(sec.entries(2, 0) == cplx(0.0, 0.0));
}

TEST_CASE("sections are exactly Toeplitz and respect conjugation") {
  std::mt19937_64 rng(1);
  const FourierSeries s = random_series(rng, 4);
  const FiniteToeplitz sec = finite_section(s, 16);
  for (int j = 0; j < 16; ++j)
    for (int k = 0; k < 16; ++k) {
      const int d = j - k;
      CHECK(sec.entries(j, k) == sec.entries(d >= 0 ? d : 0, d >= 0 ? 0 : -d));
    }

  const FiniteToeplitz conj_sec = finite_section(conjugate_series(s), 16);
  const Eigen::MatrixXcd diff = conj_sec.entries - sec.entries.adjoint();
  CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("serial and parallel section builds agree bitwise") {
  std::mt19937_64 rng(2);
  const FourierSeries s = random_series(rng, 6);
  const FiniteToeplitz a = finite_section(s, 64, Exec::Serial);
  const FiniteToeplitz b = finite_section(s, 64, Exec::Parallel);
  CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("section norms of chi_1 are one at every size") {
  const SectionReport rep = section_norm_convergence(FourierSeries::delta(1), {2, 8, 32});
  for (const auto& [n, norm] : rep.norms) CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("section norms of a constant are |c| at every size") {
  const SectionReport rep =
      section_norm_convergence(FourierSeries::delta(0, cplx(0.0, -2.5)), {4, 16});
  for (const auto& [n, norm] : rep.norms) CHECK(norm == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("section norms of 2 + cos increase toward the symbol sup") {
  const SectionReport rep = section_norm_convergence(two_plus_cos(), {16, 64, 256});
  CHECK(rep.symbol_sup == doctest::Approx(3.0).epsilon(1e-12));
  double prev = 0.0;
  for (const auto& [n, norm] : rep.norms) {
    CHECK(norm <= 3.0 + 1e-10);
    CHECK(norm >= prev - 1e-12);
    prev = norm;
    // Tridiagonal Toeplitz spectra are known: 2 + cos(pi/(N+1)).
    const double expected = 2.0 + std::cos(std::numbers::pi / (n + 1));
    CHECK(norm == doctest::Approx(expected).epsilon(1e-9));
  }
  CHECK(rep.norms.back().second > 2.99);
}

TEST_CASE("spectral norm matches singular values on random matrices") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(40, 40);
  for (int j = 0; j < 40; ++j)
    for (int k = 0; k < 40; ++k) m(j, k) = cplx(u(rng), u(rng));
  const double via_gram = spectral_norm(m);
  const Eigen::VectorXd sv = singular_values(m);
  CHECK(via_gram == doctest::Approx(sv(0)).epsilon(1e-10));
}

TEST_CASE("kernel counts match the index prediction for characters") {
  for (int n : {-3, -1, 0, 2, 5}) {
    const KernelCountResult kc =
        kernel_count_index_estimate(FourierSeries::delta(n), 64, 1e-6);
    CHECK(kc.count == std::abs(n));
    CHECK(kc.predicted == std::abs(n));
    CHECK(kc.smallest_above == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("kernel count of an invertible winding-zero symbol is zero") {
  const KernelCountResult kc = kernel_count_index_estimate(two_plus_cos(), 64, 1e-6);
  CHECK(kc.count == 0);
  CHECK(kc.predicted == 0);
}

TEST_CASE("ambiguous kernel thresholds are rejected") {
  // Smallest nonzero singular value of the 2+cos section is ~1; eps = 0.2
  // sits within a factor 10 of it.
  CHECK_THROWS_AS(kernel_count_index_estimate(two_plus_cos(), 64, 0.2),
                  contract_error);
}

TEST_CASE("semicommutator of analytic monomials vanishes exactly") {
  const SemicommutatorReport sc =
      semicommutator(FourierSeries::delta(1), FourierSeries::delta(1), 16);
  CHECK(sc.interior.cwiseAbs().maxCoeff() == 0.0);
  for (const auto& [m, norm] : sc.tail_norms) CHECK(norm == 0.0);
}

TEST_CASE("semicommutator of chi_1 and chi_-1 is minus the corner projector") {
  const SemicommutatorReport sc =
      semicommutator(FourierSeries::delta(1), FourierSeries::delta(-1), 16);
  CHECK(sc.interior(0, 0) == cplx(-1.0, 0.0));
  for (int j = 0; j < sc.interior.rows(); ++j)
    for (int k = 0; k < sc.interior.cols(); ++k)
      if (j != 0 || k != 0) CHECK(sc.interior(j, k) == cplx(0.0, 0.0));
  CHECK(sc.tail_norms.at(0) == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& [m, norm] : sc.tail_norms)
    if (m >= 1) CHECK(norm == 0.0);
}

TEST_CASE("semicommutator of random trig pairs is supported near the corner") {
  std::mt19937_64 rng(4);
  const FourierSeries phi = random_series(rng, 3);
  const FourierSeries psi = random_series(rng, 3);
  const SemicommutatorReport sc = semicommutator(phi, psi, 64);
  bool found = false;
  for (const auto& [m, norm] : sc.tail_norms) {
    if (m >= 6) {
      CHECK(norm < 1e-12);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("semicommutator demands enough room") {
  CHECK_THROWS_AS(
      semicommutator(FourierSeries::delta(3), FourierSeries::delta(-3), 8),
      resolution_error);
}

TEST_CASE("multiplicativity defect vanishes on the interior block") {
  std::mt19937_64 rng(5);
  const FourierSeries phi = random_series(rng, 2);
  const FourierSeries psi = random_series(rng, 4);
  const SemicommutatorReport sc = semicommutator(phi, psi, 48);
  // Outside the Hankel corner (indices past both degrees) everything is 0.
  const int off = 6;
  const int m = static_cast<int>(sc.interior.rows());
  CHECK(sc.interior.block(off, off, m - off, m - off).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("compact perturbation: zero perturbation reduces to section norms") {
  const PerturbationNormCheck pc =
      compact_perturbation_norm_check(two_plus_cos(), CompactPerturbation::zero(), 256);
  CHECK(pc.rhs == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(pc.holds);
  const SectionReport rep = section_norm_convergence(two_plus_cos(), {256});
  CHECK(pc.lhs.back().second == doctest::Approx(rep.norms[0].second).epsilon(1e-12));
}

TEST_CASE("compact perturbation: corner kill keeps the norm") {
  CompactPerturbation kill;
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(2), v = Eigen::VectorXcd::Zero(2);
  u(1) = cplx(-1.0, 0.0);
  v(0) = cplx(1.0, 0.0);
  kill.factors.emplace_back(u, v);
  const PerturbationNormCheck pc =
      compact_perturbation_norm_check(FourierSeries::delta(1), kill, 256);
  CHECK(pc.holds);
  CHECK(pc.lhs.back().second == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("compact perturbation rank must fit the section") {
  CompactPerturbation k;
  for (int i = 0; i < 5; ++i)
    k.factors.emplace_back(Eigen::VectorXcd::Ones(2), Eigen::VectorXcd::Ones(2));
  CHECK_THROWS_AS(compact_perturbation_norm_check(two_plus_cos(), k, 4),
                  validation_error);
}

TEST_CASE("operator component test ignores compact parts") {
  std::mt19937_64 rng(6);
  const CircleGrid grid(256);
  const GridFunction f1 = realize(SymbolSpec::character(1), grid);
  GridFunction f2 = f1;
  for (int j = 0; j < grid.size(); ++j)
    f2.values[j] *= std::exp(cplx(0.2 * std::cos(grid.theta(j)), 0.0));

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CompactPerturbation k1, k2;
  for (int i = 0; i < 3; ++i) {
    Eigen::VectorXcd a(5), b(5);
    for (int j = 0; j < 5; ++j) {
      a(j) = cplx(u(rng), u(rng));
      b(j) = cplx(u(rng), u(rng));
    }
    k1.factors.emplace_back(a, b);
    k2.factors.emplace_back(b, a);
  }

  const OperatorComponentReport with_k = operator_component_test(f1, f2, k1, k2);
  const OperatorComponentReport without =
      operator_component_test(f1, f2, CompactPerturbation::zero(),
                              CompactPerturbation::zero());
  CHECK(with_k.verdict == ComponentVerdict::Same);
  CHECK(with_k.verdict == without.verdict);

  const GridFunction f3 = realize(SymbolSpec::character(2), grid);
  const OperatorComponentReport split = operator_component_test(f1, f3, k1, k2);
  CHECK(split.verdict == ComponentVerdict::Different);
}
