#include "circleop/toeplitz.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace circleop {

namespace {

constexpr const char* kModule = "toeplitz_numerics";

CircleGrid grid_for_series(const FourierSeries& s, int min_size = 256) {
  return CircleGrid(next_power_of_two(std::max<long long>(min_size, 4LL * (s.degree + 1))));
}

}  // namespace

FiniteToeplitz finite_section(const FourierSeries& s, int N, Exec exec) {
  if (N < 1) throw validation_error(kModule, "section size must be >= 1");
  FiniteToeplitz sec{N, Eigen::MatrixXcd(N, N), s};
  const bool par = exec == Exec::Parallel;

#pragma omp parallel for schedule(static) if (par)
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j) sec.entries(j, k) = s.at_or_zero(j - k);
  return sec;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // sqrt of the top eigenvalue of the Gram matrix; cheaper than a full SVD
  // at the sizes the section ladders reach.
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram,
                                                     Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  if (m.rows() <= 32) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

SectionReport section_norm_convergence(const FourierSeries& s,
                                       const std::vector<int>& ladder) {
  if (ladder.empty()) throw validation_error(kModule, "ladder must not be empty");
  for (size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i] <= ladder[i - 1])
      throw validation_error(kModule, "ladder must be strictly increasing");

  SectionReport rep;
  rep.symbol_sup = sup_abs(evaluate(s, grid_for_series(s)));
  for (int n : ladder)
    rep.norms.emplace_back(n, spectral_norm(finite_section(s, n).entries));
  return rep;
}

KernelCountResult kernel_count_index_estimate(const FourierSeries& s, int N,
                                              double eps,
                                              const WindingOptions& opt) {
  if (eps <= 0.0) throw validation_error(kModule, "eps must be positive");
  const GridFunction realized = evaluate(s, grid_for_series(s));
  KernelCountResult res;
  res.predicted = std::abs(operator_index(realized, opt));

  const Eigen::VectorXd sv = singular_values(finite_section(s, N).entries);
  res.count = 0;
  res.smallest_above = std::numeric_limits<double>::infinity();
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] < eps)
      ++res.count;
    else
      res.smallest_above = std::min(res.smallest_above, sv[i]);
  }
  if (std::isfinite(res.smallest_above) && res.smallest_above < 10.0 * eps)
    throw contract_error(kModule,
                         "threshold eps = " + std::to_string(eps) +
                             " is within a factor 10 of the first retained singular value " +
                             std::to_string(res.smallest_above) + "; count is ambiguous");
  return res;
}

SemicommutatorReport semicommutator(const FourierSeries& phi,
                                    const FourierSeries& psi, int N) {
  const int d = phi.degree + psi.degree;
  if (N < 2 * std::max(1, d))
    throw resolution_error(kModule,
                           "section size " + std::to_string(N) +
                               " too small for degree sum " + std::to_string(d));

  const Eigen::MatrixXcd a = finite_section(phi, N).entries;
  const Eigen::MatrixXcd b = finite_section(psi, N).entries;
  const Eigen::MatrixXcd c = finite_section(multiply(phi, psi), N).entries;
  const Eigen::MatrixXcd full = a * b - c;

  SemicommutatorReport rep;
  const int m = N - d;  // leading block, truncation edge effects excluded
  rep.interior = full.topLeftCorner(m, m);

  for (int tail = 0; tail < m; tail = tail == 0 ? 1 : 2 * tail) {
    rep.tail_norms[tail] =
        spectral_norm(rep.interior.block(tail, tail, m - tail, m - tail));
    if (tail > 4 * d + 4) break;
  }
  return rep;
}

Eigen::MatrixXcd CompactPerturbation::matrix(int N) const {
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(N, N);
  for (const auto& [u, v] : factors) {
    Eigen::VectorXcd ue = Eigen::VectorXcd::Zero(N);
    Eigen::VectorXcd ve = Eigen::VectorXcd::Zero(N);
    ue.head(std::min<int>(N, u.size())) = u.head(std::min<int>(N, u.size()));
    ve.head(std::min<int>(N, v.size())) = v.head(std::min<int>(N, v.size()));
    k += ue * ve.adjoint();
  }
  return k;
}

PerturbationNormCheck compact_perturbation_norm_check(const FourierSeries& s,
                                                      const CompactPerturbation& k,
                                                      int N) {
  if (N < 1) throw validation_error(kModule, "section size must be >= 1");
  if (k.rank() > N)
    throw validation_error(kModule, "perturbation rank exceeds the section size");

  std::vector<int> ladder;
  for (int n = std::max(8, N / 8); n < N; n *= 2) ladder.push_back(n);
  ladder.push_back(N);

  PerturbationNormCheck res;
  res.rhs = sup_abs(evaluate(s, grid_for_series(s)));
  for (int n : ladder) {
    const Eigen::MatrixXcd m = finite_section(s, n).entries + k.matrix(n);
    res.lhs.emplace_back(n, spectral_norm(m));
  }
  res.holds = res.lhs.back().second >= 0.98 * res.rhs;
  return res;
}

OperatorComponentReport operator_component_test(const GridFunction& f1,
                                                const GridFunction& f2,
                                                const CompactPerturbation& k1,
                                                const CompactPerturbation& k2,
                                                const ClassifyOptions& opt) {
  (void)k1;  // compact parts never influence the component; j(A+K) = j(A)
  (void)k2;
  const PairClassification pair = classify_pair(f1, f2, opt);
  return {pair.first, pair.second, pair.verdict, pair.reason};
}

OperatorComponentReport operator_component_test_symbol(const SymbolSpec& f1,
                                                       const SymbolSpec& f2,
                                                       const CompactPerturbation& k1,
                                                       const CompactPerturbation& k2,
                                                       const ClassifyOptions& opt) {
  (void)k1;
  (void)k2;
  const PairClassification pair = classify_pair_symbol(f1, f2, opt);
  return {pair.first, pair.second, pair.verdict, pair.reason};
}

}  // namespace circleop
