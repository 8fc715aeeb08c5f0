#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "circleop/symbol.hpp"

namespace circleop {

/// N x N finite section of the Toeplitz operator: entry(j,k) = a(j-k),
/// constant along diagonals exactly.
struct FiniteToeplitz {
  int size = 0;
  Eigen::MatrixXcd entries;
  FourierSeries symbol;
};

FiniteToeplitz finite_section(const FourierSeries& s, int N,
                              Exec exec = Exec::Parallel);

/// Largest singular value (dense, deterministic).
double spectral_norm(const Eigen::MatrixXcd& m);

/// All singular values, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m);

struct SectionReport {
  std::vector<std::pair<int, double>> norms;  // N -> spectral norm
  double symbol_sup = 0.0;                    // grid sup of |f|
};

/// Section norms along an increasing ladder; each is at most the symbol sup
/// and they increase toward it.
SectionReport section_norm_convergence(const FourierSeries& s,
                                       const std::vector<int>& ladder);

struct KernelCountResult {
  int count = 0;      // singular values below eps
  int predicted = 0;  // |operator index of the symbol|
  double smallest_above = 0.0;  // smallest singular value at or above eps
};

/// Counts near-zero singular values of the section and compares with the
/// symbol-side index prediction. The sign always comes from operator_index;
/// an eps within a factor 10 of the first retained singular value is rejected
/// as ambiguous.
KernelCountResult kernel_count_index_estimate(const FourierSeries& s, int N,
                                              double eps,
                                              const WindingOptions& opt = {});

struct SemicommutatorReport {
  Eigen::MatrixXcd interior;  // leading (N - deg_phi - deg_psi) block of
                              // T_phi T_psi - T_{phi psi}
  std::map<int, double> tail_norms;  // M -> norm of the block with indices >= M
};

/// Finite-section semicommutator on the interior block (truncation edge
/// effects excluded). Requires N >= 2*(deg phi + deg psi).
SemicommutatorReport semicommutator(const FourierSeries& phi,
                                    const FourierSeries& psi, int N);

/// Finite-rank perturbation given by factor pairs: K = sum u_i v_i^*.
/// Factors are truncated or zero-extended to the section size.
struct CompactPerturbation {
  std::vector<std::pair<Eigen::VectorXcd, Eigen::VectorXcd>> factors;

  int rank() const { return static_cast<int>(factors.size()); }
  Eigen::MatrixXcd matrix(int N) const;
  static CompactPerturbation zero() { return {}; }
};

struct PerturbationNormCheck {
  std::vector<std::pair<int, double>> lhs;  // N -> ||section + K_N||
  double rhs = 0.0;                         // ||f||_inf (grid sup)
  bool holds = false;  // top-rung lhs >= 0.98 * rhs (asymptotic form)
};

/// ||T_f + K|| >= ||T_f|| realized at desk scale: reports ||section + K||
/// along a ladder up to N and checks the top rung against 0.98 * ||f||_inf.
/// The raw inequality is not asserted per rung; finite sections can dip.
PerturbationNormCheck compact_perturbation_norm_check(const FourierSeries& s,
                                                      const CompactPerturbation& k,
                                                      int N);

struct OperatorComponentReport {
  ComponentFingerprint first;
  ComponentFingerprint second;
  ComponentVerdict verdict = ComponentVerdict::Inconclusive;
  std::string reason;
};

/// Component test for T_{f1}+K1 vs T_{f2}+K2: the compact parts are ignored
/// and the verdict reduces to the symbol-level comparison.
OperatorComponentReport operator_component_test(const GridFunction& f1,
                                                const GridFunction& f2,
                                                const CompactPerturbation& k1,
                                                const CompactPerturbation& k2,
                                                const ClassifyOptions& opt = {});

/// Spec-level variant; BuiltinH truncation ladders participate as in
/// classify_symbol.
OperatorComponentReport operator_component_test_symbol(const SymbolSpec& f1,
                                                       const SymbolSpec& f2,
                                                       const CompactPerturbation& k1,
                                                       const CompactPerturbation& k2,
                                                       const ClassifyOptions& opt = {});

}  // namespace circleop
