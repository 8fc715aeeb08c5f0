#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circleop/fredholm.hpp"
#include "circleop/oscillation.hpp"
#include "circleop/transforms.hpp"

namespace circleop {

/// Declarative description of a circle function as a small expression tree.
struct SymbolSpec {
  enum class Kind {
    Char,       // chi_n(t) = e^{int}
    Trig,       // finite coefficient table
    Exp,        // exp of a real-valued child
    ExpI,       // exp(i * real-valued child)
    Product,    // pointwise product of factors
    Conjugate,  // complex conjugate of the child
    HilbertOf,  // hilbert transform of a real-valued child
    BuiltinH,   // scale * truncation of the log-divergent cosine series
                //   -sum_{k=2}^{terms} cos(k t)/(k ln k)
    Indicator,  // indicator function of a union of arcs
  };

  Kind kind = Kind::Char;
  int n = 0;                        // Char
  FourierSeries coeffs;             // Trig
  std::vector<SymbolSpec> children; // Exp/ExpI/Conjugate/HilbertOf (1), Product (list)
  long terms = 0;                   // BuiltinH, >= 2
  double scale = 1.0;               // BuiltinH
  std::vector<Arc> arcs;            // Indicator

  static SymbolSpec character(int n);
  static SymbolSpec trig(FourierSeries s);
  static SymbolSpec exp_of(SymbolSpec child);
  static SymbolSpec exp_i_of(SymbolSpec child);
  static SymbolSpec product(std::vector<SymbolSpec> factors);
  static SymbolSpec conjugate_of(SymbolSpec child);
  static SymbolSpec hilbert_of(SymbolSpec child);
  static SymbolSpec builtin_h(long terms, double scale = 1.0);
  static SymbolSpec indicator(std::vector<Arc> arcs);

  /// True when the node evaluates to a real-valued function.
  bool evaluates_real() const;

  /// Declared bandwidth estimate; Exp/ExpI multiply the child bandwidth by
  /// exp_factor.
  long bandwidth(int exp_factor) const;

  /// Copy with every BuiltinH truncation replaced by `terms` (used by the
  /// truncation-ladder classification).
  SymbolSpec with_truncation(long terms) const;

  bool contains_builtin_h() const;
  long max_builtin_terms() const;
};

struct RealizeOptions {
  int exp_bandwidth_factor = 4;
  double real_tol = 1e-9;  // relative imaginary mass allowed when forcing real
};

/// Pointwise evaluation of the spec on the grid. Requires
/// grid.size >= 2*bandwidth + 2 for the declared bandwidth.
GridFunction realize(const SymbolSpec& spec, const CircleGrid& grid,
                     const RealizeOptions& opt = {});

/// Smallest admissible power-of-two grid (>= min_size) for the spec.
CircleGrid grid_for(const SymbolSpec& spec, const RealizeOptions& opt = {},
                    int min_size = 64);

struct InvertibilityReport {
  double min_modulus = 0.0;
  bool invertible_at_resolution = false;
};

InvertibilityReport invertibility(const GridFunction& f, double delta = 1e-6);

/// f = chi_n * exp(w - i*hilbert(w)) * exp(i*g) with real series w, g.
/// The pair (w, g) is not unique; the contract is the reconstruction
/// residual, with g the phase left after removing chi_n and the outer factor.
struct Factorization {
  int winding = 0;
  FourierSeries log_modulus;  // w
  FourierSeries phase;        // g
  double residual = 0.0;      // sup |f - reconstruction| over the grid
};

struct FactorizeOptions {
  double delta = 1e-6;  // invertibility threshold
  WindingOptions winding;
};

Factorization factorize(const GridFunction& f, int degree,
                        const FactorizeOptions& opt = {});

/// Reconstruction chi_n * exp(w - i*hilbert(w)) * exp(i*g) on the grid.
GridFunction reconstruct(const Factorization& fac, const CircleGrid& grid);

enum class Boundedness { Bounded, UnboundedTrend, Inconclusive };

struct ClassifyOptions {
  double delta = 1e-6;
  int witness_degree = 64;
  int profile_depth = -1;  // -1: default depth with 8-point windows
  double bounded_sup = 50.0;
  /// UnboundedTrend requires strictly increasing ladder sups with total
  /// relative growth at least this much.
  double ladder_growth = 0.15;
  WindingOptions winding;
  RealizeOptions realize;
};

struct ComponentFingerprint {
  int winding = 0;
  Boundedness phase_bounded = Boundedness::Inconclusive;
  OscillationProfile phase_osc_profile;
  FourierSeries witness;  // truncated re-expansion of the phase
  double phase_sup = 0.0; // sup |phase - mean| over the grid
  bool vmo_consistent = false;
  std::vector<std::pair<long, double>> sup_ladder;  // truncation order -> sup
};

enum class ComponentVerdict { Same, Different, Inconclusive };

struct ClassifyResult {
  ComponentFingerprint fingerprint;
  GridFunction phase_samples;  // unwrapped phase after removing chi_n and outer
  std::optional<ComponentVerdict> comparison;
  std::string comparison_reason;
};

/// Fingerprint of an invertible symbol: winding from the factorization plus
/// boundedness and oscillation-decay tests on the phase witness. When g_ref
/// is given the same tests run on phase - g_ref and the comparison states
/// whether f and chi_ref_winding * exp(i*g_ref) share a component at this
/// resolution.
ClassifyResult classify(const GridFunction& f,
                        const std::optional<GridFunction>& g_ref = std::nullopt,
                        int ref_winding = 0, const ClassifyOptions& opt = {});

/// Spec-level classification. When the spec contains BuiltinH truncations the
/// phase sup is also tracked along the truncation ladder
/// {terms/1000, terms/100, terms/10, terms} and the boundedness verdict comes
/// from that trend.
ClassifyResult classify_symbol(const SymbolSpec& f_spec,
                               const std::optional<SymbolSpec>& g_ref_spec =
                                   std::nullopt,
                               int ref_winding = 0, const ClassifyOptions& opt = {});

/// Pairwise component test: fingerprints both symbols and compares the second
/// against the first one's winding and phase.
struct PairClassification {
  ComponentFingerprint first;
  ComponentFingerprint second;  // difference tests (and ladder) live here
  ComponentVerdict verdict = ComponentVerdict::Inconclusive;
  std::string reason;
};

PairClassification classify_pair(const GridFunction& a, const GridFunction& b,
                                 const ClassifyOptions& opt = {});

/// Spec-level pair test; BuiltinH truncation ladders run with both symbols
/// truncated in lockstep.
PairClassification classify_pair_symbol(const SymbolSpec& a, const SymbolSpec& b,
                                        const ClassifyOptions& opt = {});

struct ExampleH {
  GridFunction g_m;        // partial sine series sum_{k=2}^{M} sin(kx)/(k ln k)
  GridFunction h_m;        // its hilbert transform -sum cos(kx)/(k ln k)
  double fejer_residual;   // sup residual of the Fejer difference identity
  double sup_at_zero;      // |h_M(0)| = sum_{k=2}^{M} 1/(k ln k)
};

/// The explicit continuous-function / unbounded-conjugate pair at truncation
/// order M. Requires grid.size/2 - 1 >= M.
ExampleH example_h(long terms, const CircleGrid& grid);

/// sum_{k=2}^{M} 1/(k ln k), ascending-order summation.
double h_sup_at_zero(long terms);

struct DecayRow {
  long terms;
  double sup;  // sup over [a,b] grid points of |h_{2M} - h_M|
};

/// Cauchy-difference decay of the cosine series away from the singular point:
/// sup over [a, b] of |h_{2M} - h_M| for each ladder entry. Strictly
/// decreasing on closed intervals excluding 0 (mod 2*pi).
std::vector<DecayRow> uniform_convergence_off_zero(const std::vector<long>& ladder,
                                                   double a, double b);

}  // namespace circleop
