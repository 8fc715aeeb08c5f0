#include "circleop/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace circleop {

namespace {

constexpr const char* kModule = "symbol_algebra";

// -sum_{k=2}^{M} cos(k t)/(k ln k), scaled.
FourierSeries builtin_h_series(long terms, double scale) {
  FourierSeries s = FourierSeries::zero(static_cast<int>(terms));
  for (long k = 2; k <= terms; ++k) {
    const double c = -scale * 0.5 / (k * std::log(static_cast<double>(k)));
    s.at(static_cast<int>(k)) = cplx(c, 0.0);
    s.at(static_cast<int>(-k)) = cplx(c, 0.0);
  }
  return s;
}

// sum_{k=2}^{M} sin(k t)/(k ln k).
FourierSeries builtin_g_series(long terms) {
  FourierSeries s = FourierSeries::zero(static_cast<int>(terms));
  for (long k = 2; k <= terms; ++k) {
    const double b = 0.5 / (k * std::log(static_cast<double>(k)));
    s.at(static_cast<int>(k)) = cplx(0.0, -b);
    s.at(static_cast<int>(-k)) = cplx(0.0, b);
  }
  return s;
}

// Average out the rounding asymmetry of a series that represents a
// real-valued function.
FourierSeries symmetrize_real(const FourierSeries& s) {
  FourierSeries out = FourierSeries::zero(s.degree);
  for (int n = 0; n <= s.degree; ++n) {
    const cplx avg = 0.5 * (s.at(n) + std::conj(s.at(-n)));
    out.at(n) = avg;
    out.at(-n) = std::conj(avg);
  }
  out.at(0) = cplx(s.at(0).real(), 0.0);
  return out;
}

GridFunction realize_node(const SymbolSpec& spec, const CircleGrid& grid,
                          const RealizeOptions& opt);

GridFunction realize_indicator(const SymbolSpec& spec, const CircleGrid& grid) {
  GridFunction out = GridFunction::zeros(grid);
  for (int j = 0; j < grid.size(); ++j) {
    const double theta = grid.theta(j);
    for (const Arc& arc : spec.arcs) {
      double rel = std::fmod(theta - arc.start, two_pi);
      if (rel < 0.0) rel += two_pi;
      if (rel < arc.length - 1e-12 * two_pi) {
        out.values[j] = cplx(1.0, 0.0);
        break;
      }
    }
  }
  return out;
}

GridFunction realize_node(const SymbolSpec& spec, const CircleGrid& grid,
                          const RealizeOptions& opt) {
  switch (spec.kind) {
    case SymbolSpec::Kind::Char:
      return evaluate(FourierSeries::delta(spec.n), grid);
    case SymbolSpec::Kind::Trig:
      return evaluate(spec.coeffs, grid);
    case SymbolSpec::Kind::Exp: {
      GridFunction child = realize_node(spec.children[0], grid, opt);
      child.force_real(opt.real_tol, kModule);
      return pointwise_exp(child);
    }
    case SymbolSpec::Kind::ExpI: {
      GridFunction child = realize_node(spec.children[0], grid, opt);
      child.force_real(opt.real_tol, kModule);
      return pointwise_exp_i(child);
    }
    case SymbolSpec::Kind::Product: {
      GridFunction out = GridFunction::sample(grid, [](double) { return 1.0; });
      for (const SymbolSpec& factor : spec.children)
        out = pointwise_multiply(out, realize_node(factor, grid, opt));
      return out;
    }
    case SymbolSpec::Kind::Conjugate:
      return pointwise_conjugate(realize_node(spec.children[0], grid, opt));
    case SymbolSpec::Kind::HilbertOf: {
      GridFunction child = realize_node(spec.children[0], grid, opt);
      child.force_real(opt.real_tol, kModule);
      GridFunction out =
          evaluate(hilbert(coefficients(child, grid.size() / 2 - 1)), grid);
      return out.force_real(opt.real_tol, kModule);
    }
    case SymbolSpec::Kind::BuiltinH: {
      GridFunction out = evaluate(builtin_h_series(spec.terms, spec.scale), grid);
      return out.force_real(opt.real_tol, kModule);
    }
    case SymbolSpec::Kind::Indicator:
      return realize_indicator(spec, grid);
  }
  throw validation_error(kModule, "unknown spec node");
}

}  // namespace

SymbolSpec SymbolSpec::character(int n) {
  SymbolSpec s;
  s.kind = Kind::Char;
  s.n = n;
  return s;
}

SymbolSpec SymbolSpec::trig(FourierSeries series) {
  SymbolSpec s;
  s.kind = Kind::Trig;
  s.coeffs = std::move(series);
  return s;
}

SymbolSpec SymbolSpec::exp_of(SymbolSpec child) {
  SymbolSpec s;
  s.kind = Kind::Exp;
  s.children.push_back(std::move(child));
  if (!s.children[0].evaluates_real())
    throw validation_error(kModule, "exp node requires a real-valued child");
  return s;
}

SymbolSpec SymbolSpec::exp_i_of(SymbolSpec child) {
  SymbolSpec s;
  s.kind = Kind::ExpI;
  s.children.push_back(std::move(child));
  if (!s.children[0].evaluates_real())
    throw validation_error(kModule, "expi node requires a real-valued child");
  return s;
}

SymbolSpec SymbolSpec::product(std::vector<SymbolSpec> factors) {
  SymbolSpec s;
  s.kind = Kind::Product;
  s.children = std::move(factors);
  return s;
}

SymbolSpec SymbolSpec::conjugate_of(SymbolSpec child) {
  SymbolSpec s;
  s.kind = Kind::Conjugate;
  s.children.push_back(std::move(child));
  return s;
}

SymbolSpec SymbolSpec::hilbert_of(SymbolSpec child) {
  SymbolSpec s;
  s.kind = Kind::HilbertOf;
  s.children.push_back(std::move(child));
  if (!s.children[0].evaluates_real())
    throw validation_error(kModule, "hilbert node requires a real-valued child");
  return s;
}

SymbolSpec SymbolSpec::builtin_h(long terms, double scale) {
  if (terms < 2) throw validation_error(kModule, "builtin h requires terms >= 2");
  SymbolSpec s;
  s.kind = Kind::BuiltinH;
  s.terms = terms;
  s.scale = scale;
  return s;
}

SymbolSpec SymbolSpec::indicator(std::vector<Arc> arcs) {
  SymbolSpec s;
  s.kind = Kind::Indicator;
  s.arcs = std::move(arcs);
  return s;
}

bool SymbolSpec::evaluates_real() const {
  switch (kind) {
    case Kind::Char:
      return n == 0;
    case Kind::Trig:
      return coeffs.real_symmetric(1e-12);
    case Kind::Exp:
    case Kind::HilbertOf:
      return children[0].evaluates_real();
    case Kind::ExpI:
      return false;
    case Kind::Product:
      return std::all_of(children.begin(), children.end(),
                         [](const SymbolSpec& c) { return c.evaluates_real(); });
    case Kind::Conjugate:
      return children[0].evaluates_real();
    case Kind::BuiltinH:
    case Kind::Indicator:
      return true;
  }
  return false;
}

long SymbolSpec::bandwidth(int exp_factor) const {
  switch (kind) {
    case Kind::Char:
      return std::abs(n);
    case Kind::Trig:
      return coeffs.degree;
    case Kind::Exp:
    case Kind::ExpI:
      return exp_factor * std::max<long>(1, children[0].bandwidth(exp_factor));
    case Kind::Product: {
      long b = 0;
      for (const SymbolSpec& c : children) b += c.bandwidth(exp_factor);
      return b;
    }
    case Kind::Conjugate:
    case Kind::HilbertOf:
      return children[0].bandwidth(exp_factor);
    case Kind::BuiltinH:
      return terms;
    case Kind::Indicator:
      return 0;  // discontinuous; resolved at arc level, not spectrally
  }
  return 0;
}

SymbolSpec SymbolSpec::with_truncation(long new_terms) const {
  SymbolSpec out = *this;
  if (out.kind == Kind::BuiltinH) out.terms = std::max<long>(2, new_terms);
  for (SymbolSpec& c : out.children) c = c.with_truncation(new_terms);
  return out;
}

bool SymbolSpec::contains_builtin_h() const {
  if (kind == Kind::BuiltinH) return true;
  return std::any_of(children.begin(), children.end(),
                     [](const SymbolSpec& c) { return c.contains_builtin_h(); });
}

long SymbolSpec::max_builtin_terms() const {
  long m = kind == Kind::BuiltinH ? terms : 0;
  for (const SymbolSpec& c : children) m = std::max(m, c.max_builtin_terms());
  return m;
}

GridFunction realize(const SymbolSpec& spec, const CircleGrid& grid,
                     const RealizeOptions& opt) {
  const long bw = spec.bandwidth(opt.exp_bandwidth_factor);
  if (static_cast<long>(grid.size()) < 2 * bw + 2)
    throw resolution_error(kModule,
                           "spec declares bandwidth " + std::to_string(bw) +
                               " but the grid holds only " + std::to_string(grid.size()) +
                               " points; need at least " + std::to_string(2 * bw + 2));
  return realize_node(spec, grid, opt);
}

CircleGrid grid_for(const SymbolSpec& spec, const RealizeOptions& opt, int min_size) {
  const long bw = spec.bandwidth(opt.exp_bandwidth_factor);
  return CircleGrid(next_power_of_two(std::max<long long>(min_size, 2 * bw + 2)));
}

InvertibilityReport invertibility(const GridFunction& f, double delta) {
  InvertibilityReport rep;
  rep.min_modulus = min_abs(f);
  rep.invertible_at_resolution = rep.min_modulus >= delta;
  return rep;
}

namespace {

struct FactorizeDetail {
  Factorization fac;
  GridFunction phase_samples;  // unwrapped phase of chi_{-n} * u
};

FactorizeDetail factorize_detail(const GridFunction& f, int degree,
                                 const FactorizeOptions& opt) {
  const InvertibilityReport inv = invertibility(f, opt.delta);
  if (!inv.invertible_at_resolution)
    throw validation_error(kModule,
                           "factorize requires an invertible symbol; min |f| = " +
                               std::to_string(inv.min_modulus) + " < delta = " +
                               std::to_string(opt.delta));

  const CircleGrid& grid = f.grid;
  const int g = grid.size();

  FourierSeries w = symmetrize_real(coefficients(pointwise_log_abs(f), degree));
  GridFunction w_eval = evaluate(w, grid).force_real(1e-9, kModule);
  GridFunction wt_eval = evaluate(hilbert(w), grid).force_real(1e-9, kModule);

  // u = f * exp(-w + i*hilbert(w)); unimodular up to the truncation of w.
  GridFunction u = f;
  for (int j = 0; j < g; ++j)
    u.values[j] *= std::exp(cplx(-w_eval.values[j].real(), wt_eval.values[j].real()));

  const WindingResult wr = winding_number(u, opt.winding);
  const int n = wr.winding;

  // Unwrapped phase of chi_{-n} * u; cumulative argument increments.
  const double guard = opt.winding.increment_guard * std::numbers::pi;
  std::vector<double> phase(g);
  cplx prev = u.values[0];
  phase[0] = std::arg(prev);
  for (int j = 1; j < g; ++j) {
    const cplx cur = u.values[j] * std::polar(1.0, -n * grid.theta(j));
    const double inc = std::arg(cur / prev);
    if (std::abs(inc) >= guard)
      throw resolution_error(kModule,
                             "phase unwrap increment " + std::to_string(inc) +
                                 " at sample " + std::to_string(j) +
                                 " is too close to pi; raise the grid size");
    phase[j] = phase[j - 1] + inc;
    prev = cur;
  }

  FactorizeDetail det{Factorization{}, GridFunction::real(grid, phase)};
  det.fac.winding = n;
  det.fac.log_modulus = w;
  det.fac.phase = symmetrize_real(coefficients(det.phase_samples, degree));
  det.fac.residual = sup_abs_diff(f, reconstruct(det.fac, grid));
  return det;
}

}  // namespace

Factorization factorize(const GridFunction& f, int degree, const FactorizeOptions& opt) {
  return factorize_detail(f, degree, opt).fac;
}

GridFunction reconstruct(const Factorization& fac, const CircleGrid& grid) {
  const GridFunction w_eval = evaluate(fac.log_modulus, grid);
  const GridFunction wt_eval = evaluate(hilbert(fac.log_modulus), grid);
  const GridFunction g_eval = evaluate(fac.phase, grid);

  GridFunction out = GridFunction::zeros(grid);
  for (int j = 0; j < grid.size(); ++j) {
    // chi_n * exp(w - i*hilbert(w)) * exp(i*g) = chi_n * exp(w + i*(g - hilbert(w)))
    const cplx e = std::exp(cplx(w_eval.values[j].real(),
                                 g_eval.values[j].real() - wt_eval.values[j].real()));
    out.values[j] = e * std::polar(1.0, fac.winding * grid.theta(j));
  }
  return out;
}

namespace {

Boundedness ladder_verdict(const std::vector<std::pair<long, double>>& ladder,
                           const ClassifyOptions& opt) {
  if (ladder.empty()) return Boundedness::Inconclusive;
  if (ladder.size() < 2)
    return ladder.back().second < opt.bounded_sup ? Boundedness::Bounded
                                                  : Boundedness::Inconclusive;
  bool increasing = true;
  for (size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i].second <= ladder[i - 1].second) increasing = false;
  const double first = std::max(ladder.front().second, 1e-12);
  const double growth = ladder.back().second / first - 1.0;
  if (increasing && growth >= opt.ladder_growth) return Boundedness::UnboundedTrend;
  if (ladder.back().second < opt.bounded_sup) return Boundedness::Bounded;
  return Boundedness::Inconclusive;
}

// Centered phase object the boundedness and decay tests run on: the witness
// phase itself, or its difference against the reference when one is given.
GridFunction centered_phase(const GridFunction& phase,
                            const std::optional<GridFunction>& g_ref) {
  GridFunction d = phase;
  if (g_ref) {
    if (!(g_ref->grid == phase.grid))
      throw validation_error(kModule, "reference phase must live on the same grid");
    if (!g_ref->is_real())
      throw validation_error(kModule, "reference phase must be real-valued");
    for (int j = 0; j < d.size(); ++j)
      d.values[j] -= g_ref->values[j].real();
  }
  double mean = 0.0;
  for (const cplx& v : d.values) mean += v.real();
  mean /= d.size();
  for (cplx& v : d.values) v = cplx(v.real() - mean, 0.0);
  return d;
}

ComponentVerdict comparison_verdict(const ComponentFingerprint& fp, int ref_winding,
                                    std::string* reason) {
  if (fp.winding != ref_winding) {
    *reason = "winding " + std::to_string(fp.winding) + " differs from reference " +
              std::to_string(ref_winding);
    return ComponentVerdict::Different;
  }
  if (fp.phase_bounded == Boundedness::UnboundedTrend) {
    *reason = "phase difference grows along the truncation ladder";
    return ComponentVerdict::Different;
  }
  if (fp.phase_bounded == Boundedness::Bounded && fp.vmo_consistent) {
    *reason = "windings agree and the phase difference is bounded with decaying oscillation";
    return ComponentVerdict::Same;
  }
  *reason = "phase difference neither certifiably bounded nor growing at this resolution";
  return ComponentVerdict::Inconclusive;
}

}  // namespace

ClassifyResult classify(const GridFunction& f, const std::optional<GridFunction>& g_ref,
                        int ref_winding, const ClassifyOptions& opt) {
  FactorizeOptions fopt;
  fopt.delta = opt.delta;
  fopt.winding = opt.winding;
  FactorizeDetail det = factorize_detail(f, opt.witness_degree, fopt);

  const GridFunction d = centered_phase(det.phase_samples, g_ref);
  const int depth = opt.profile_depth >= 0 ? opt.profile_depth
                                           : default_profile_depth(f.grid);

  ClassifyResult res{ComponentFingerprint{}, det.phase_samples, std::nullopt, ""};
  res.fingerprint.winding = det.fac.winding;
  res.fingerprint.witness = det.fac.phase;
  res.fingerprint.phase_sup = sup_abs(d);
  res.fingerprint.phase_osc_profile = bmo_profile(d, depth);
  res.fingerprint.vmo_consistent = vmo_consistent(res.fingerprint.phase_osc_profile);
  res.fingerprint.phase_bounded = res.fingerprint.phase_sup < opt.bounded_sup
                                      ? Boundedness::Bounded
                                      : Boundedness::Inconclusive;
  if (g_ref) {
    std::string reason;
    res.comparison = comparison_verdict(res.fingerprint, ref_winding, &reason);
    res.comparison_reason = reason;
  }
  return res;
}

ClassifyResult classify_symbol(const SymbolSpec& f_spec,
                               const std::optional<SymbolSpec>& g_ref_spec,
                               int ref_winding, const ClassifyOptions& opt) {
  const bool has_ladder = f_spec.contains_builtin_h() ||
                          (g_ref_spec && g_ref_spec->contains_builtin_h());

  auto grid_for_pair = [&](const SymbolSpec& a,
                           const std::optional<SymbolSpec>& b) {
    long bw = a.bandwidth(opt.realize.exp_bandwidth_factor);
    if (b) bw = std::max(bw, b->bandwidth(opt.realize.exp_bandwidth_factor));
    return CircleGrid(next_power_of_two(std::max<long long>(512, 2 * bw + 2)));
  };

  if (g_ref_spec && !g_ref_spec->evaluates_real())
    throw validation_error(kModule, "the reference phase spec must be real-valued");

  if (!has_ladder) {
    const CircleGrid grid = grid_for_pair(f_spec, g_ref_spec);
    const GridFunction f = realize(f_spec, grid, opt.realize);
    std::optional<GridFunction> gr;
    if (g_ref_spec)
      gr = realize(*g_ref_spec, grid, opt.realize)
               .force_real(opt.realize.real_tol, kModule);
    return classify(f, gr, ref_winding, opt);
  }

  long top = f_spec.max_builtin_terms();
  if (g_ref_spec) top = std::max(top, g_ref_spec->max_builtin_terms());
  std::set<long> orders;
  for (long d = 1000; d >= 1; d /= 10)
    if (top / d >= 100) orders.insert(top / d);
  orders.insert(top);

  std::vector<std::pair<long, double>> sup_ladder;
  ClassifyResult top_result{ComponentFingerprint{},
                            GridFunction::zeros(CircleGrid(8)), std::nullopt, ""};

  for (long m : orders) {
    const SymbolSpec f_m = f_spec.with_truncation(m);
    std::optional<SymbolSpec> r_m;
    if (g_ref_spec) r_m = g_ref_spec->with_truncation(m);

    const CircleGrid grid = grid_for_pair(f_m, r_m);
    ClassifyOptions rung_opt = opt;
    if (rung_opt.winding.stability.empty() && top > 512) {
      // Rough truncations push the stable smoothing regime toward 1; tie the
      // stability radii to the resolution instead of the fixed defaults.
      const double h = two_pi / grid.size();
      rung_opt.winding.radius = 1.0 - h;
      rung_opt.winding.stability = {1.0 - 8.0 * h, 1.0 - 4.0 * h, 1.0 - h};
    }

    const GridFunction f = realize(f_m, grid, rung_opt.realize);
    std::optional<GridFunction> gr;
    if (r_m)
      gr = realize(*r_m, grid, rung_opt.realize)
               .force_real(rung_opt.realize.real_tol, kModule);

    ClassifyResult res = classify(f, gr, ref_winding, rung_opt);
    sup_ladder.emplace_back(m, res.fingerprint.phase_sup);
    if (m == top) top_result = std::move(res);
  }

  top_result.fingerprint.sup_ladder = sup_ladder;
  top_result.fingerprint.phase_bounded = ladder_verdict(sup_ladder, opt);
  if (g_ref_spec) {
    std::string reason;
    top_result.comparison =
        comparison_verdict(top_result.fingerprint, ref_winding, &reason);
    top_result.comparison_reason = reason;
  }
  return top_result;
}

PairClassification classify_pair(const GridFunction& a, const GridFunction& b,
                                 const ClassifyOptions& opt) {
  ClassifyResult r1 = classify(a, std::nullopt, 0, opt);
  ClassifyResult r2 = classify(b, r1.phase_samples, r1.fingerprint.winding, opt);
  return {r1.fingerprint, r2.fingerprint, *r2.comparison, r2.comparison_reason};
}

PairClassification classify_pair_symbol(const SymbolSpec& a, const SymbolSpec& b,
                                        const ClassifyOptions& opt) {
  const bool has_ladder = a.contains_builtin_h() || b.contains_builtin_h();

  auto common_grid = [&](const SymbolSpec& x, const SymbolSpec& y) {
    const long bw = std::max(x.bandwidth(opt.realize.exp_bandwidth_factor),
                             y.bandwidth(opt.realize.exp_bandwidth_factor));
    return CircleGrid(next_power_of_two(std::max<long long>(512, 2 * bw + 2)));
  };

  if (!has_ladder) {
    const CircleGrid grid = common_grid(a, b);
    return classify_pair(realize(a, grid, opt.realize), realize(b, grid, opt.realize),
                         opt);
  }

  const long top = std::max(a.max_builtin_terms(), b.max_builtin_terms());
  std::set<long> orders;
  for (long d = 1000; d >= 1; d /= 10)
    if (top / d >= 100) orders.insert(top / d);
  orders.insert(top);

  std::vector<std::pair<long, double>> sup_ladder;
  PairClassification result;
  for (long m : orders) {
    const SymbolSpec a_m = a.with_truncation(m);
    const SymbolSpec b_m = b.with_truncation(m);
    const CircleGrid grid = common_grid(a_m, b_m);

    ClassifyOptions rung_opt = opt;
    if (rung_opt.winding.stability.empty() && top > 512) {
      const double h = two_pi / grid.size();
      rung_opt.winding.radius = 1.0 - h;
      rung_opt.winding.stability = {1.0 - 8.0 * h, 1.0 - 4.0 * h, 1.0 - h};
    }

    ClassifyResult r1 =
        classify(realize(a_m, grid, rung_opt.realize), std::nullopt, 0, rung_opt);
    ClassifyResult r2 = classify(realize(b_m, grid, rung_opt.realize),
                                 r1.phase_samples, r1.fingerprint.winding, rung_opt);
    sup_ladder.emplace_back(m, r2.fingerprint.phase_sup);
    if (m == top) {
      result.first = r1.fingerprint;
      result.second = r2.fingerprint;
    }
  }

  result.second.sup_ladder = sup_ladder;
  result.second.phase_bounded = ladder_verdict(sup_ladder, opt);
  std::string reason;
  result.verdict = comparison_verdict(result.second, result.first.winding, &reason);
  result.reason = reason;
  return result;
}

ExampleH example_h(long terms, const CircleGrid& grid) {
  if (terms < 2) throw validation_error(kModule, "example_h requires terms >= 2");
  if (static_cast<long>(grid.size()) / 2 - 1 < terms)
    throw resolution_error(kModule,
                           "grid bandwidth " + std::to_string(grid.size() / 2 - 1) +
                               " is below the truncation order " + std::to_string(terms));

  const FourierSeries g_series = builtin_g_series(terms);
  const FourierSeries h_series = hilbert(g_series);

  // Fejer difference identity in exact coefficient arithmetic:
  // h_M - sigma_M(h_M) = -(1/(M+1)) sum_{j=2}^{M} cos(jx)/ln j.
  FourierSeries d = h_series - fejer_series(h_series, static_cast<int>(terms));
  for (long k = 2; k <= terms; ++k) {
    const double c = 0.5 / ((terms + 1) * std::log(static_cast<double>(k)));
    d.at(static_cast<int>(k)) += c;
    d.at(static_cast<int>(-k)) += c;
  }

  ExampleH out{evaluate(g_series, grid), evaluate(h_series, grid), 0.0, 0.0};
  out.g_m.force_real(1e-9, kModule);
  out.h_m.force_real(1e-9, kModule);
  out.fejer_residual = sup_abs(evaluate(d, grid));
  out.sup_at_zero = h_sup_at_zero(terms);
  return out;
}

double h_sup_at_zero(long terms) {
  if (terms < 2) throw validation_error(kModule, "h_sup_at_zero requires terms >= 2");
  double s = 0.0;
  for (long k = 2; k <= terms; ++k) s += 1.0 / (k * std::log(static_cast<double>(k)));
  return s;
}

std::vector<DecayRow> uniform_convergence_off_zero(const std::vector<long>& ladder,
                                                   double a, double b) {
  if (ladder.empty()) throw validation_error(kModule, "ladder must not be empty");
  for (long m : ladder)
    if (m < 2) throw validation_error(kModule, "ladder entries must be >= 2");
  if (!(a >= 0.0 && a < b && b <= two_pi))
    throw validation_error(kModule, "interval must satisfy 0 <= a < b <= 2*pi");

  const long top = *std::max_element(ladder.begin(), ladder.end());
  const CircleGrid grid(next_power_of_two(std::max<long long>(4096, 4 * top + 2)));

  std::vector<DecayRow> rows;
  rows.reserve(ladder.size());
  for (long m : ladder) {
    FourierSeries diff = FourierSeries::zero(static_cast<int>(2 * m));
    for (long k = m + 1; k <= 2 * m; ++k) {
      const double c = -0.5 / (k * std::log(static_cast<double>(k)));
      diff.at(static_cast<int>(k)) = cplx(c, 0.0);
      diff.at(static_cast<int>(-k)) = cplx(c, 0.0);
    }
    const GridFunction vals = evaluate(diff, grid);
    double sup = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
      const double theta = grid.theta(j);
      if (theta >= a - 1e-12 && theta <= b + 1e-12)
        sup = std::max(sup, std::abs(vals.values[j]));
    }
    rows.push_back({m, sup});
  }
  return rows;
}

}  // namespace circleop
