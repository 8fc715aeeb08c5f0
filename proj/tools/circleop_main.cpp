#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "circleop/acceptance.hpp"
#include "circleop/symbol_io.hpp"
#include "circleop/toeplitz.hpp"

namespace {

using circleop::cplx;
using nlohmann::ordered_json;

struct CliConfig {
  int grid = 512;
  bool grid_given = false;
  int degree = 32;
  std::vector<double> radii;
  double eps = 1e-6;
  double delta = 1e-6;
  std::string out;
  std::string format = "json";
  std::string spec_text, spec_file;
  std::string spec2_text, spec2_file;
  std::string ref_text, ref_file;
  int ref_winding = 0;
  std::string ladder;
  std::string interval;
  long terms = 1000;
  std::string report;
  int bins = 64;
  int depth = -1;
  int size = 64;
  int rank = 0;
  unsigned long long seed = 12345;
  bool with_counts = false;
};

void add_common_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--grid", cfg.grid, "grid size (power of two >= 8)");
  cmd->add_option("--degree", cfg.degree, "series degree");
  cmd->add_option("--radius", cfg.radii, "smoothing radius; repeat for a stability set");
  cmd->add_option("--eps", cfg.eps, "singular-value threshold");
  cmd->add_option("--delta", cfg.delta, "invertibility threshold");
  cmd->add_option("--out", cfg.out, "output path");
  cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_spec_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--spec", cfg.spec_text, "inline symbol spec (char:n, trig:[...], h:M[:s])");
  cmd->add_option("--spec-file", cfg.spec_file, "JSON symbol spec file");
}

circleop::validation_error config_error(const std::string& what) {
  return circleop::validation_error("cli", what);
}

void validate_config(const CliConfig& cfg) {
  if (cfg.eps <= 0.0 || cfg.delta <= 0.0)
    throw config_error("thresholds must be positive");
  if (cfg.grid < 4 * cfg.degree)
    throw config_error("grid size must be at least 4 * degree (grid " +
                       std::to_string(cfg.grid) + ", degree " +
                       std::to_string(cfg.degree) + ")");
  for (double r : cfg.radii)
    if (!(r > 0.0 && r < 1.0)) throw config_error("radii must lie in (0,1)");
  if (cfg.format == "csv" && cfg.out.empty())
    throw config_error("--format csv writes the plot series and needs --out PATH");
}

circleop::WindingOptions winding_options(const CliConfig& cfg) {
  circleop::WindingOptions opt;
  if (!cfg.radii.empty()) {
    opt.radius = cfg.radii.front();
    opt.stability = cfg.radii;
  }
  opt.invertibility_delta = cfg.delta;
  return opt;
}

std::vector<long> parse_ladder(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw config_error("ladder entries must be integers: '" + item + "'");
    }
  }
  return out;
}

ordered_json series_json(const circleop::FourierSeries& s) {
  // Entries at rounding level relative to the peak are quadrature noise.
  const double floor_abs = 1e-14 * std::max(1.0, s.max_coeff_abs());
  ordered_json coeffs = ordered_json::array();
  for (int n = -s.degree; n <= s.degree; ++n) {
    const cplx c = s.at(n);
    if (std::abs(c) > floor_abs) coeffs.push_back({n, c.real(), c.imag()});
  }
  return ordered_json{{"degree", s.degree}, {"coefficients", coeffs}};
}

ordered_json profile_json(const circleop::OscillationProfile& p) {
  ordered_json levels = ordered_json::array();
  for (const auto& l : p.levels)
    levels.push_back({{"arc_length", l.arc_length},
                      {"worst_oscillation", l.worst_oscillation}});
  return levels;
}

const char* verdict_name(circleop::ComponentVerdict v) {
  switch (v) {
    case circleop::ComponentVerdict::Same: return "same";
    case circleop::ComponentVerdict::Different: return "different";
    case circleop::ComponentVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* bounded_name(circleop::Boundedness b) {
  switch (b) {
    case circleop::Boundedness::Bounded: return "bounded";
    case circleop::Boundedness::UnboundedTrend: return "unbounded_trend";
    case circleop::Boundedness::Inconclusive: return "inconclusive";
  }
  return "?";
}

ordered_json fingerprint_json(const circleop::ComponentFingerprint& fp) {
  ordered_json j;
  j["winding"] = fp.winding;
  j["phase_bounded"] = bounded_name(fp.phase_bounded);
  j["phase_sup"] = fp.phase_sup;
  j["vmo_consistent"] = fp.vmo_consistent;
  j["phase_osc_profile"] = profile_json(fp.phase_osc_profile);
  if (!fp.sup_ladder.empty()) {
    ordered_json ladder = ordered_json::array();
    for (const auto& [m, sup] : fp.sup_ladder) ladder.push_back({m, sup});
    j["sup_ladder"] = ladder;
  }
  j["witness"] = series_json(fp.witness);
  return j;
}

std::string resolve_out_path(const std::string& out) {
  namespace fs = std::filesystem;
  const fs::path p(out);
  if (p.has_parent_path()) return out;
  if (const char* dir = std::getenv("CIRCLEOP_OUT_DIR"); dir && *dir)
    return (fs::path(dir) / p).string();
  return out;
}

// Every command fills a result document and optionally a CSV plot series.
struct CommandOutput {
  ordered_json result;
  std::string csv;  // empty when the command has no plot series
};

void emit(const std::string& command, const CliConfig& cfg,
          const std::vector<std::pair<std::string, ordered_json>>& echoes,
          CommandOutput output) {
  ordered_json doc;
  doc["command"] = command;
  ordered_json config;
  config["grid"] = cfg.grid;
  config["degree"] = cfg.degree;
  config["radius"] = cfg.radii;
  config["eps"] = cfg.eps;
  config["delta"] = cfg.delta;
  config["bounded_sup"] = circleop::ClassifyOptions{}.bounded_sup;
  config["ladder_growth"] = circleop::ClassifyOptions{}.ladder_growth;
  config["format"] = cfg.format;
  config["out"] = cfg.out;
  doc["config"] = config;
  for (const auto& [name, echo] : echoes) doc[name] = echo;
  doc["result"] = std::move(output.result);

  std::cout << doc.dump(2) << "\n";

  if (!cfg.out.empty()) {
    const std::string path = resolve_out_path(cfg.out);
    std::ofstream f(path);
    if (!f) throw config_error("cannot write output file '" + path + "'");
    if (cfg.format == "csv") {
      if (output.csv.empty())
        throw config_error("this command has no CSV plot series; use --format json");
      f << output.csv;
    } else {
      f << doc.dump(2) << "\n";
    }
  }
}

circleop::FourierSeries series_from_spec(const circleop::SymbolSpec& spec,
                                         const CliConfig& cfg) {
  using Kind = circleop::SymbolSpec::Kind;
  if (spec.kind == Kind::Char) return circleop::FourierSeries::delta(spec.n);
  if (spec.kind == Kind::Trig) return spec.coeffs;
  const circleop::CircleGrid grid(cfg.grid);
  return circleop::coefficients(circleop::realize(spec, grid), cfg.degree);
}

int run_command(const std::string& name, CliConfig& cfg) {
  validate_config(cfg);
  const circleop::CircleGrid grid(cfg.grid);

  if (name == "coeffs") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::FourierSeries s =
        circleop::coefficients(circleop::realize(spec, grid), cfg.degree);
    CommandOutput out;
    out.result["series"] = series_json(s);
    std::ostringstream csv;
    csv << "n,re,im\n";
    for (int n = -s.degree; n <= s.degree; ++n)
      csv << n << "," << s.at(n).real() << "," << s.at(n).imag() << "\n";
    out.csv = csv.str();
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "hilbert") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::FourierSeries s =
        circleop::coefficients(circleop::realize(spec, grid), cfg.degree);
    const circleop::TransformReport rep = circleop::double_hilbert_check(s);
    CommandOutput out;
    out.result["series"] = series_json(circleop::hilbert(s));
    out.result["identity_residuals"] = rep.identity_residuals;
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "poisson") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const double r = cfg.radii.empty() ? 0.5 : cfg.radii.front();
    const circleop::FourierSeries s =
        circleop::coefficients(circleop::realize(spec, grid), cfg.degree);
    const circleop::GridFunction p = circleop::poisson(s, r, grid);
    CommandOutput out;
    out.result["radius"] = r;
    out.result["sup"] = circleop::sup_abs(p);
    out.result["mean_square"] = circleop::mean_square(p);
    out.result["value_at_zero"] = {p.values[0].real(), p.values[0].imag()};
    std::ostringstream csv;
    csv << "theta,re,im\n";
    for (int j = 0; j < grid.size(); ++j)
      csv << grid.theta(j) << "," << p.values[j].real() << "," << p.values[j].imag()
          << "\n";
    out.csv = csv.str();
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "oscillation") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::GridFunction f = circleop::realize(spec, grid);
    const int depth =
        cfg.depth >= 0 ? cfg.depth : circleop::default_profile_depth(grid);
    const circleop::OscillationProfile p = circleop::bmo_profile(f, depth);
    CommandOutput out;
    out.result["depth"] = depth;
    out.result["levels"] = profile_json(p);
    out.result["max_oscillation"] = p.max_oscillation();
    out.result["vmo_consistent_at_resolution"] = circleop::vmo_consistent(p);
    std::ostringstream csv;
    csv << "scale,worst_oscillation\n";
    for (const auto& l : p.levels)
      csv << l.arc_length << "," << l.worst_oscillation << "\n";
    out.csv = csv.str();
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "essrange") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    circleop::GridFunction f = circleop::realize(spec, grid);
    f.force_real(1e-9, "cli");
    const circleop::EssentialRangeEstimate est = circleop::essential_range(f, cfg.bins);
    CommandOutput out;
    out.result["lo"] = est.lo;
    out.result["hi"] = est.hi;
    out.result["bin_width"] = est.bin_width;
    out.result["occupancy"] = est.occupancy;
    ordered_json gaps = ordered_json::array();
    for (const auto& [a, b] : est.gaps) gaps.push_back({a, b});
    out.result["gaps"] = gaps;
    std::ostringstream csv;
    csv << "bin_lo,occupancy\n";
    for (size_t b = 0; b < est.occupancy.size(); ++b)
      csv << est.lo + b * est.bin_width << "," << est.occupancy[b] << "\n";
    out.csv = csv.str();
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "factor") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    circleop::FactorizeOptions opt;
    opt.delta = cfg.delta;
    opt.winding = winding_options(cfg);
    const circleop::Factorization fac =
        circleop::factorize(circleop::realize(spec, grid), cfg.degree, opt);
    CommandOutput out;
    out.result["winding"] = fac.winding;
    out.result["log_modulus"] = series_json(fac.log_modulus);
    out.result["phase"] = series_json(fac.phase);
    out.result["residual"] = fac.residual;
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "winding" || name == "index") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::WindingResult wr =
        circleop::winding_number(circleop::realize(spec, grid), winding_options(cfg));
    CommandOutput out;
    out.result["winding"] = wr.winding;
    if (name == "index") out.result["operator_index"] = -wr.winding;
    out.result["radius_used"] = wr.radius_used;
    out.result["min_curve_modulus"] = wr.min_curve_modulus;
    ordered_json stab = ordered_json::array();
    for (const auto& [r, v] : wr.stability) stab.push_back({r, v});
    out.result["stability"] = stab;
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "classify") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    std::optional<circleop::SymbolSpec> ref;
    if (!cfg.ref_text.empty() || !cfg.ref_file.empty())
      ref = circleop::load_spec(cfg.ref_text, cfg.ref_file);
    circleop::ClassifyOptions opt;
    opt.delta = cfg.delta;
    opt.witness_degree = cfg.degree;
    opt.winding = winding_options(cfg);
    const circleop::ClassifyResult res =
        circleop::classify_symbol(spec, ref, cfg.ref_winding, opt);
    CommandOutput out;
    out.result["fingerprint"] = fingerprint_json(res.fingerprint);
    if (res.comparison) {
      out.result["comparison"] = verdict_name(*res.comparison);
      out.result["comparison_reason"] = res.comparison_reason;
    }
    std::vector<std::pair<std::string, ordered_json>> echoes = {
        {"spec_echo", circleop::spec_to_json(spec)}};
    if (ref) echoes.emplace_back("ref_echo", circleop::spec_to_json(*ref));
    emit(name, cfg, echoes, std::move(out));
    return 0;
  }

  if (name == "example-h") {
    if (cfg.terms < 2) throw config_error("--terms must be >= 2");
    int gsize = cfg.grid;
    if (!cfg.grid_given)
      gsize = circleop::next_power_of_two(
          std::max<long long>(cfg.grid, 4 * cfg.terms));
    const circleop::CircleGrid hgrid(gsize);
    const circleop::ExampleH ex = circleop::example_h(cfg.terms, hgrid);
    CommandOutput out;
    out.result["terms"] = cfg.terms;
    out.result["grid"] = gsize;
    out.result["sup_at_zero"] = ex.sup_at_zero;
    out.result["fejer_residual"] = ex.fejer_residual;
    out.result["h_at_zero"] = ex.h_m.values[0].real();
    if (!cfg.ladder.empty()) {
      double a = 0.0, b = circleop::two_pi;
      if (!cfg.interval.empty()) {
        std::stringstream ss(cfg.interval);
        std::string left, right;
        std::getline(ss, left, ':');
        std::getline(ss, right, ':');
        try {
          a = std::stod(left);
          b = std::stod(right);
        } catch (const std::exception&) {
          throw config_error("--interval is a:b with decimal bounds");
        }
      }
      const auto rows = circleop::uniform_convergence_off_zero(
          parse_ladder(cfg.ladder), a, b);
      ordered_json decay = ordered_json::array();
      std::ostringstream csv;
      csv << "terms,sup\n";
      for (const auto& row : rows) {
        decay.push_back({row.terms, row.sup});
        csv << row.terms << "," << row.sup << "\n";
      }
      out.result["decay_table"] = decay;
      out.result["interval"] = {a, b};
      out.csv = csv.str();
    }
    if (!cfg.report.empty()) {
      const std::string field = cfg.report == "sup" ? "sup_at_zero" : cfg.report;
      if (!out.result.contains(field))
        throw config_error("unknown report field '" + cfg.report + "'");
      out.result["report"] = {{"name", field}, {"value", out.result[field]}};
    }
    emit(name, cfg, {}, std::move(out));
    return 0;
  }

  if (name == "toeplitz-norms") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::FourierSeries s = series_from_spec(spec, cfg);
    std::vector<int> ladder = {16, 64, 256, 1024};
    if (!cfg.ladder.empty()) {
      ladder.clear();
      for (long v : parse_ladder(cfg.ladder)) ladder.push_back(static_cast<int>(v));
    }
    const circleop::SectionReport rep = circleop::section_norm_convergence(s, ladder);

    std::vector<int> counts;
    if (cfg.with_counts)
      for (int n : ladder) {
        const Eigen::VectorXd sv =
            circleop::singular_values(circleop::finite_section(s, n).entries);
        counts.push_back(static_cast<int>((sv.array() < cfg.eps).count()));
      }

    CommandOutput out;
    out.result["symbol_sup"] = rep.symbol_sup;
    ordered_json norms = ordered_json::array();
    std::ostringstream csv;
    csv << (cfg.with_counts ? "N,norm,count\n" : "N,norm\n");
    for (size_t i = 0; i < rep.norms.size(); ++i) {
      const auto& [n, norm] = rep.norms[i];
      if (cfg.with_counts) {
        norms.push_back({n, norm, counts[i]});
        csv << n << "," << norm << "," << counts[i] << "\n";
      } else {
        norms.push_back({n, norm});
        csv << n << "," << norm << "\n";
      }
    }
    out.result["norms"] = norms;
    out.csv = csv.str();
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "toeplitz-index") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::FourierSeries s = series_from_spec(spec, cfg);
    const circleop::KernelCountResult kc = circleop::kernel_count_index_estimate(
        s, cfg.size, cfg.eps, winding_options(cfg));
    CommandOutput out;
    out.result["size"] = cfg.size;
    out.result["eps"] = cfg.eps;
    out.result["count"] = kc.count;
    out.result["predicted"] = kc.predicted;
    out.result["smallest_retained_singular_value"] = kc.smallest_above;
    emit(name, cfg, {{"spec_echo", circleop::spec_to_json(spec)}}, std::move(out));
    return 0;
  }

  if (name == "semicommutator") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::SymbolSpec spec2 = circleop::load_spec(cfg.spec2_text, cfg.spec2_file);
    const circleop::SemicommutatorReport rep = circleop::semicommutator(
        series_from_spec(spec, cfg), series_from_spec(spec2, cfg), cfg.size);
    CommandOutput out;
    out.result["size"] = cfg.size;
    out.result["interior_sup"] = rep.interior.cwiseAbs().maxCoeff();
    ordered_json tails = ordered_json::array();
    std::ostringstream csv;
    csv << "M,tail_norm\n";
    for (const auto& [m, norm] : rep.tail_norms) {
      tails.push_back({m, norm});
      csv << m << "," << norm << "\n";
    }
    out.result["tail_norms"] = tails;
    out.csv = csv.str();
    emit(name, cfg,
         {{"spec_echo", circleop::spec_to_json(spec)},
          {"spec2_echo", circleop::spec_to_json(spec2)}},
         std::move(out));
    return 0;
  }

  if (name == "operator-classify") {
    const circleop::SymbolSpec spec = circleop::load_spec(cfg.spec_text, cfg.spec_file);
    const circleop::SymbolSpec spec2 = circleop::load_spec(cfg.spec2_text, cfg.spec2_file);
    circleop::CompactPerturbation k1, k2;
    if (cfg.rank > 0) {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (int i = 0; i < cfg.rank; ++i) {
        Eigen::VectorXcd a(8), b(8);
        for (int j = 0; j < 8; ++j) {
          a(j) = cplx(u(rng), u(rng));
          b(j) = cplx(u(rng), u(rng));
        }
        k1.factors.emplace_back(a, b);
        k2.factors.emplace_back(b, a);
      }
    }
    circleop::ClassifyOptions opt;
    opt.delta = cfg.delta;
    opt.witness_degree = cfg.degree;
    opt.winding = winding_options(cfg);
    const circleop::OperatorComponentReport rep =
        circleop::operator_component_test_symbol(spec, spec2, k1, k2, opt);
    CommandOutput out;
    out.result["verdict"] = verdict_name(rep.verdict);
    out.result["reason"] = rep.reason;
    out.result["perturbation_ranks"] = {k1.rank(), k2.rank()};
    out.result["first"] = fingerprint_json(rep.first);
    out.result["second"] = fingerprint_json(rep.second);
    emit(name, cfg,
         {{"spec_echo", circleop::spec_to_json(spec)},
          {"spec2_echo", circleop::spec_to_json(spec2)}},
         std::move(out));
    return 0;
  }

  if (name == "verify-all") {
    const auto results = circleop::acceptance::run_all(&std::cerr);
    CommandOutput out;
    ordered_json arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back({{"criterion", r.number},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"details", r.details}});
    out.result["criteria"] = arr;
    const bool ok = circleop::acceptance::all_passed(results);
    out.result["all_passed"] = ok;
    emit(name, cfg, {}, std::move(out));
    return ok ? 0 : 3;
  }

  throw config_error("unknown command '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circle-function analysis and Toeplitz finite-section experiments"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::vector<std::pair<std::string, CLI::App*>> commands;
  const std::vector<std::string> names = {
      "coeffs",        "hilbert",       "poisson",        "oscillation",
      "essrange",      "factor",        "winding",        "index",
      "classify",      "example-h",     "toeplitz-norms", "toeplitz-index",
      "semicommutator", "operator-classify", "verify-all"};

  for (const std::string& name : names) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common_flags(cmd, cfg);
    if (name != "example-h" && name != "verify-all") add_spec_flags(cmd, cfg);
    if (name == "semicommutator" || name == "operator-classify") {
      cmd->add_option("--spec2", cfg.spec2_text, "second inline symbol spec");
      cmd->add_option("--spec2-file", cfg.spec2_file, "second JSON spec file");
    }
    if (name == "classify") {
      cmd->add_option("--ref", cfg.ref_text, "reference phase spec (real-valued)");
      cmd->add_option("--ref-file", cfg.ref_file, "reference phase spec file");
      cmd->add_option("--ref-winding", cfg.ref_winding, "reference winding");
    }
    if (name == "example-h") {
      cmd->add_option("--terms", cfg.terms, "truncation order M");
      cmd->add_option("--ladder", cfg.ladder, "comma-separated M ladder for the decay table");
      cmd->add_option("--interval", cfg.interval, "a:b closed interval for the decay table");
      cmd->add_option("--report", cfg.report, "result field to highlight");
    }
    if (name == "oscillation") cmd->add_option("--depth", cfg.depth, "profile depth");
    if (name == "essrange") cmd->add_option("--bins", cfg.bins, "histogram bins");
    if (name == "toeplitz-norms") {
      cmd->add_option("--ladder", cfg.ladder, "section sizes");
      cmd->add_flag("--counts", cfg.with_counts,
                    "also count singular values below --eps per rung");
    }
    if (name == "toeplitz-index" || name == "semicommutator")
      cmd->add_option("--size", cfg.size, "section size N");
    if (name == "operator-classify") {
      cmd->add_option("--rank", cfg.rank, "attach random rank-r compact parts");
      cmd->add_option("--seed", cfg.seed, "seed for the random compact parts");
    }
    commands.emplace_back(name, cmd);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [name, cmd] : commands)
      if (cmd->parsed()) {
        cfg.grid_given = cmd->count("--grid") > 0;
        return run_command(name, cfg);
      }
    std::cerr << "no command given\n";
    return 1;
  } catch (const circleop::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case circleop::errc::validation: return 1;
      case circleop::errc::resolution: return 2;
      case circleop::errc::ill_conditioned:
      case circleop::errc::contract: return 3;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
