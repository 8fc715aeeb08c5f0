#include "circleop/symbol_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace circleop {

namespace {

constexpr const char* kModule = "symbol_algebra";

using nlohmann::json;
using nlohmann::ordered_json;

const char* kind_name(SymbolSpec::Kind k) {
  switch (k) {
    case SymbolSpec::Kind::Char: return "char";
    case SymbolSpec::Kind::Trig: return "trig";
    case SymbolSpec::Kind::Exp: return "exp";
    case SymbolSpec::Kind::ExpI: return "expi";
    case SymbolSpec::Kind::Product: return "product";
    case SymbolSpec::Kind::Conjugate: return "conjugate";
    case SymbolSpec::Kind::HilbertOf: return "hilbert";
    case SymbolSpec::Kind::BuiltinH: return "h";
    case SymbolSpec::Kind::Indicator: return "indicator";
  }
  return "?";
}

double number_from(const json& v, const char* what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    try {
      size_t pos = 0;
      const double d = std::stod(v.get<std::string>(), &pos);
      if (pos == v.get<std::string>().size()) return d;
    } catch (...) {
    }
  }
  throw validation_error(kModule, std::string("expected a decimal number for ") + what);
}

FourierSeries coeffs_from_json(const json& j) {
  int degree = 0;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3)
      throw validation_error(kModule, "coeffs entries must be [index, re, im] triples");
    degree = std::max(degree, std::abs(triple[0].get<int>()));
  }
  FourierSeries s = FourierSeries::zero(degree);
  for (const auto& triple : j)
    s.at(triple[0].get<int>()) =
        cplx(number_from(triple[1], "coeff re"), number_from(triple[2], "coeff im"));
  return s;
}

}  // namespace

ordered_json spec_to_json(const SymbolSpec& spec) {
  ordered_json j;
  j["type"] = kind_name(spec.kind);
  switch (spec.kind) {
    case SymbolSpec::Kind::Char:
      j["n"] = spec.n;
      break;
    case SymbolSpec::Kind::Trig: {
      ordered_json coeffs = ordered_json::array();
      for (int n = -spec.coeffs.degree; n <= spec.coeffs.degree; ++n) {
        const cplx c = spec.coeffs.at(n);
        if (c != cplx(0.0, 0.0)) coeffs.push_back({n, c.real(), c.imag()});
      }
      j["coeffs"] = coeffs;
      break;
    }
    case SymbolSpec::Kind::Exp:
    case SymbolSpec::Kind::ExpI:
    case SymbolSpec::Kind::Conjugate:
    case SymbolSpec::Kind::HilbertOf:
      j["of"] = spec_to_json(spec.children[0]);
      break;
    case SymbolSpec::Kind::Product: {
      ordered_json factors = ordered_json::array();
      for (const SymbolSpec& c : spec.children) factors.push_back(spec_to_json(c));
      j["factors"] = factors;
      break;
    }
    case SymbolSpec::Kind::BuiltinH:
      j["terms"] = spec.terms;
      j["scale"] = spec.scale;
      break;
    case SymbolSpec::Kind::Indicator: {
      ordered_json arcs = ordered_json::array();
      for (const Arc& a : spec.arcs) arcs.push_back({a.start, a.length});
      j["arcs"] = arcs;
      break;
    }
  }
  return j;
}

namespace {

constexpr int kMaxSpecDepth = 64;

SymbolSpec spec_from_json_at(const json& j, int depth) {
  if (depth > kMaxSpecDepth)
    throw validation_error(kModule, "spec tree is nested deeper than " +
                                        std::to_string(kMaxSpecDepth) + " levels");
  if (!j.is_object() || !j.contains("type"))
    throw validation_error(kModule, "spec node must be an object with a type field");
  const std::string type = j.at("type").get<std::string>();

  if (type == "char") return SymbolSpec::character(j.at("n").get<int>());
  if (type == "trig") return SymbolSpec::trig(coeffs_from_json(j.at("coeffs")));
  if (type == "exp") return SymbolSpec::exp_of(spec_from_json_at(j.at("of"), depth + 1));
  if (type == "expi")
    return SymbolSpec::exp_i_of(spec_from_json_at(j.at("of"), depth + 1));
  if (type == "conjugate")
    return SymbolSpec::conjugate_of(spec_from_json_at(j.at("of"), depth + 1));
  if (type == "hilbert")
    return SymbolSpec::hilbert_of(spec_from_json_at(j.at("of"), depth + 1));
  if (type == "product") {
    std::vector<SymbolSpec> factors;
    for (const auto& f : j.at("factors"))
      factors.push_back(spec_from_json_at(f, depth + 1));
    return SymbolSpec::product(std::move(factors));
  }
  if (type == "h") {
    const double scale = j.contains("scale") ? number_from(j.at("scale"), "scale") : 1.0;
    return SymbolSpec::builtin_h(j.at("terms").get<long>(), scale);
  }
  if (type == "indicator") {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2)
        throw validation_error(kModule, "arcs entries must be [start, length] pairs");
      arcs.emplace_back(number_from(a[0], "arc start"), number_from(a[1], "arc length"));
    }
    return SymbolSpec::indicator(std::move(arcs));
  }
  throw validation_error(kModule, "unknown spec type '" + type + "'");
}

}  // namespace

SymbolSpec spec_from_json(const json& j) { return spec_from_json_at(j, 0); }

SymbolSpec parse_spec_inline(const std::string& text) {
  if (text.rfind("char:", 0) == 0) {
    try {
      return SymbolSpec::character(std::stoi(text.substr(5)));
    } catch (const std::exception&) {
      throw validation_error(kModule, "char spec needs an integer, e.g. char:1");
    }
  }

  if (text.rfind("h:", 0) == 0) {
    std::stringstream ss(text.substr(2));
    std::string terms_part, scale_part;
    std::getline(ss, terms_part, ':');
    std::getline(ss, scale_part, ':');
    try {
      const long terms = std::stol(terms_part);
      const double scale = scale_part.empty() ? 1.0 : std::stod(scale_part);
      return SymbolSpec::builtin_h(terms, scale);
    } catch (const error&) {
      throw;
    } catch (const std::exception&) {
      throw validation_error(kModule, "h spec is h:TERMS[:SCALE], e.g. h:1000:4");
    }
  }

  if (text.rfind("trig:[", 0) == 0 && text.back() == ']') {
    const std::string body = text.substr(6, text.size() - 7);
    std::vector<std::tuple<int, double, double>> entries;
    std::stringstream ss(body);
    std::string item;
    int degree = 0;
    while (std::getline(ss, item, ',')) {
      const size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw validation_error(kModule, "trig entries are n=re or n=re/im");
      try {
        const int n = std::stoi(item.substr(0, eq));
        const std::string val = item.substr(eq + 1);
        const size_t slash = val.find('/');
        const double re = std::stod(val.substr(0, slash));
        const double im =
            slash == std::string::npos ? 0.0 : std::stod(val.substr(slash + 1));
        entries.emplace_back(n, re, im);
        degree = std::max(degree, std::abs(n));
      } catch (const std::exception&) {
        throw validation_error(kModule, "could not parse trig entry '" + item + "'");
      }
    }
    FourierSeries s = FourierSeries::zero(degree);
    for (const auto& [n, re, im] : entries) s.at(n) = cplx(re, im);
    return SymbolSpec::trig(std::move(s));
  }

  throw validation_error(kModule,
                         "unrecognized inline spec '" + text +
                             "'; use char:n, trig:[n=re,...], h:M[:scale], or --spec-file");
}

SymbolSpec load_spec(const std::string& inline_text, const std::string& file_path) {
  if (!inline_text.empty() && !file_path.empty())
    throw validation_error(kModule, "give either --spec or --spec-file, not both");
  if (!inline_text.empty()) return parse_spec_inline(inline_text);
  if (!file_path.empty()) {
    std::ifstream in(file_path);
    if (!in)
      throw validation_error(kModule, "cannot open spec file '" + file_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (text.size() > (8u << 20))
      throw validation_error(kModule, "spec file '" + file_path + "' exceeds 8 MiB");

    // Screen nesting before handing the text to the recursive JSON parser.
    int nest = 0, max_nest = 0;
    for (char c : text) {
      if (c == '{' || c == '[') max_nest = std::max(max_nest, ++nest);
      if (c == '}' || c == ']') --nest;
    }
    if (max_nest > 4 * kMaxSpecDepth)
      throw validation_error(kModule, "spec file '" + file_path + "' is nested too deeply");

    json j;
    try {
      j = json::parse(text);
    } catch (const std::exception& e) {
      throw validation_error(kModule,
                             "spec file '" + file_path + "' is not valid JSON: " + e.what());
    }
    return spec_from_json(j);
  }
  throw validation_error(kModule, "a symbol spec is required (--spec or --spec-file)");
}

}  // namespace circleop
