#pragma once

#include <string>

#include <json.hpp>

#include "circleop/symbol.hpp"

namespace circleop {

/// Self-describing tree serialization. Node fields: type, n, coeffs (as
/// [index, re, im] triples), of, factors, terms, scale, arcs (as
/// [start, length] pairs). Type strings: char, trig, exp, expi, product,
/// conjugate, hilbert, h, indicator.
nlohmann::ordered_json spec_to_json(const SymbolSpec& spec);
SymbolSpec spec_from_json(const nlohmann::json& j);

/// Inline mini-syntax for simple specs:
///   char:n           e.g. char:3, char:-2
///   trig:[n=re,...]  e.g. trig:[0=2,1=0.5,-1=0.5]; complex entries n=re/im
///   h:M[:scale]      e.g. h:1000, h:1000000:4
SymbolSpec parse_spec_inline(const std::string& text);

/// Resolves --spec / --spec-file inputs: inline text, or a JSON tree file.
SymbolSpec load_spec(const std::string& inline_text, const std::string& file_path);

}  // namespace circleop
