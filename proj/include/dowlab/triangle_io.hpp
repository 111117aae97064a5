#pragma once

// Text forms of a triangle. Entries always use the polynomial grammar of
// LambdaPoly::to_string (numeric lambda gives constants, i.e. reduced p/q);
// every emitter has a parser that recovers the entries exactly.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dowlab/numbers.hpp"

namespace dowlab {

enum class Format { json, csv, latex };

std::optional<Format> parse_format(std::string_view name);

using Rows = std::vector<std::vector<LambdaPoly>>;

// nullopt keeps lambda symbolic; otherwise every entry is specialized.
std::string emit_csv(const Triangle& t, const std::optional<Rational>& lambda = std::nullopt);
std::string emit_json(const Triangle& t, const std::optional<Rational>& lambda = std::nullopt);
std::string emit_latex(const Triangle& t, const std::optional<Rational>& lambda = std::nullopt);
std::string emit(Format f, const Triangle& t, const std::optional<Rational>& lambda = std::nullopt);

Rows parse_csv(std::string_view text);
Rows parse_json(std::string_view text);
Rows parse_latex(std::string_view text);
Rows parse(Format f, std::string_view text);

// "$1 - 3\lambda + \frac{1}{2}\lambda^{2}$" and back.
std::string latex_cell(const LambdaPoly& p);
LambdaPoly parse_latex_cell(std::string_view cell);

}  // namespace dowlab
