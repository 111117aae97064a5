#include "dowlab/triangle_io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "dowlab/error.hpp"

namespace dowlab {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  return std::nullopt;
}

namespace {

Triangle specialize(const Triangle& t, const std::optional<Rational>& lambda) {
  return lambda ? t.eval_lambda(*lambda) : t;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
}

void check_shape(const Rows& rows) {
  for (std::size_t n = 0; n < rows.size(); ++n)
    if (rows[n].size() != n + 1)
      throw ParseError("row " + std::to_string(n) + " has " + std::to_string(rows[n].size()) + " entries, expected " +
                       std::to_string(n + 1));
}

std::string latex_rational(const Rational& mag) {
  if (mag.get_den() == 1) return mag.get_num().get_str();
  return "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
}

}  // namespace

std::string emit_csv(const Triangle& t, const std::optional<Rational>& lambda) {
  const Triangle s = specialize(t, lambda);
  std::string out;
  for (const auto& row : s.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ", ";
      out += row[k].to_string();
    }
    out += "\n";
  }
  return out;
}

std::string emit_json(const Triangle& t, const std::optional<Rational>& lambda) {
  const Triangle s = specialize(t, lambda);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : s.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  const nlohmann::json j{{"family", std::string(family_name(t.family))},
                         {"m", t.m},
                         {"r", t.r},
                         {"lambda", lambda ? to_string(*lambda) : std::string("symbolic")},
                         {"n_max", t.rows.empty() ? 0 : t.rows.size() - 1},
                         {"rows", rows}};
  return j.dump(2) + "\n";
}

std::string latex_cell(const LambdaPoly& p) {
  if (p.is_zero()) return "$0$";
  std::string out = "$";
  bool first = true;
  const auto& cs = p.coeffs();
  for (std::size_t d = 0; d < cs.size(); ++d) {
    if (cs[d] == 0) continue;
    const bool negative = cs[d] < 0;
    const Rational mag = abs(cs[d]);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (d == 0 || mag != 1) out += latex_rational(mag);
    if (d > 0) out += "\\lambda";
    if (d > 1) out += "^{" + std::to_string(d) + "}";
  }
  return out + "$";
}

LambdaPoly parse_latex_cell(std::string_view cell) {
  std::string s = trim(cell);
  if (s.size() < 2 || s.front() != '$' || s.back() != '$') throw ParseError("latex cell must be $...$: '" + s + "'");
  s = s.substr(1, s.size() - 2);
  std::string g;  // rewritten into the polynomial grammar
  std::size_t i = 0;
  auto read_group = [&](const char* what) {
    if (i >= s.size() || s[i] != '{') throw ParseError(std::string("expected '{' in ") + what);
    const auto close = s.find('}', i);
    if (close == std::string::npos) throw ParseError(std::string("unclosed '{' in ") + what);
    std::string inner = s.substr(i + 1, close - i - 1);
    i = close + 1;
    return inner;
  };
  bool have_coeff = false;
  while (i < s.size()) {
    if (s.compare(i, 6, "\\frac{") == 0) {
      i += 5;
      const std::string num = read_group("\\frac");
      const std::string den = read_group("\\frac");
      g += num + "/" + den;
      have_coeff = true;
    } else if (s.compare(i, 7, "\\lambda") == 0) {
      i += 7;
      if (have_coeff) g += "*";
      g += "l";
      if (i < s.size() && s[i] == '^') {
        ++i;
        g += "^" + read_group("exponent");
      }
      have_coeff = false;
    } else {
      const char c = s[i++];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        have_coeff = true;
      } else if (c == '+' || c == '-') {
        have_coeff = false;
      } else if (c != ' ') {
        throw ParseError("unexpected character in latex cell: '" + std::string(cell) + "'");
      }
      g.push_back(c);
    }
  }
  return LambdaPoly::parse(g);
}

std::string emit_latex(const Triangle& t, const std::optional<Rational>& lambda) {
  const Triangle s = specialize(t, lambda);
  const std::size_t cols = s.rows.size();
  std::string out = "\\begin{tabular}{r|" + std::string(cols, 'c') + "}\n";
  out += "$n \\backslash k$";
  for (std::size_t k = 0; k < cols; ++k) out += " & $" + std::to_string(k) + "$";
  out += " \\\\\n\\hline\n";
  for (std::size_t n = 0; n < cols; ++n) {
    out += "$" + std::to_string(n) + "$";
    for (std::size_t k = 0; k < cols; ++k) out += k <= n ? " & " + latex_cell(s.rows[n][k]) : " &";
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

std::string emit(Format f, const Triangle& t, const std::optional<Rational>& lambda) {
  switch (f) {
    case Format::json: return emit_json(t, lambda);
    case Format::csv: return emit_csv(t, lambda);
    case Format::latex: return emit_latex(t, lambda);
  }
  throw DomainError("unknown format");
}

Rows parse_csv(std::string_view text) {
  Rows rows;
  for (const auto& line : split_lines(text)) {
    if (trim(line).empty()) continue;
    std::vector<LambdaPoly> row;
    for (const auto& cell : split(line, ",")) row.push_back(LambdaPoly::parse(cell));
    rows.push_back(std::move(row));
  }
  check_shape(rows);
  return rows;
}

Rows parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array()) throw ParseError("json triangle without rows");
  Rows rows;
  for (const auto& r : j["rows"]) {
    std::vector<LambdaPoly> row;
    for (const auto& e : r) {
      if (!e.is_string()) throw ParseError("json entries must be strings");
      row.push_back(LambdaPoly::parse(e.get<std::string>()));
    }
    rows.push_back(std::move(row));
  }
  check_shape(rows);
  return rows;
}

Rows parse_latex(std::string_view text) {
  Rows rows;
  bool in_body = false;
  for (const auto& line : split_lines(text)) {
    const std::string l = trim(line);
    if (l == "\\hline") {
      in_body = true;
      continue;
    }
    if (!in_body || l.rfind("\\end{tabular}", 0) == 0 || l.empty()) continue;
    std::string body = l;
    if (body.size() >= 2 && body.compare(body.size() - 2, 2, "\\\\") == 0) body.resize(body.size() - 2);
    const auto cells = split(body, "&");
    std::vector<LambdaPoly> row;
    for (std::size_t c = 1; c < cells.size(); ++c)
      if (!trim(cells[c]).empty()) row.push_back(parse_latex_cell(cells[c]));
    rows.push_back(std::move(row));
  }
  check_shape(rows);
  return rows;
}

Rows parse(Format f, std::string_view text) {
  switch (f) {
    case Format::json: return parse_json(text);
    case Format::csv: return parse_csv(text);
    case Format::latex: return parse_latex(text);
  }
  throw DomainError("unknown format");
}

}  // namespace dowlab
