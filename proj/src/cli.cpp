#include "dowlab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dowlab/error.hpp"
#include "dowlab/triangle_io.hpp"
#include "dowlab/verify.hpp"
#include "dowlab/whitney.hpp"

namespace dowlab {

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  long m = 1;
  long r = 1;
  long n_max = -1;
  long n = -1;
  long k = -1;
  bool symbolic = false;
  std::string lambda;
  std::string x;
  std::string poly;
  std::string format;
  std::uint64_t seed = 0;
  long terms = 100;
  double tol = 1e-9;
  std::string out;
  std::string id;
  std::vector<long> m_set{1, 2, 3};
  std::vector<long> r_set{1, 2, 3};
};

std::optional<Rational> lambda_value(const Options& o) {
  if (o.symbolic && !o.lambda.empty() && o.lambda != "symbolic") throw UsageError("--symbolic conflicts with --lambda");
  if (o.lambda.empty() || o.lambda == "symbolic") return std::nullopt;
  try {
    return parse_rational(o.lambda);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--lambda: ") + e.what());
  }
}

Rational rational_flag(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(name) + ": " + e.what());
  }
}

Family family_flag(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  const auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  if (family_uses_m(*f) && o.m < 1) throw UsageError("--m must be >= 1");
  if ((*f == Family::WdegR || *f == Family::VdegR) && o.r < 1) throw UsageError("--r must be >= 1");
  if (family_uses_r(*f) && o.r < 0) throw UsageError("--r must be >= 0");
  return *f;
}

Format format_flag(const std::string& name, Format fallback) {
  if (name.empty()) return fallback;
  const auto f = parse_format(name);
  if (!f) throw UsageError("unknown format '" + name + "'");
  return *f;
}

// Writes through a temporary file and a rename so a reader never sees a
// partial table.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename onto " + target.string() + ": " + ec.message());
  }
}

Triangle fetch_triangle(Family f, long m, long r, long n_max) {
  const auto t = triangle(f, m, r, static_cast<std::size_t>(n_max));
  return t->n_max == static_cast<std::size_t>(n_max) ? *t : t->slice(static_cast<std::size_t>(n_max));
}

int cmd_triangle(const Options& o, std::ostream& out) {
  const Family f = family_flag(o);
  if (o.n_max < 0) throw UsageError("--n-max must be given and >= 0");
  const auto lambda = lambda_value(o);
  const Format fmt = format_flag(o.format, Format::csv);
  write_output(o.out, emit(fmt, fetch_triangle(f, o.m, o.r, o.n_max), lambda), out);
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto lambda = lambda_value(o);
  const Format fmt = format_flag(o.format, Format::csv);
  if (fmt == Format::latex) throw UsageError("eval supports json and csv output");
  nlohmann::json j;
  LambdaPoly value;
  if (!o.poly.empty()) {
    if (!o.family.empty()) throw UsageError("--poly conflicts with --family");
    try {
      value = LambdaPoly::parse(o.poly);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
    j["poly"] = value.to_string();
  } else {
    const Family f = family_flag(o);
    if (o.n < 0) throw UsageError("--n must be given and >= 0");
    const Triangle t = fetch_triangle(f, o.m, o.r, o.n);
    j["family"] = std::string(family_name(f));
    j["m"] = t.m;
    j["r"] = t.r;
    j["n"] = o.n;
    if (o.k >= 0) {
      if (!o.x.empty()) throw UsageError("--k and --x are exclusive");
      if (o.k > o.n) throw UsageError("--k must not exceed --n");
      value = t.at(o.n, o.k);
      j["k"] = o.k;
    } else {
      if (o.x.empty()) throw UsageError("give --k for an entry or --x for the row polynomial");
      const Rational x = rational_flag(o.x, "--x");
      Rational xk(1);
      for (long k = 0; k <= o.n; ++k) {
        value += t.at(o.n, k) * xk;
        xk *= x;
      }
      j["x"] = to_string(x);
    }
  }
  if (lambda) value = LambdaPoly(value.eval(*lambda));
  j["lambda"] = lambda ? to_string(*lambda) : std::string("symbolic");
  j["value"] = value.to_string();
  write_output(o.out, fmt == Format::json ? j.dump(2) + "\n" : value.to_string() + "\n", out);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg;
  cfg.n_max = o.n_max < 0 ? 8 : o.n_max;
  cfg.m_set = o.m_set;
  cfg.r_set = o.r_set;
  cfg.seed = o.seed;
  if (cfg.m_set.empty()) throw UsageError("--m-set must not be empty");
  for (long m : cfg.m_set)
    if (m < 1) throw UsageError("--m-set entries must be >= 1");
  for (long r : cfg.r_set)
    if (r < 1) throw UsageError("--r-set entries must be >= 1");
  std::vector<IdentityReport> reports;
  if (!o.id.empty()) {
    const auto ids = identity_ids();
    if (std::find(ids.begin(), ids.end(), o.id) == ids.end()) throw UsageError("unknown identity id '" + o.id + "'");
    reports.push_back(run_identity(o.id, cfg));
  } else {
    reports = verify_all(cfg);
  }
  write_output(o.out, reports_json(reports, cfg).dump(2) + "\n", out);
  return all_passed(reports) ? 0 : 1;
}

std::string fixed(long double v) {
  std::ostringstream os;
  os << std::setprecision(18) << v;
  return os.str();
}

int cmd_dobinski(const Options& o, std::ostream& out) {
  if (o.symbolic || o.lambda.empty() || o.lambda == "symbolic") throw UsageError("dobinski needs a numeric --lambda");
  if (o.x.empty()) throw UsageError("dobinski needs --x");
  if (o.m < 1) throw UsageError("--m must be >= 1");
  if (o.n < 0) throw UsageError("--n must be given and >= 0");
  if (o.terms < 1) throw UsageError("--terms must be >= 1");
  if (!(o.tol > 0)) throw UsageError("--tol must be positive");
  DobinskiRequest req;
  req.m = o.m;
  req.n = o.n;
  req.x = rational_flag(o.x, "--x");
  req.lambda = rational_flag(o.lambda, "--lambda");
  req.terms = o.terms;
  req.tol = o.tol;
  const DobinskiResult res = dobinski_eval(req);
  std::string text;
  if (format_flag(o.format, Format::csv) == Format::json) {
    const nlohmann::json j{{"m", req.m},         {"n", req.n},
                           {"x", to_string(req.x)}, {"lambda", to_string(req.lambda)},
                           {"terms", req.terms}, {"tol", req.tol},
                           {"truncated", fixed(res.truncated)}, {"exact", fixed(res.exact)},
                           {"abs_diff", fixed(res.abs_diff)},   {"pass", res.pass}};
    text = j.dump() + "\n";
  } else {
    text = "truncated=" + fixed(res.truncated) + " exact=" + fixed(res.exact) + " abs_diff=" + fixed(res.abs_diff) +
           " " + (res.pass ? "pass" : "fail") + "\n";
  }
  write_output(o.out, text, out);
  return res.pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate Whitney, Stirling, Bernoulli and Euler numbers", "dowlab"};
  app.require_subcommand(1);
  Options o;

  auto add_family = [&](CLI::App* c) {
    c->add_option("--family", o.family, "S1, S2, S1deg, S2deg, S1degR, S2degR, Wdeg (W), Vdeg (V), WdegR (Wr), VdegR (Vr)");
    c->add_option("--m", o.m, "group order m >= 1");
    c->add_option("--r", o.r, "shift r for the r-families");
  };
  auto add_lambda = [&](CLI::App* c) {
    c->add_flag("--symbolic", o.symbolic, "keep lambda symbolic (default)");
    c->add_option("--lambda", o.lambda, "rational value for lambda, or 'symbolic'");
  };

  auto* tri = app.add_subcommand("triangle", "print a triangle of numbers");
  add_family(tri);
  add_lambda(tri);
  tri->add_option("--n-max", o.n_max, "last row");
  tri->add_option("--format", o.format, "csv (default), json or latex");
  tri->add_option("--out", o.out, "write to a file instead of stdout");

  auto* ev = app.add_subcommand("eval", "one entry, a row polynomial, or a given polynomial");
  add_family(ev);
  add_lambda(ev);
  ev->add_option("--n", o.n, "row");
  ev->add_option("--k", o.k, "column");
  ev->add_option("--x", o.x, "evaluate the row polynomial sum_k T(n,k) x^k");
  ev->add_option("--poly", o.poly, "polynomial in l, e.g. '1 - 3*l + 2*l^2'");
  ev->add_option("--format", o.format, "csv (plain text, default) or json");
  ev->add_option("--out", o.out, "write to a file instead of stdout");

  auto* ver = app.add_subcommand("verify", "run the identity catalog");
  ver->add_option("--n-max", o.n_max, "largest n in every sweep (default 8)");
  ver->add_option("--m-set", o.m_set, "comma separated m values")->delimiter(',');
  ver->add_option("--r-set", o.r_set, "comma separated r values")->delimiter(',');
  ver->add_option("--seed", o.seed, "seed for random sample points");
  ver->add_option("--id", o.id, "run a single identity");
  ver->add_option("--out", o.out, "write the report to a file");

  auto* dob = app.add_subcommand("dobinski", "truncated Dobinski series against the exact Dowling polynomial");
  dob->add_option("--m", o.m, "group order m >= 1");
  dob->add_option("--n", o.n, "index n");
  dob->add_option("--x", o.x, "rational x");
  add_lambda(dob);
  dob->add_option("--terms", o.terms, "number of series terms");
  dob->add_option("--tol", o.tol, "absolute tolerance");
  dob->add_option("--format", o.format, "text (default) or json");
  dob->add_option("--out", o.out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*tri) return cmd_triangle(o, out);
    if (*ev) return cmd_eval(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*dob) {
      if (o.format == "text") o.format.clear();
      return cmd_dobinski(o, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {  // ParseError, DomainError
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

}  // namespace dowlab
