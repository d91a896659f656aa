#include "superchern/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "superchern/errors.hpp"
#include "superchern/sampling.hpp"
#include "superchern/spec_file.hpp"
#include "superchern/superpath.hpp"

namespace superchern::cli {

namespace {

using nlohmann::json;

constexpr unsigned kDegreeWarning = 32;

struct Options {
  std::string spec;
  std::string mode = "exact";
  std::string point;
  double step = 1e-3;
  std::string out_path;
  bool json_stdout = false;
};

std::vector<double> require_point(const Options& opt, std::size_t n_vars) {
  if (opt.point.empty()) throw UsageError("--point is required in numeric mode");
  auto point = parse_point(opt.point);
  if (point.size() != n_vars) {
    throw UsageError("--point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(n_vars));
  }
  return point;
}

void write_out(const Options& opt, const json& doc) {
  if (opt.out_path.empty()) return;
  std::ofstream f(opt.out_path);
  if (!f) throw UsageError("cannot write " + opt.out_path);
  f << doc.dump(2) << '\n';
}

void warn_degree(std::ostream& err, unsigned degree) {
  if (degree > kDegreeWarning) {
    err << "warning: polynomial total degree " << degree << " exceeds " << kDegreeWarning << '\n';
  }
}

json numeric_degrees(const NumericExterior& e) {
  json degrees = json::array();
  for (unsigned k = 0; k <= e.n_vars; ++k) {
    json list = json::array();
    for (Mask m = 0; m < e.size(); ++m) {
      if (mask_degree(m) != k) continue;
      json dx = json::array();
      for (auto i : mask_indices(m)) dx.push_back(i + 1);
      list.push_back({{"dx", dx}, {"value", e[m]}});
    }
    degrees.push_back(std::move(list));
  }
  return degrees;
}

int cmd_chern(const Options& opt, std::ostream& out, std::ostream& err) {
  const Superconnection s = load_spec(opt.spec);
  json doc;
  if (opt.mode == "exact") {
    Form ch;
    try {
      ch = chern_character(s, ExactSeries{});
    } catch (const NotNilpotentError& e) {
      err << "error: " << e.what() << "\nhint: rerun with --mode numeric --point ...\n";
      return kExitFailure;
    }
    warn_degree(err, ch.max_poly_degree());
    doc = chern_json(s, ch);
  } else {
    const auto point = require_point(opt, s.n_vars());
    doc = chern_json(s, chern_character(s, NumericAtPoint{point, 1e-12}), point);
  }
  write_out(opt, doc);
  if (opt.json_stdout) {
    out << doc.dump(2) << '\n';
  } else {
    out << doc.at("text").get<std::string>() << '\n';
  }
  return kExitOk;
}

int cmd_transport(const Options& opt, std::ostream& out) {
  const Superconnection s = load_spec(opt.spec);
  TransportReport report;
  if (opt.mode == "exact") {
    report = verify_theorem(s, ExactSeries{});
  } else {
    steps_for(opt.step);
    report = verify_theorem(s, NumericTransport{require_point(opt, s.n_vars()), opt.step, 1e-12});
  }
  const json doc = report_json(report);
  write_out(opt, doc);
  out << doc.dump(2) << '\n';
  return report.passed ? kExitOk : kExitFailure;
}

struct CheckLine {
  enum class Status { pass, fail, skip } status;
  std::string name;
  std::string detail;
};

std::vector<CheckLine> verify_checks(const Superconnection& s, const Hooks& hooks) {
  std::vector<CheckLine> lines;
  auto record = [&lines](std::string name, bool ok, std::string detail = {}) {
    lines.push_back({ok ? CheckLine::Status::pass : CheckLine::Status::fail, std::move(name), std::move(detail)});
  };

  record("parity", parity_decompose(s.a_prime()).even.is_zero(), "A' must be odd");

  const MatForm f = curvature(s);
  record("curvature-even", parity_decompose(f).odd.is_zero(), "curvature has an odd part");
  record("bianchi", bianchi_residual(s).is_zero(), "dF + [A', F] != 0");
  record("supertrace-d", supertrace(d(f)) == d(supertrace(f)), "str(dF) != d(str F)");

  const bool exact = nilpotency_index(f).has_value();
  if (exact) {
    const Form ch = chern_character(s, ExactSeries{});
    record("closedness", d(ch).is_zero(), "d ch != 0");
    bool even_only = true;
    for (const auto& [m, c] : ch.components()) even_only = even_only && mask_degree(m) % 2 == 0;
    record("even-degrees", even_only, "ch has odd-degree components");
  } else {
    lines.push_back({CheckLine::Status::skip, "closedness", "curvature not nilpotent; exact ch unavailable"});
  }

  sampling::Rng rng(sampling::seed_from_env());
  TransportSystem sys = reduce_to_system(s);
  if (hooks.corrupt_system) hooks.corrupt_system(sys);
  try {
    if (exact) {
      const auto report = verify_theorem(s, sys, ExactSeries{});
      record("theorem", report.passed,
             "exact transport differs from exp(-F): terminal gap " + std::to_string(report.terminal_gap));
    } else {
      std::uniform_real_distribution<double> coord(-1.0, 1.0);
      bool ok = true;
      double worst = 0.0;
      for (int k = 0; k < 3; ++k) {
        std::vector<double> point(s.n_vars());
        for (auto& x : point) x = coord(rng);
        const auto report = verify_theorem(s, sys, NumericTransport{point, 1e-3, 1e-12});
        ok = ok && report.passed;
        worst = std::max(worst, report.terminal_gap);
      }
      record("theorem", ok, "numeric transport differs from exp(-F): terminal gap " + std::to_string(worst));
    }
  } catch (const std::exception& e) {
    record("theorem", false, e.what());
  }

  bool fdg_ok = true;
  const sampling::PolyParams params{3, 3, 3, 3};
  const std::size_t n = std::max<std::size_t>(s.n_vars(), 1);
  for (int k = 0; k < 20; ++k) {
    const Poly fp = sampling::random_poly(rng, n, params);
    const Poly gp = sampling::random_poly(rng, n, params);
    fdg_ok = fdg_ok && verify_fdg_contraction(fp, gp);
  }
  record("fdg-contraction", fdg_ok, "contraction routes disagree");
  return lines;
}

int cmd_verify(const Options& opt, std::ostream& out, const Hooks& hooks) {
  const Superconnection s = load_spec(opt.spec);
  bool all_ok = true;
  for (const auto& line : verify_checks(s, hooks)) {
    switch (line.status) {
      case CheckLine::Status::pass:
        out << "PASS " << line.name << '\n';
        break;
      case CheckLine::Status::skip:
        out << "SKIP " << line.name << ": " << line.detail << '\n';
        break;
      case CheckLine::Status::fail:
        out << "FAIL " << line.name << ": " << line.detail << '\n';
        all_ok = false;
        break;
    }
  }
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const Superconnection s = load_spec(opt.spec);
  const auto point = require_point(opt, s.n_vars());
  const NumericExterior numeric = chern_character(s, NumericAtPoint{point, 1e-12});
  json doc{{"point", point}, {"ch", numeric_degrees(numeric)}};
  if (nilpotency_index(curvature(s))) {
    const NumericExterior exact_at = chern_character(s, ExactSeries{}).eval(point);
    doc["exact_ch"] = numeric_degrees(exact_at);
    doc["gap"] = max_abs_diff(exact_at, numeric);
  } else {
    doc["exact_ch"] = nullptr;
    doc["gap"] = nullptr;
  }
  write_out(opt, doc);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed point coordinate '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || !std::isfinite(v)) {
      throw UsageError("malformed point coordinate '" + item + "'");
    }
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in point");
  return out;
}

json chern_json(const Superconnection& s, const Form& ch) {
  json degrees = json::array();
  for (unsigned k = 0; k <= s.n_vars(); ++k) {
    json list = json::array();
    std::vector<std::pair<std::vector<std::size_t>, std::string>> items;
    const Form part = ch.degree_component(k);
    for (const auto& [m, c] : part.components()) {
      std::vector<std::size_t> dx;
      for (auto i : mask_indices(m)) dx.push_back(i + 1);
      items.emplace_back(std::move(dx), c.to_string());
    }
    std::sort(items.begin(), items.end());
    for (auto& [dx, coeff] : items) list.push_back({{"dx", dx}, {"coeff", coeff}});
    degrees.push_back(std::move(list));
  }
  return {{"mode", "exact"},     {"n_vars", s.n_vars()},   {"p", s.shape().p},
          {"q", s.shape().q},    {"text", ch.to_string()}, {"degrees", std::move(degrees)}};
}

json chern_json(const Superconnection& s, const NumericExterior& ch, const std::vector<double>& point) {
  return {{"mode", "numeric"},  {"n_vars", s.n_vars()},    {"p", s.shape().p},
          {"q", s.shape().q},   {"point", point},          {"text", to_string(ch)},
          {"degrees", numeric_degrees(ch)}};
}

json report_json(const TransportReport& report) {
  return {{"mode", report.mode},
          {"residual_constraint", report.residual_constraint},
          {"residual_ode", report.residual_ode},
          {"terminal_gap", report.terminal_gap},
          {"ch_gap", report.ch_gap},
          {"h", report.h},
          {"point", report.point}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Chern character forms of superconnections via super parallel transport", "superchern"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&opt](CLI::App* sub, bool with_mode) {
    sub->add_option("spec", opt.spec, "superconnection spec (JSON)")->required();
    if (with_mode) {
      sub->add_option("--mode", opt.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    }
    sub->add_option("--point", opt.point, "evaluation point f,f,...");
    sub->add_option("--out", opt.out_path, "write JSON output to this path");
  };

  auto* chern = app.add_subcommand("chern", "compute ch = str exp(-F)");
  add_common(chern, true);
  chern->add_flag("--json", opt.json_stdout, "print JSON instead of the text rendering");

  auto* transport = app.add_subcommand("transport", "integrate the transport equation and compare");
  add_common(transport, true);
  transport->add_option("--step", opt.step, "RK4 step; must divide 1");

  auto* verify = app.add_subcommand("verify", "run consistency checks on a spec");
  verify->add_option("spec", opt.spec, "superconnection spec (JSON)")->required();

  auto* evalc = app.add_subcommand("eval", "numeric ch at a point, with the exact form evaluated there");
  add_common(evalc, false);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  // transport defaults to numeric; exact is opt-in.
  if (transport->parsed() && transport->count("--mode") == 0) opt.mode = "numeric";

  try {
    if (chern->parsed()) return cmd_chern(opt, out, err);
    if (transport->parsed()) return cmd_transport(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, hooks);
    return cmd_eval(opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const NotNilpotentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace superchern::cli
