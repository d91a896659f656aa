// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superchern/cli.hpp"
#include "superchern/expr.hpp"
#include "superchern/kernels.hpp"
#include "superchern/sampling.hpp"
#include "superchern/spec_file.hpp"
#include "superchern/superconnection.hpp"
#include "superchern/superpath.hpp"
#include "superchern/transport.hpp"

using namespace superchern;
using nlohmann::json;

namespace {

const std::string kData = SUPERCHERN_TEST_DATA;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

sampling::Rng rng_for(int criterion) { return sampling::Rng(sampling::seed_from_env() + 7919u * criterion); }

std::vector<double> random_point(sampling::Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<double> pt(n);
  for (auto& x : pt) x = coord(rng);
  return pt;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Criterion 1 instances, shared by 3, 4 and 5: odd A' without 0-form part.
const std::vector<Superconnection>& exact_instances() {
  static const std::vector<Superconnection> instances = [] {
    sampling::Rng rng = rng_for(1);
    std::uniform_int_distribution<std::size_t> nvars(1, 4);
    std::vector<Superconnection> out;
    for (int k = 0; k < 50; ++k) {
      const GradedShape shape = sampling::random_shape(rng, 2, 2);
      out.emplace_back(sampling::random_odd_a_prime(rng, shape, nvars(rng), {2, 3, 3, 3}));
    }
    return out;
  }();
  return instances;
}

// Elementary tensor product for the flat-case check; see tests/test_support.hpp.
MatForm independent_product(const MatForm& a, const MatForm& b) {
  const auto& shape = a.shape();
  MatForm out(shape, a.n_vars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t l = 0; l < a.size(); ++l) {
      Form acc(a.n_vars());
      for (std::size_t j = 0; j < a.size(); ++j) {
        for (const auto& [ma, ca] : a(i, j).components()) {
          for (const auto& [mb, cb] : b(j, l).components()) {
            if ((ma & mb) != 0) continue;
            std::vector<std::size_t> idx = mask_indices(ma);
            const auto jdx = mask_indices(mb);
            idx.insert(idx.end(), jdx.begin(), jdx.end());
            int sign = 1;
            for (std::size_t x = 0; x < idx.size(); ++x) {
              for (std::size_t y = x + 1; y < idx.size(); ++y) {
                if (idx[x] > idx[y]) sign = -sign;
              }
            }
            if (shape.block_parity(i, j) == Parity::odd && jdx.size() % 2 == 1) sign = -sign;
            const Poly prod = ca * cb;
            acc.add_component(ma | mb, sign > 0 ? prod : -prod);
          }
        }
      }
      out.set(i, l, acc);
    }
  }
  return out;
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;
  for (const auto& s : exact_instances()) {
    const auto sys = reduce_to_system(s);
    const MatForm psi1 = solve_exact(sys, 1);
    const MatForm expected = exp_neg(curvature(s), ExactSeries{});
    if (psi1 != expected || supertrace(psi1) != chern_character(s, ExactSeries{})) ++bad;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {bad == 0 && secs < 30.0,
          std::to_string(50 - bad) + "/50 exact matches, " + fmt(secs) + " s (target < 30 s)"};
}

constexpr double kExpTolerance = 1e-12;
// Halving ratios compare truncation errors only where the coarse gap stands
// well above double rounding (relative to the solution size).
constexpr double kRoundingFloor = 1000.0 * std::numeric_limits<double>::epsilon();
constexpr double kConstantMagnitude = 1.5;
constexpr int kMinMeasured = 10;

Outcome criterion2() {
  sampling::Rng rng = rng_for(2);
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  std::uniform_int_distribution<std::size_t> rank(1, 2);
  const bool trace = std::getenv("SUPERCHERN_ACCEPTANCE_TRACE") != nullptr;
  double worst_gap = 0.0;
  double worst_ratio = 1e300;
  int gap_failures = 0;
  int measured = 0;
  int ratio_failures = 0;
  int strict_ratio_failures = 0;
  for (int k = 0; k < 20; ++k) {
    const GradedShape shape(rank(rng), rank(rng));
    const std::size_t n = nvars(rng);
    const Superconnection s(sampling::random_odd_a_prime(rng, shape, n, {2, 3, 3, 3},
                                                         sampling::ZeroFormPart::constant, 0.3,
                                                         kConstantMagnitude));
    for (int j = 0; j < 5; ++j) {
      const auto pt = random_point(rng, n);
      const auto coarse = verify_theorem(s, NumericTransport{pt, 1e-3, kExpTolerance});
      const auto fine = verify_theorem(s, NumericTransport{pt, 5e-4, kExpTolerance});
      const double scale = std::max(1.0, max_abs(exp_neg(curvature(s), NumericAtPoint{pt, kExpTolerance})));
      const double ratio = coarse.terminal_gap / fine.terminal_gap;
      const bool resolved = coarse.terminal_gap >= kRoundingFloor * scale;
      worst_gap = std::max(worst_gap, coarse.terminal_gap);
      if (!(coarse.terminal_gap <= 1e-8)) ++gap_failures;
      if (!(ratio >= 12.0)) ++strict_ratio_failures;
      if (resolved) {
        ++measured;
        worst_ratio = std::min(worst_ratio, ratio);
        if (!(ratio >= 12.0)) ++ratio_failures;
      }
      if (trace) {
        std::cerr << "  instance " << k << " point " << j << ": gap(1e-3)=" << fmt(coarse.terminal_gap)
                  << " gap(5e-4)=" << fmt(fine.terminal_gap) << " ratio=" << fmt(ratio)
                  << " |exp|=" << fmt(scale) << (resolved ? "" : " (below rounding floor)") << '\n';
      }
    }
  }
  return {gap_failures == 0 && ratio_failures == 0 && measured >= kMinMeasured,
          "worst terminal_gap " + fmt(worst_gap) + " (<= 1e-8, " + std::to_string(gap_failures) +
              " failures); halving ratio >= 12 on " + std::to_string(measured - ratio_failures) + "/" +
              std::to_string(measured) + " resolved runs (min " + fmt(worst_ratio) + ", need >= " +
              std::to_string(kMinMeasured) + " resolved); unfiltered " + std::to_string(100 - strict_ratio_failures) +
              "/100"};
}

Outcome criterion3() {
  int bad = 0;
  const std::vector<Rational> grid{0, make_rational(1, 4), make_rational(1, 2), make_rational(3, 4), 1};
  for (const auto& s : exact_instances()) {
    const auto sys = reduce_to_system(s);
    for (const auto& t : grid) {
      const MatForm psi0 = solve_exact(sys, t);
      const MatForm psi1 = s.a_prime() * psi0;
      const MatForm dpsi0 = -(sys.generator * psi0);
      const auto r = raw_residual(s, psi0, psi1, dpsi0);
      if (!r.constraint.is_zero() || !r.ode.is_zero()) ++bad;
    }
  }
  return {bad == 0, std::to_string(50 * 5 - bad) + "/250 (instance, t) pairs with residual exactly (0, 0)"};
}

Outcome criterion4() {
  int bad = 0;
  for (const auto& s : exact_instances()) {
    const MatForm a = s.linear_part();
    const Superconnection flat(a);
    const auto sys = reduce_to_system(flat);
    const auto coeff = total_transport_coefficient(flat);
    const bool ok = flat.omega().is_zero() && sys.constraint_coeff == a &&
                    sys.generator == d(a) + independent_product(a, a) && sys.d_a_prime == d(a) &&
                    coeff.body == a && coeff.soul == -d(a) && coeff == tilde_c_pullback(a);
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(50 - bad) + "/50 flat systems structurally equal to psi1 - A psi0 = 0, G = dA + A^A"};
}

Outcome criterion5() {
  int bad = 0;
  for (const auto& s : exact_instances()) {
    if (!d(chern_character(s, ExactSeries{})).is_zero()) ++bad;
  }
  return {bad == 0, std::to_string(50 - bad) + "/50 with d(ch) = 0 exactly"};
}

Outcome criterion6() {
  sampling::Rng rng = rng_for(6);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::size_t> nvars(1, 3);
  int bad_comm = 0;
  int bad_d = 0;
  for (int k = 0; k < 100; ++k) {
    const GradedShape shape = sampling::random_shape(rng, 2, 2);
    const std::size_t n = nvars(rng);
    const MatForm a = sampling::random_homogeneous_matform(rng, shape, n, coin(rng) ? Parity::odd : Parity::even,
                                                           {2, 3, 3, 3}, 0.5);
    const MatForm b = sampling::random_homogeneous_matform(rng, shape, n, coin(rng) ? Parity::odd : Parity::even,
                                                           {2, 3, 3, 3}, 0.5);
    if (!supertrace(supercommutator(a, b)).is_zero()) ++bad_comm;
    if (supertrace(d(a)) != d(supertrace(a))) ++bad_d;
  }
  return {bad_comm == 0 && bad_d == 0, std::to_string(100 - bad_comm) + "/100 str([a,b]) = 0, " +
                                           std::to_string(100 - bad_d) + "/100 str(da) = d(str a)"};
}

Outcome criterion7() {
  sampling::Rng rng = rng_for(7);
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  int bad = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = nvars(rng);
    if (!verify_fdg_contraction(sampling::random_poly(rng, n, {3, 4, 4, 3}),
                                sampling::random_poly(rng, n, {3, 4, 4, 3}))) {
      ++bad;
    }
  }
  const auto routes = fdg_contraction_routes(parse_poly("x1", 2), parse_poly("x2", 2));
  const bool named = routes.via_connection.body == parse_form("-x1*dx2", 2) &&
                     routes.via_connection.soul == parse_form("dx1^dx2", 2) &&
                     routes.via_t_star == routes.via_connection;
  return {bad == 0 && named, std::to_string(100 - bad) + "/100 random pairs agree; f = x1, g = x2 gives " +
                                 routes.via_t_star.body.to_string() + " + (" + routes.via_t_star.soul.to_string() +
                                 ")theta"};
}

Outcome criterion8() {
  sampling::Rng rng = rng_for(8);
  std::uniform_int_distribution<std::size_t> nvars(1, 4);
  int bad = 0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = nvars(rng);
    std::uniform_int_distribution<unsigned> deg(0, static_cast<unsigned>(n));
    const Form a = sampling::random_homogeneous_form(rng, n, deg(rng), {2, 3, 3, 3});
    const Form b = sampling::random_homogeneous_form(rng, n, deg(rng), {2, 3, 3, 3});
    if (t_star(wedge(a, b)) != theta_mul(t_star(a), t_star(b))) ++bad;
  }
  return {bad == 0, std::to_string(200 - bad) + "/200 pairs multiplicative"};
}

int run_cli(std::vector<std::string> args, std::string& out, const cli::Hooks& hooks = {}) {
  args.insert(args.begin(), "superchern");
  std::ostringstream o, e;
  const int code = cli::run(args, o, e, hooks);
  out = o.str();
  return code;
}

Outcome criterion9() {
  std::vector<std::string> notes;
  bool ok = true;
  const std::string running = kData + "/running_example.json";
  std::string out;

  const bool chern_ok = run_cli({"chern", running}, out) == 0 && out == "1 - 1*dx1^dx2\n";
  ok = ok && chern_ok;
  notes.push_back(std::string("chern ") + (chern_ok ? "ok" : "MISMATCH"));

  const bool exact_ok = run_cli({"transport", running, "--mode", "exact"}, out) == 0 &&
                        json::parse(out).at("terminal_gap").get<double>() == 0.0 &&
                        json::parse(out).at("ch_gap").get<double>() == 0.0;
  const auto s = load_spec(running);
  const bool transport_form = supertrace(solve_exact(reduce_to_system(s), 1)) == parse_form("1 - dx1^dx2", 2);
  bool numeric_ok = true;
  for (const char* pt : {"0,0", "0.5,-1", "2,3"}) {
    numeric_ok = numeric_ok && run_cli({"transport", running, "--point", pt}, out) == 0 &&
                 json::parse(out).at("terminal_gap").get<double>() <= 1e-10;
  }
  ok = ok && exact_ok && transport_form && numeric_ok;
  notes.push_back(std::string("transport ") + (exact_ok && transport_form && numeric_ok ? "ok" : "MISMATCH"));

  const auto off = load_spec(kData + "/off_diagonal_c1.json");
  sampling::Rng rng = rng_for(9);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    const auto pt = random_point(rng, 2);
    worst = std::max(worst, max_abs(chern_character(off, NumericAtPoint{pt, 1e-12})));
    const auto traj = solve_rk4(reduce_to_system(off), pt, 1e-3);
    worst = std::max(worst, max_abs(supertrace(traj.psi0.back())));
  }
  ok = ok && worst <= 1e-8;
  notes.push_back("(1,1) c = 1 worst |ch| " + fmt(worst) + " (<= 1e-8)");

  std::string detail;
  for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
  return {ok, detail};
}

Outcome criterion10() {
  const std::string running = kData + "/running_example.json";
  std::string clean_out;
  const int clean = run_cli({"verify", running}, clean_out);
  cli::Hooks hooks;
  hooks.corrupt_system = [](TransportSystem& sys) {
    sys.generator += MatForm::identity(sys.generator.shape(), sys.generator.n_vars()).scaled(make_rational(1, 10));
  };
  std::string out;
  const int code = run_cli({"verify", running}, out, hooks);
  const bool flagged = code == cli::kExitFailure && out.find("FAIL theorem") != std::string::npos;
  return {clean == 0 && flagged, std::string("clean verify exit ") + std::to_string(clean) +
                                     ", corrupted generator exit " + std::to_string(code) +
                                     (flagged ? " with FAIL theorem" : " without a theorem failure")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact theorem reproduction", criterion1},
      {2, "numeric theorem reproduction and RK4 order", criterion2},
      {3, "unreduced equation residuals", criterion3},
      {4, "flat and general systems agree", criterion4},
      {5, "closedness of ch", criterion5},
      {6, "supertrace algebra", criterion6},
      {7, "fdg contraction", criterion7},
      {8, "T* multiplicativity", criterion8},
      {9, "named examples", criterion9},
      {10, "negative control", criterion10},
  };
  std::cout << "seed " << sampling::seed_from_env() << ", kernels " << kernels::name(kernels::active().isa) << '\n';
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << o.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
