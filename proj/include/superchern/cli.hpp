#pragma once

// `superchern chern|transport|verify|eval <spec.json> [--mode exact|numeric]
//                 [--point f,f,...] [--step h] [--out path] [--json]`
//
// Exit codes: 0 success, 1 mathematical or invariant failure, 2 parse or usage error.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "superchern/transport.hpp"

namespace superchern::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Test hooks; production runs leave them empty.
struct Hooks {
  // Applied to the reduced transport system before the theorem check in `verify`.
  std::function<void(TransportSystem&)> corrupt_system;
};

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

/// Parses `f,f,...`; throws UsageError on malformed input.
std::vector<double> parse_point(const std::string& text);

nlohmann::json chern_json(const Superconnection& s, const Form& ch);
nlohmann::json chern_json(const Superconnection& s, const NumericExterior& ch, const std::vector<double>& point);
nlohmann::json report_json(const TransportReport& report);

}  // namespace superchern::cli
