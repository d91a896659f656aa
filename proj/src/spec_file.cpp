#include "superchern/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "superchern/errors.hpp"
#include "superchern/expr.hpp"

namespace superchern {

namespace {

using nlohmann::json;

std::size_t require_count(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("spec is missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

FormTerm parse_term(const json& t) {
  if (!t.is_object() || !t.contains("coeff") || !t.contains("dx")) {
    throw ParseError("each term must be an object with \"coeff\" and \"dx\"");
  }
  if (!t.at("coeff").is_string()) throw ParseError("\"coeff\" must be a string expression");
  if (!t.at("dx").is_array()) throw ParseError("\"dx\" must be an array of indices");
  FormTerm term;
  term.coeff = t.at("coeff").get<std::string>();
  for (const auto& i : t.at("dx")) {
    if (!i.is_number_integer()) throw ParseError("dx indices must be integers");
    const long long v = i.get<long long>();
    if (v < 1) throw ParseError("dx indices are 1-based");
    if (!term.dx.empty() && static_cast<std::size_t>(v) <= term.dx.back()) {
      throw ParseError("dx indices must be strictly increasing");
    }
    term.dx.push_back(static_cast<std::size_t>(v));
  }
  return term;
}

}  // namespace

SpecFile parse_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");

  SpecFile spec;
  spec.n_vars = require_count(doc, "n_vars");
  spec.p = require_count(doc, "p");
  spec.q = require_count(doc, "q");
  if (!doc.contains("a_prime") || !doc.at("a_prime").is_array()) {
    throw ParseError("spec needs an \"a_prime\" matrix");
  }
  for (const auto& row : doc.at("a_prime")) {
    if (!row.is_array()) throw ParseError("a_prime rows must be arrays");
    auto& out_row = spec.a_prime.emplace_back();
    for (const auto& entry : row) {
      if (!entry.is_array()) throw ParseError("a_prime entries must be arrays of terms");
      auto& terms = out_row.emplace_back();
      for (const auto& t : entry) terms.push_back(parse_term(t));
    }
  }
  return spec;
}

Superconnection build_superconnection(const SpecFile& spec) {
  if (spec.p + spec.q == 0) throw DimensionError("p + q must be at least 1");
  if (spec.n_vars > kMaxVars) throw DimensionError("n_vars exceeds " + std::to_string(kMaxVars));
  const std::size_t m = spec.p + spec.q;
  if (spec.a_prime.size() != m) {
    throw DimensionError("a_prime has " + std::to_string(spec.a_prime.size()) + " rows, expected " +
                         std::to_string(m));
  }
  MatForm a(GradedShape(spec.p, spec.q), spec.n_vars);
  for (std::size_t i = 0; i < m; ++i) {
    if (spec.a_prime[i].size() != m) {
      throw DimensionError("a_prime row " + std::to_string(i + 1) + " has " +
                           std::to_string(spec.a_prime[i].size()) + " entries, expected " +
                           std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      Form entry(spec.n_vars);
      for (const auto& term : spec.a_prime[i][j]) {
        Mask mask = 0;
        for (auto idx : term.dx) {
          if (idx > spec.n_vars) {
            throw DimensionError("dx index " + std::to_string(idx) + " exceeds n_vars " +
                                 std::to_string(spec.n_vars));
          }
          mask |= Mask{1} << (idx - 1);
        }
        entry.add_component(mask, parse_poly(term.coeff, spec.n_vars));
      }
      a.set(i, j, std::move(entry));
    }
  }
  return Superconnection(std::move(a));
}

Superconnection load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read spec file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return build_superconnection(parse_spec(buf.str()));
}

SpecFile to_spec(const MatForm& a_prime) {
  SpecFile spec;
  spec.n_vars = a_prime.n_vars();
  spec.p = a_prime.shape().p;
  spec.q = a_prime.shape().q;
  spec.a_prime.resize(a_prime.size());
  for (std::size_t i = 0; i < a_prime.size(); ++i) {
    spec.a_prime[i].resize(a_prime.size());
    for (std::size_t j = 0; j < a_prime.size(); ++j) {
      for (const auto& [mask, coeff] : a_prime(i, j).components()) {
        FormTerm term{coeff.to_string(), {}};
        for (auto idx : mask_indices(mask)) term.dx.push_back(idx + 1);
        spec.a_prime[i][j].push_back(std::move(term));
      }
    }
  }
  return spec;
}

nlohmann::json to_json(const SpecFile& spec) {
  json rows = json::array();
  for (const auto& row : spec.a_prime) {
    json r = json::array();
    for (const auto& entry : row) {
      json terms = json::array();
      for (const auto& t : entry) terms.push_back({{"coeff", t.coeff}, {"dx", t.dx}});
      r.push_back(std::move(terms));
    }
    rows.push_back(std::move(r));
  }
  return {{"n_vars", spec.n_vars}, {"p", spec.p}, {"q", spec.q}, {"a_prime", std::move(rows)}};
}

}  // namespace superchern
