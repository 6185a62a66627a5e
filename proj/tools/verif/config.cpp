#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

namespace veriflab {

using nlohmann::ordered_json;
using symjac::JacobiParams;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"basis",  "eigen",     "potentials",     "decomposition",
                                                 "sobolev", "counterexample", "inclusion", "squarefn",
                                                 "structure", "embed",  "noninclusion",   "schrodinger"};
  return names;
}

std::vector<JacobiParams> default_parameter_set() {
  return {JacobiParams(-0.5, -0.5), JacobiParams(0.0, 0.0),  JacobiParams(0.3, 0.7),
          JacobiParams(1.0, 2.0),   JacobiParams(-0.7, 0.4), JacobiParams(2.5, 1.5)};
}

namespace {

template <class T>
void take(const ordered_json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key) && !j[key].is_null()) dst = j[key].get<T>();
}

template <class T>
void take(const ordered_json& j, const char* key, T& dst) {
  if (j.contains(key) && !j[key].is_null()) dst = j[key].get<T>();
}

std::vector<JacobiParams> make_params(const std::vector<double>& alpha, const std::vector<double>& beta) {
  if (alpha.size() != beta.size()) throw ConfigError("--alpha and --beta must be given the same number of times");
  std::vector<JacobiParams> out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > -1.0) || !(beta[i] > -1.0)) {
      std::ostringstream msg;
      msg << "alpha, beta > -1 required, got (" << alpha[i] << ", " << beta[i] << ")";
      throw ConfigError(msg.str());
    }
    out.emplace_back(alpha[i], beta[i]);
  }
  return out;
}

}  // namespace

void apply_json(SuiteConfig& c, const ordered_json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    take(j, "suite", c.suite);
    if (j.contains("params")) {
      std::vector<double> a, b;
      for (const auto& pair : j["params"]) {
        if (!pair.is_array() || pair.size() != 2) throw ConfigError("params entries must be [alpha, beta] pairs");
        a.push_back(pair[0].get<double>());
        b.push_back(pair[1].get<double>());
      }
      c.params = make_params(a, b);
      c.explicit_params = true;
    } else if (j.contains("alpha") || j.contains("beta")) {
      if (!j.contains("alpha") || !j.contains("beta")) throw ConfigError("alpha and beta must be given together");
      c.params = make_params({j["alpha"].get<double>()}, {j["beta"].get<double>()});
      c.explicit_params = true;
    }
    take(j, "p", c.p);
    if (j.contains("q") && j["q"].is_string()) {
      if (j["q"].get<std::string>() != "inf") throw ConfigError("q must be a number or \"inf\"");
      c.q = std::numeric_limits<double>::infinity();
    } else {
      take(j, "q", c.q);
    }
    take(j, "s", c.s);
    take(j, "gamma", c.gamma);
    take(j, "k", c.k);
    take(j, "m", c.m);
    take(j, "alpha2", c.alpha2);
    take(j, "beta2", c.beta2);
    take(j, "trunc", c.trunc);
    take(j, "quad", c.quad);
    take(j, "ensemble", c.ensemble);
    take(j, "seed", c.seed);
    take(j, "out", c.out);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

ParsedArguments parse_arguments(int argc, char** argv) {
  CLI::App app{"Verification suites for symmetrized Jacobi expansions"};
  std::string suite, config_file;
  std::vector<double> alpha, beta;
  std::optional<double> p, q, s, gamma, alpha2, beta2;
  std::optional<int> k, m, trunc, quad, ensemble;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;

  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  app.add_option("suite", suite, "Suite to run, or 'all'")->check(CLI::IsMember(choices));
  app.add_option("--alpha", alpha, "alpha (repeatable, paired with --beta)");
  app.add_option("--beta", beta, "beta (repeatable, paired with --alpha)");
  app.add_option("--p", p, "Lebesgue exponent p");
  app.add_option("--q", q, "Second exponent q (inf allowed where meaningful)");
  app.add_option("--s", s, "Smoothness order s");
  app.add_option("--gamma", gamma, "Square-function order gamma");
  app.add_option("--k", k, "Integer order k");
  app.add_option("--m", m, "Sobolev order m");
  app.add_option("--alpha2", alpha2, "Second alpha (noninclusion)");
  app.add_option("--beta2", beta2, "Second beta (noninclusion)");
  app.add_option("--trunc", trunc, "Truncation degree N");
  app.add_option("--quad", quad, "Quadrature order (0: 2N + 16)");
  app.add_option("--ensemble", ensemble, "Ensemble size");
  app.add_option("--seed", seed, "Ensemble seed");
  app.add_option("--out", out, "Output directory");
  app.add_option("--config", config_file, "JSON config file; flags override its values");

  ParsedArguments result;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  SuiteConfig c;
  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) throw ConfigError("cannot read config file " + config_file);
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file " + config_file + ": " + e.what());
    }
    apply_json(c, j);
  }
  if (!suite.empty()) c.suite = suite;
  if (c.suite.empty()) throw ConfigError("no suite given");
  if (c.suite != "all" && std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end()) {
    throw ConfigError("unknown suite " + c.suite);
  }
  if (!alpha.empty() || !beta.empty()) {
    c.params = make_params(alpha, beta);
    c.explicit_params = true;
  }
  if (p) c.p = p;
  if (q) c.q = q;
  if (s) c.s = s;
  if (gamma) c.gamma = gamma;
  if (k) c.k = k;
  if (m) c.m = m;
  if (alpha2) c.alpha2 = alpha2;
  if (beta2) c.beta2 = beta2;
  if (trunc) c.trunc = *trunc;
  if (quad) c.quad = *quad;
  if (ensemble) c.ensemble = *ensemble;
  if (seed) c.seed = *seed;
  if (out) c.out = *out;
  if (!c.explicit_params) c.params = default_parameter_set();
  validate_common(c);
  result.config = c;
  return result;
}

void validate_common(const SuiteConfig& c) {
  for (const auto& pr : c.params) {
    if (!(pr.alpha() > -1.0) || !(pr.beta() > -1.0)) throw ConfigError("alpha, beta > -1 required");
  }
  if (c.params.empty()) throw ConfigError("empty parameter list");
  if (c.trunc < 1) throw ConfigError("trunc must be positive");
  if (c.quad < 0) throw ConfigError("quad must be 0 (default) or positive");
  if (c.ensemble < 1) throw ConfigError("ensemble must be positive");
  if (c.p && !(*c.p >= 1.0)) throw ConfigError("p >= 1 required");
  if (c.q && !(*c.q >= 1.0)) throw ConfigError("q >= 1 required");
  if (c.s && !(*c.s > 0.0)) throw ConfigError("s > 0 required");
  if (c.k && *c.k < 1) throw ConfigError("k >= 1 required");
  if (c.m && *c.m < 1) throw ConfigError("m >= 1 required");
  if (c.gamma) {
    const int k = c.k.value_or(static_cast<int>(std::floor(*c.gamma)) + 1);
    if (!(*c.gamma > 0.0 && *c.gamma < k)) {
      std::ostringstream msg;
      msg << "square functions need 0 < gamma < k, got gamma = " << *c.gamma << ", k = " << k;
      throw ConfigError(msg.str());
    }
  }
  if (c.alpha2.has_value() != c.beta2.has_value()) throw ConfigError("alpha2 and beta2 must be given together");
  if (c.alpha2 && (!(*c.alpha2 > -1.0) || !(*c.beta2 > -1.0))) throw ConfigError("alpha2, beta2 > -1 required");
}

ordered_json to_json(const SuiteConfig& c) {
  ordered_json j;
  j["suite"] = c.suite;
  ordered_json params = ordered_json::array();
  for (const auto& pr : c.params) params.push_back({pr.alpha(), pr.beta()});
  j["params"] = params;
  j["explicit_params"] = c.explicit_params;
  auto opt = [&](const char* key, const auto& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
  };
  opt("p", c.p);
  if (c.q && std::isinf(*c.q)) j["q"] = "inf";
  else opt("q", c.q);
  opt("s", c.s);
  opt("gamma", c.gamma);
  opt("k", c.k);
  opt("m", c.m);
  opt("alpha2", c.alpha2);
  opt("beta2", c.beta2);
  j["trunc"] = c.trunc;
  j["quad"] = c.quad;
  j["ensemble"] = c.ensemble;
  j["seed"] = c.seed;
  return j;
}

}  // namespace veriflab
