#ifndef VERIFLAB_CONFIG_HPP
#define VERIFLAB_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "symjac/jacobi.hpp"

namespace veriflab {

/// Invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written; maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& suite_names();
std::vector<symjac::JacobiParams> default_parameter_set();

struct SuiteConfig {
  std::string suite;
  std::vector<symjac::JacobiParams> params;
  bool explicit_params = false;  // set when alpha/beta came from the user
  std::optional<double> p, q, s, gamma;
  std::optional<int> k, m;
  std::optional<double> alpha2, beta2;  // second parameter pair (noninclusion)
  int trunc = 32;
  int quad = 0;  // 0: default grid order
  int ensemble = 50;
  std::uint64_t seed = 20240917;
  std::string out = ".";
};

/// Result of command-line parsing: a config, or an exit code when parsing already
/// settled the outcome (--help, or a malformed command line).
struct ParsedArguments {
  std::optional<SuiteConfig> config;
  int exit_code = 0;
};

ParsedArguments parse_arguments(int argc, char** argv);

/// Applies a JSON object onto a config; keys mirror the SuiteConfig fields.
void apply_json(SuiteConfig& config, const nlohmann::ordered_json& j);

/// Checks shared by every suite (alpha, beta > -1; 0 < gamma < k; sizes positive).
void validate_common(const SuiteConfig& config);

/// Config echo for the report. The output directory is left out so that runs
/// into different directories produce identical payloads.
nlohmann::ordered_json to_json(const SuiteConfig& config);

}  // namespace veriflab

#endif  // VERIFLAB_CONFIG_HPP
