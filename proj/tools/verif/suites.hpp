#ifndef VERIFLAB_SUITES_HPP
#define VERIFLAB_SUITES_HPP

#include "config.hpp"
#include "report.hpp"

namespace veriflab {

/// Runs one suite. Suite-specific constraints are checked before any work and
/// raise ConfigError; parameter pairs from the default set that a suite cannot
/// use are recorded as skipped cases instead.
ExperimentReport run_suite(const SuiteConfig& config, unsigned threads = 0);

}  // namespace veriflab

#endif  // VERIFLAB_SUITES_HPP
