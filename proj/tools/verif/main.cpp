#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "symjac/ensemble.hpp"
#include "symjac/errors.hpp"

using namespace veriflab;

namespace {

std::string describe(const CaseRecord& c) {
  std::string s = c.name;
  if (c.params) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (alpha=%g, beta=%g)", c.params->alpha(), c.params->beta());
    s += buf;
  }
  if (!c.note.empty()) s += ": " + c.note;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig config;
  try {
    ParsedArguments parsed = parse_arguments(argc, argv);
    if (!parsed.config) return parsed.exit_code;
    config = *parsed.config;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  std::vector<std::string> suites;
  if (config.suite == "all") suites = suite_names();
  else suites.push_back(config.suite);

  const unsigned threads = symjac::default_thread_count();
  int status = 0;
  for (const auto& name : suites) {
    SuiteConfig c = config;
    c.suite = name;
    ExperimentReport report;
    try {
      report = run_suite(c, threads);
    } catch (const ConfigError& e) {
      std::fprintf(stderr, "config error in %s: %s\n", name.c_str(), e.what());
      return 2;
    } catch (const symjac::Error& e) {
      // library preconditions surfaced by a user-chosen configuration
      std::fprintf(stderr, "config error in %s: %s\n", name.c_str(), e.what());
      return 2;
    }
    try {
      write_report(report, c.out);
    } catch (const IoError& e) {
      std::fprintf(stderr, "i/o error: %s\n", e.what());
      return 3;
    }
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : report.cases) {
      passed += r.status == Status::pass;
      failed += r.status == Status::fail;
      skipped += r.status == Status::skipped;
    }
    std::printf("%-15s %s  pass %zu  fail %zu  skipped %zu  (%.2f s)\n", name.c_str(), failed ? "FAIL" : "ok",
                passed, failed, skipped, report.wall_clock_seconds);
    for (const CaseRecord* f : report.failures()) std::printf("  failing case: %s\n", describe(*f).c_str());
    if (failed) status = 1;
  }
  return status;
}
