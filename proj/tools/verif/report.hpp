#ifndef VERIFLAB_REPORT_HPP
#define VERIFLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "symjac/jacobi.hpp"

namespace veriflab {

enum class Status { pass, fail, skipped, info };
const char* to_string(Status s);

struct CaseRecord {
  std::string name;
  std::optional<symjac::JacobiParams> params;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::optional<double> tolerance;
  Status status = Status::info;
  std::string note;
};

/// A plot series: named lines of (x, y) points sharing axis labels.
struct Series {
  struct Line {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
  };
  std::string name;  // file-name safe
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<Line> lines;
};

struct ExperimentReport {
  std::string suite;
  nlohmann::ordered_json config;
  std::uint64_t seed = 0;
  std::vector<CaseRecord> cases;
  std::vector<Series> series;
  double wall_clock_seconds = 0.0;

  bool empty() const { return cases.empty() && series.empty(); }
  bool passed() const;
  std::vector<const CaseRecord*> failures() const;
  nlohmann::ordered_json to_json() const;
};

/// Writes DIR/<suite>-report.json plus a CSV and an SVG per series. An empty
/// report writes nothing. Throws IoError when the directory is not writable.
void write_report(const ExperimentReport& report, const std::string& dir);

/// CSV text of a series: header "line,<x>,<y>", one row per point.
std::string series_csv(const Series& s);

}  // namespace veriflab

#endif  // VERIFLAB_REPORT_HPP
