#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "config.hpp"
#include "svg.hpp"
#include "symjac/version.hpp"

namespace veriflab {

using nlohmann::ordered_json;

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
    case Status::info:
      return "info";
  }
  return "info";
}

bool ExperimentReport::passed() const { return failures().empty(); }

std::vector<const CaseRecord*> ExperimentReport::failures() const {
  std::vector<const CaseRecord*> out;
  for (const auto& c : cases) {
    if (c.status == Status::fail) out.push_back(&c);
  }
  return out;
}

ordered_json ExperimentReport::to_json() const {
  ordered_json j;
  j["suite"] = suite;
  j["library_version"] = symjac::version;
  j["seed"] = seed;
  j["config"] = config;
  ordered_json cs = ordered_json::array();
  for (const auto& c : cases) {
    ordered_json r;
    r["name"] = c.name;
    if (c.params) {
      r["alpha"] = c.params->alpha();
      r["beta"] = c.params->beta();
    } else {
      r["alpha"] = nullptr;
      r["beta"] = nullptr;
    }
    r["inputs"] = c.inputs;
    r["values"] = c.values;
    if (c.tolerance) r["tolerance"] = *c.tolerance;
    else r["tolerance"] = nullptr;
    r["status"] = to_string(c.status);
    if (!c.note.empty()) r["note"] = c.note;
    cs.push_back(std::move(r));
  }
  j["cases"] = cs;
  ordered_json ss = ordered_json::array();
  for (const auto& s : series) {
    ordered_json lines = ordered_json::array();
    for (const auto& l : s.lines) lines.push_back(l.label);
    ss.push_back({{"name", s.name}, {"x", s.x_label}, {"y", s.y_label}, {"lines", lines}});
  }
  j["series"] = ss;
  j["pass"] = passed();
  j["wall_clock_seconds"] = wall_clock_seconds;
  return j;
}

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::string series_csv(const Series& s) {
  std::string text = "line," + s.x_label + "," + s.y_label + "\n";
  for (const auto& l : s.lines) {
    for (std::size_t i = 0; i < l.x.size(); ++i) text += l.label + "," + number(l.x[i]) + "," + number(l.y[i]) + "\n";
  }
  return text;
}

void write_report(const ExperimentReport& report, const std::string& dir) {
  if (report.empty()) return;
  const std::filesystem::path root(dir);
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec || !std::filesystem::is_directory(root)) {
    throw IoError("output directory " + dir + " is not writable" + (ec ? ": " + ec.message() : std::string()));
  }
  write_file(root / (report.suite + "-report.json"), report.to_json().dump(2) + "\n");
  for (const auto& s : report.series) {
    const std::string stem = report.suite + "-" + s.name;
    write_file(root / (stem + ".csv"), series_csv(s));
    write_file(root / (stem + ".svg"), line_chart(s, stem));
  }
}

}  // namespace veriflab
