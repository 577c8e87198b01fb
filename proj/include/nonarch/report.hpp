#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "nonarch/error.hpp"
#include "nonarch/job.hpp"

namespace nonarch {

using Json = nlohmann::ordered_json;

enum class ReportStatus { kDecided, kUndetermined };

struct JobReport {
  Json body;
  ReportStatus status = ReportStatus::kDecided;
  /// Newton-polygon artifacts, present for commands on an absolute series.
  std::optional<std::string> svg;
  std::optional<std::string> csv;

  int exit_code() const { return status == ReportStatus::kDecided ? 0 : 2; }
};

/// Runs the job's command. Module errors propagate as nonarch::Error.
JobReport run_job(const JobFile& job);

/// Stable JSON for an error, including positions and named exponents.
Json error_report(const Error& e);

/// Canonical text of a report: two-space indent, trailing newline.
std::string dump_report(const Json& j);

std::string newton_svg(const LaurentSeries& f);
std::string newton_csv(const LaurentSeries& f, const std::optional<LogRadiusWindow>& window);

}  // namespace nonarch
