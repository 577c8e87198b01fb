#pragma once

// Job files: line-oriented "key: value" text describing one analysis.
//
//   # comment
//   command: invert
//   field: padic 5
//   window: [0, 0]
//   prec: 3
//   series:
//     0: 1
//     1: 5
//
// The grammar is documented in README.md; tests/golden holds worked examples.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonarch/mero.hpp"
#include "nonarch/polyradius.hpp"
#include "nonarch/relative.hpp"
#include "nonarch/series.hpp"
#include "nonarch/stream.hpp"

namespace nonarch {

enum class SeriesKind { kNone, kAbsolute, kRelative, kPolyradius };

struct StreamRule {
  enum class Kind { kGeometric, kGaussian };
  Kind kind = Kind::kGeometric;
  // geometric
  std::optional<Element> coef;
  std::optional<Element> ratio;
  long step = 1;
  long shift = 0;
  // gaussian
  std::optional<Element> base;
  int sign = 1;
};

struct JobFile {
  std::optional<std::string> command;
  std::optional<Field> field;
  std::vector<std::string> vars;
  std::vector<Rational> weights;
  std::size_t aux = 0;
  std::optional<LogRadiusWindow> window;
  std::optional<LogRadiusWindow> subwindow;
  std::optional<LogRadiusWindow> domain;
  std::optional<Rational> prec;
  std::optional<long> depth;
  std::optional<SupportShape> shape;
  std::vector<Element> point;
  std::optional<StreamRule> stream;

  SeriesKind kind = SeriesKind::kNone;
  std::optional<LaurentSeries> absolute;
  std::optional<RelativeSeries> relative;
  std::optional<KrSeries> polyradius;
};

/// Parses one job. Throws ParseError with kSyntax for malformed text and
/// kSemantic (or the module error code) for well-formed but invalid content.
JobFile parse_job(std::string_view text);

/// Canonical text form; parse_job(serialize_job(j)) reproduces j.
std::string serialize_job(const JobFile& job);

/// Names accepted by the `command:` key and on the command line.
const std::vector<std::string>& job_commands();

}  // namespace nonarch
