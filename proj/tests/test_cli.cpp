#include <gtest/gtest.h>

#include "golden.hpp"
#include "nonarch/error.hpp"
#include "nonarch/job.hpp"
#include "nonarch/report.hpp"
#include "support.hpp"

using namespace nonarch;
using namespace testing_support;

namespace {

template <class Fn>
void expect_parse_error(Fn&& fn, ErrorCode code, int line) {
  try {
    fn();
    ADD_FAILURE() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    EXPECT_EQ(e.line(), line) << e.what();
  }
}

}  // namespace

TEST(JobParse, MinimalUnitJob) {
  const JobFile job = parse_job("command: unit\nfield: padic 5\nwindow: [0, 1]\nseries:\n  0: 1\n  1: 5\n");
  ASSERT_TRUE(job.command);
  EXPECT_EQ(*job.command, "unit");
  EXPECT_EQ(job.kind, SeriesKind::kAbsolute);
  EXPECT_EQ(*job.absolute, poly(Field::padic(5), {{0, Q("1")}, {1, Q("5")}}));
  EXPECT_EQ(*job.window, LogRadiusWindow::closed(Rational(0), Rational(1)));
}

TEST(JobParse, Errors) {
  expect_parse_error([] { parse_job("field: padic 5\nseries:\n  0: 1/0\n"); }, ErrorCode::kSemantic, 3);
  expect_parse_error([] { parse_job("field: padic 5\nseries:\n  0: 2/4\n"); }, ErrorCode::kRepresentation, 3);
  expect_parse_error([] { parse_job("field: padic 5\nwindow: [0, +inf]\n"); }, ErrorCode::kSemantic, 2);
  expect_parse_error([] { parse_job("field: laurent F5 s 9\nseries:\n  0: 1/5\n"); }, ErrorCode::kSemantic, 3);
  expect_parse_error([] { parse_job("field: padic 5\ncolour: red\n"); }, ErrorCode::kSemantic, 2);
  expect_parse_error([] { parse_job("field: padic 5\nfield: padic 3\n"); }, ErrorCode::kSemantic, 2);
  expect_parse_error([] { parse_job("field: padic 5\nseries:\n  0: 1 +\n"); }, ErrorCode::kSyntax, 3);
  try {
    parse_job("field: padic 5\nseries:\n  3: 1\n  3: 2\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate exponent 3"), std::string::npos);
  }
}

TEST(JobParse, ExpressionsAndFields) {
  const JobFile a = parse_job("field: laurent F3 s 20\nseries:\n  0: (1 + s)*(1 + s)\n  2: s^-2 - 2\n");
  const Field f3 = Field::formal_laurent(ResidueKind::kPrimeField, 3, "s", 20);
  EXPECT_EQ(a.absolute->coefficient(0), Element::from_terms(f3, {{0, Q("1")}, {1, Q("2")}, {2, Q("1")}}));
  EXPECT_EQ(a.absolute->coefficient(2), Element::from_terms(f3, {{-2, Q("1")}, {0, Q("1")}}));

  const JobFile b = parse_job("field: padic 5\nvars: x y\nweights: 0 1/2\npoint: 1, 5\nseries:\n  -1: x*y - 2\n");
  EXPECT_EQ(b.kind, SeriesKind::kRelative);
  EXPECT_EQ(b.point.size(), 2u);
  EXPECT_EQ(b.weights[1], Q("1/2"));

  const JobFile c = parse_job("field: padic 5\naux: 2\nseries:\n  0: 3 + T1*T2^-1\n");
  EXPECT_EQ(c.kind, SeriesKind::kPolyradius);
  EXPECT_EQ(c.polyradius->terms.at(0).terms().size(), 2u);

  const JobFile d = parse_job("field: padic 5\ndomain: [0, +inf)\nshape: unknown\nstream: geometric coef=1 ratio=5 step=1 shift=-2\n");
  ASSERT_TRUE(d.stream);
  EXPECT_EQ(d.stream->shift, -2);
  EXPECT_EQ(d.shape->kind, ShapeKind::kUnknown);
}

TEST(JobParse, SerializeRoundTripOnCorpus) {
  int parsed = 0;
  for (const auto& c : golden_cases()) {
    JobFile job;
    try {
      job = parse_job(slurp(c.job));
    } catch (const ParseError&) {
      continue;
    }
    ++parsed;
    const std::string text = serialize_job(job);
    EXPECT_EQ(serialize_job(parse_job(text)), text) << c.name;
    auto report = [](const JobFile& j) {
      try {
        return dump_report(run_job(j).body);
      } catch (const Error& e) {
        return dump_report(error_report(e));
      }
    };
    EXPECT_EQ(report(parse_job(text)), report(job)) << c.name;
  }
  EXPECT_GE(parsed, 12);
}

TEST(Report, Examples) {
  const auto unit = run_job(parse_job("command: unit\nfield: padic 5\nwindow: [0, 0]\nseries:\n  0: 1\n  1: 1\n"));
  EXPECT_FALSE(unit.body["unit"].get<bool>());
  EXPECT_EQ(unit.body["witness"]["w"], "0");
  EXPECT_EQ(unit.body["witness"]["indices"], Json::array({0, 1}));
  EXPECT_EQ(unit.exit_code(), 0);

  const auto pole = run_job(parse_job("command: pole\nfield: padic 5\nseries:\n  -3: 1\n  0: 1\n"));
  EXPECT_EQ(pole.body["pole_order"], 3);
  EXPECT_EQ(pole.body["depth"], 32);

  const auto inv = run_job(parse_job("command: invert\nfield: padic 5\nwindow: [0, 0]\nprec: 3\nseries:\n  0: 1\n  1: 5\n"));
  EXPECT_EQ(inv.body["terms"], Json::parse(R"([[0,"1"],[1,"-5"],[2,"25"]])"));
  EXPECT_EQ(inv.body["tail"]["floor"], "3");

  const auto newton = run_job(parse_job("command: newton\nfield: padic 5\nseries:\n  0: 1\n  1: 26/5\n  2: 1\n"));
  ASSERT_TRUE(newton.svg);
  ASSERT_TRUE(newton.csv);
  EXPECT_EQ(newton.csv->rfind("w,trop_value,minimizers\n", 0), 0u);
  EXPECT_NE(newton.svg->find("<svg"), std::string::npos);
}

TEST(Report, ErrorJson) {
  const Json j = error_report(NontrivialAuxSupportError(4, {1, 0}));
  EXPECT_EQ(j["error"], "nontrivial_aux_support");
  EXPECT_EQ(j["exponent"], 4);
  EXPECT_EQ(j["multi_index"], Json::array({1, 0}));
  const Json p = error_report(ParseError(ErrorCode::kSyntax, 3, 9, "bad"));
  EXPECT_EQ(p["line"], 3);
  EXPECT_EQ(p["column"], 9);
}

TEST(Cli, GoldenCorpus) {
  const auto cases = golden_cases();
  ASSERT_GE(cases.size(), 12u);
  for (const auto& c : cases) {
    const CliRun run = run_cli("run '" + c.job.string() + "'");
    EXPECT_EQ(run.exit_code, c.expected_exit) << c.name;
    EXPECT_EQ(report_text(run), c.expected) << c.name;
  }
}

TEST(Cli, FlagsAndOverrides) {
  const std::string job = std::string(GOLDEN_DIR) + "/07_pole_finite.job";
  const CliRun shallow = run_cli("pole '" + job + "' --depth 2");
  EXPECT_EQ(shallow.exit_code, 0);
  EXPECT_NE(shallow.out.find("\"depth\": 2"), std::string::npos);

  const CliRun wrong = run_cli("unit '" + job + "'");
  EXPECT_EQ(wrong.exit_code, 1);
  EXPECT_NE(wrong.err.find("invalid_argument"), std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / ("nonarch_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string newton = std::string(GOLDEN_DIR) + "/01_newton_quadratic.job";
  const CliRun art = run_cli("run '" + newton + "' --svg '" + (dir / "p.svg").string() + "' --csv '" +
                             (dir / "p.csv").string() + "'");
  EXPECT_EQ(art.exit_code, 0);
  EXPECT_NE(slurp(dir / "p.svg").find("</svg>"), std::string::npos);
  EXPECT_EQ(slurp(dir / "p.csv").rfind("w,trop_value,minimizers", 0), 0u);
  std::filesystem::remove_all(dir);

  EXPECT_NE(run_cli("frobnicate '" + job + "'").exit_code, 0);
}
