// nonarch <command> <jobfile> [--svg PATH] [--csv PATH] [--depth N] [--prec Q]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nonarch/error.hpp"
#include "nonarch/job.hpp"
#include "nonarch/report.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nonarch::Error(nonarch::ErrorCode::kInvalidArgument, "cannot write " + path);
  out << content;
}

int fail(const nonarch::Error& e) {
  std::cerr << nonarch::dump_report(nonarch::error_report(e));
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact non-archimedean series analysis"};
  std::string command;
  std::string jobfile;
  std::string svg_path;
  std::string csv_path;
  std::optional<long> depth;
  std::string prec;

  std::vector<std::string> commands = nonarch::job_commands();
  commands.push_back("run");
  app.add_option("command", command, "newton | unit | invert | pole | discwise | descend | run")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("jobfile", jobfile, "job description file")->required()->check(CLI::ExistingFile);
  app.add_option("--svg", svg_path, "write the Newton polygon as SVG");
  app.add_option("--csv", csv_path, "write (w, trop value, minimizers) samples as CSV");
  app.add_option("--depth", depth, "scan depth for pole and discwise")->check(CLI::NonNegativeNumber);
  app.add_option("--prec", prec, "precision for invert, an exact rational");
  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(jobfile, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    nonarch::JobFile job = nonarch::parse_job(text.str());
    if (command != "run") job.command = command;
    if (depth) job.depth = *depth;
    if (!prec.empty()) {
      auto q = nonarch::parse_rational(prec);
      if (!q) throw nonarch::Error(nonarch::ErrorCode::kInvalidArgument, "--prec expects a rational, got " + prec);
      job.prec = *q;
    }
    const nonarch::JobReport report = nonarch::run_job(job);
    if (!svg_path.empty()) {
      if (!report.svg) throw nonarch::Error(nonarch::ErrorCode::kInvalidArgument, "no Newton polygon for this job");
      write_file(svg_path, *report.svg);
    }
    if (!csv_path.empty()) {
      if (!report.csv) throw nonarch::Error(nonarch::ErrorCode::kInvalidArgument, "no Newton polygon for this job");
      write_file(csv_path, *report.csv);
    }
    std::cout << nonarch::dump_report(report.body);
    return report.exit_code();
  } catch (const nonarch::Error& e) {
    return fail(e);
  }
}
