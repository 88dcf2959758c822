#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wildram/acceptance.hpp"

using namespace wildram;

namespace {

int write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

int cmd_run(const std::string& config, const std::string& out_path, const std::string& golden, bool parallel) {
  Json j;
  {
    std::ifstream in(config);
    if (!in) {
      std::cerr << "ConfigInvalid: cannot read " << config << "\n";
      return 2;
    }
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      std::cerr << "ConfigInvalid: /: " << e.what() << "\n";
      return 2;
    }
  }
  Json report;
  try {
    report = run_job(parse_config(j), parallel);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::ConfigInvalid || e.kind() == ErrorKind::UnknownTask ? 2 : 1;
  }
  if (int rc = write_out(out_path, dump(report))) return rc;
  int rc = report_ok(report) ? 0 : 1;
  if (!golden.empty()) {
    try {
      const Json diff = compare_golden(report, golden);
      if (!diff.empty()) {
        std::cerr << "golden mismatch:\n" << diff.dump(2) << "\n";
        rc = 1;
      }
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      rc = 1;
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wild automorphisms of formal power series and their deformations"};
  app.require_subcommand(1);

  std::string config, out_path, golden;
  bool parallel = false;
  auto* run = app.add_subcommand("run", "run a JSON job");
  run->add_option("--config", config, "job description")->required();
  run->add_option("--out", out_path, "report path (stdout when omitted)");
  run->add_option("--golden", golden, "compare the report with a golden file, timing excluded");
  run->add_flag("--parallel", parallel, "run tasks concurrently");

  AcceptanceOptions opt;
  std::string self_out;
  auto* self = app.add_subcommand("selftest", "run the acceptance grid");
  self->add_option("--out", self_out, "report path");
  self->add_flag("--parallel", opt.parallel, "sweep grid points concurrently");
  self->add_option("--seed", opt.seed, "seed for randomized data");
  self->add_option("--max-m", opt.max_m, "largest m in the grid")->check(CLI::Range(2, 20));
  self->add_flag("!--no-determinism", opt.determinism, "skip the rerun comparison");

  CLI11_PARSE(app, argc, argv);

  if (*run) return cmd_run(config, out_path, golden, parallel);

  const Json report = run_acceptance(opt);
  std::cerr << acceptance_lines(report);
  if (!self_out.empty() && write_out(self_out, dump(report))) return 2;
  return report["summary"]["ok"].get<bool>() ? 0 : 1;
}
