// sbsq: command-line front end for the photon-phonon squeezing pipeline.
//
//   sbsq run <scenario.json>    [--out path] [--format json|csv] [--oracle on|off] [--db]
//   sbsq sweep <scenario.json>  [--out path] [--format json|csv] [--oracle on|off] [--db]
//   sbsq check
//
// Exit codes: 0 success, 2 scenario validation failure, 3 physics error,
// 4 oracle disagreement beyond tolerance (or a failed reference check).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sbsq/check.hpp"
#include "sbsq/pipeline.hpp"
#include "sbsq/report.hpp"
#include "sbsq/scenario.hpp"

namespace {

enum ExitCode { ok = 0, validation = 2, physics = 3, oracle_mismatch = 4 };

int exit_code_for(sbsq::ErrorKind kind) {
  return kind == sbsq::ErrorKind::InvalidArgument ? validation : physics;
}

struct Options {
  std::string scenario_path;
  std::string out_path;
  std::string format = "json";
  std::string oracle;  // "", "on", "off"
  std::string dump_state;
  bool db = false;
};

sbsq::json load_document(const Options& opt) {
  std::ifstream in(opt.scenario_path);
  if (!in)
    throw sbsq::Error(sbsq::ErrorKind::InvalidArgument, "scenario",
                      "cannot open '" + opt.scenario_path + "'");
  sbsq::json doc;
  try {
    doc = sbsq::json::parse(in);
  } catch (const sbsq::json::parse_error& e) {
    throw sbsq::Error(sbsq::ErrorKind::InvalidArgument, "scenario", e.what());
  }
  if (!opt.oracle.empty()) {
    if (!doc.is_object())
      throw sbsq::Error(sbsq::ErrorKind::InvalidArgument, "scenario", "expected an object");
    doc["oracle"]["enabled"] = opt.oracle == "on";
  }
  return doc;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::runtime_error("cannot write '" + opt.out_path + "'");
  out << text;
}

int cmd_run(const Options& opt) {
  const sbsq::json doc = load_document(opt);
  const sbsq::Scenario sc = sbsq::parse_scenario(doc);
  const sbsq::RunReport rep = sbsq::run(sc);
  const sbsq::ReportOptions ropt{opt.db};

  std::ostringstream text;
  if (opt.format == "csv") sbsq::write_csv(text, rep, ropt);
  else text << sbsq::to_json(rep, ropt).dump(2) << '\n';
  emit(opt, text.str());

  if (!opt.dump_state.empty()) {
    const int cutoff = rep.oracle ? rep.oracle->cutoff : sbsq::choose_cutoff(rep.squeeze.r);
    std::ofstream out(opt.dump_state);
    sbsq::write_state(out, sbsq::squeezed_vacuum(sbsq::FockSpace(cutoff), rep.squeeze.r));
  }

  if (rep.oracle && !rep.oracle->passed) {
    std::cerr << "oracle disagreement: " << rep.oracle->worst_entry << " deviates by "
              << rep.oracle->max_deviation << " (tolerance " << rep.oracle->tolerance << ")\n";
    return oracle_mismatch;
  }
  return ok;
}

int cmd_sweep(const Options& opt) {
  const sbsq::json doc = load_document(opt);
  const sbsq::Scenario sc = sbsq::parse_scenario(doc);
  if (!sc.sweep)
    throw sbsq::Error(sbsq::ErrorKind::InvalidArgument, "sweep", "scenario has no sweep block");
  const auto rows = sbsq::sweep(doc);
  const sbsq::ReportOptions ropt{opt.db};

  std::ostringstream text;
  if (opt.format == "csv") sbsq::write_csv(text, rows, sc.sweep->parameter, ropt);
  else text << sbsq::to_json(rows, sc.sweep->parameter, ropt).dump(2) << '\n';
  emit(opt, text.str());

  for (const auto& row : rows)
    if (row.report && row.report->oracle && !row.report->oracle->passed) return oracle_mismatch;
  return ok;
}

int cmd_check() {
  const sbsq::RunReport rep = sbsq::run(sbsq::parse_scenario(sbsq::reference_scenario_json()));
  bool all = true;
  for (const auto& c : sbsq::reference_checks(rep)) {
    all = all && c.passed;
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << c.name
              << std::setprecision(8) << c.value << "  (expected " << c.expected << " +/- "
              << c.tolerance << ")\n";
  }
  std::cout << (all ? "all checks passed" : "some checks failed") << '\n';
  return all ? ok : oracle_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-phonon two-mode squeezing in Brillouin-active waveguides"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("scenario", opt.scenario_path, "Scenario JSON file")->required();
    sub->add_option("--out", opt.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--oracle", opt.oracle, "Override oracle.enabled")
        ->check(CLI::IsMember({"on", "off"}));
    sub->add_flag("--db", opt.db, "Also report squeezing in dB");
  };

  auto* run = app.add_subcommand("run", "Run the full pipeline for one scenario");
  add_common(run);
  run->add_option("--dump-state", opt.dump_state,
                  "Write the truncated-Fock squeezed vacuum as (n_a n_b re im) rows");
  auto* sweep = app.add_subcommand("sweep", "Run the pipeline over the scenario's sweep grid");
  add_common(sweep);
  auto* check = app.add_subcommand("check", "Reproduce the built-in reference example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : validation;
  }

  try {
    if (*run) return cmd_run(opt);
    if (*sweep) return cmd_sweep(opt);
    if (*check) return cmd_check();
  } catch (const sbsq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return validation;
  }
  return ok;
}
