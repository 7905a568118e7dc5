/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Batch experiment runner on top of the ipond C API.
//
// Exit codes: 0 success, 1 usage error, 2 unreadable scenario file,
// 3 invalid scenario (syntax or topology), 4 unwritable output,
// 5 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ipond/ipond.h>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitOutput = 4;
constexpr int kExitInternal = 5;

bool g_verbose = false;

void log_note(const std::string& message)
{
  if (g_verbose) {
    std::cerr << "ipond: " << message << '\n';
  }
}

int exit_code_for(ipond_status status)
{
  switch (status) {
  case IPOND_OK:
    return 0;
  case IPOND_ERR_IO:
    return kExitIo;
  case IPOND_ERR_PARSE:
  case IPOND_ERR_VALIDATE:
    return kExitInvalid;
  case IPOND_ERR_BADARG:
    return kExitUsage;
  case IPOND_ERR_INTERNAL:
    return kExitInternal;
  }
  return kExitInternal;
}

int fail(ipond_status status)
{
  std::cerr << "error: " << ipond_last_error() << '\n';
  return exit_code_for(status);
}

/// "250" or "250ms" -> 250; "10s" -> 10000.
std::optional<int64_t> parse_duration_ms(const std::string& text)
{
  std::string digits = text;
  int64_t scale = 1;
  if (text.size() > 2 && text.compare(text.size() - 2, 2, "ms") == 0) {
    digits = text.substr(0, text.size() - 2);
  }
  else if (text.size() > 1 && text.back() == 's') {
    digits = text.substr(0, text.size() - 1);
    scale = 1000;
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  return std::stoll(digits) * scale;
}

std::optional<ipond_mode> parse_mode(const std::string& text)
{
  if (text == "basic") {
    return IPOND_MODE_BASIC;
  }
  if (text == "improved") {
    return IPOND_MODE_IMPROVED;
  }
  return std::nullopt;
}

struct ScenarioHandle {
  ipond_scenario* ptr = nullptr;
  ~ScenarioHandle() { ipond_scenario_free(ptr); }
};

int load_and_validate(const std::string& path, ScenarioHandle& scenario)
{
  ipond_status status = ipond_scenario_load(path.c_str(), &scenario.ptr);
  if (status != IPOND_OK) {
    return fail(status);
  }
  status = ipond_scenario_validate(scenario.ptr);
  if (status != IPOND_OK) {
    return fail(status);
  }
  return 0;
}

int write_file(const std::filesystem::path& path, const char* content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path.string() << "'\n";
    return kExitOutput;
  }
  out << content;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write '" << path.string() << "'\n";
    return kExitOutput;
  }
  log_note("wrote " + path.string());
  return 0;
}

int ensure_out_dir(const std::filesystem::path& dir)
{
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory '" << dir.string() << "'\n";
    return kExitOutput;
  }
  return 0;
}

int cmd_run(const std::string& spec_path, const std::string& mode_text,
            const std::string& duration_text, uint64_t seed, const std::string& out_dir)
{
  auto mode = parse_mode(mode_text);
  if (!mode) {
    std::cerr << "error: mode must be 'basic' or 'improved'\n";
    return kExitUsage;
  }
  auto duration = parse_duration_ms(duration_text);
  if (!duration || *duration <= 0) {
    std::cerr << "error: invalid duration '" << duration_text << "'\n";
    return kExitUsage;
  }

  ScenarioHandle scenario;
  if (int rc = load_and_validate(spec_path, scenario); rc != 0) {
    return rc;
  }

  log_note("running " + mode_text + " for " + std::to_string(*duration) + " ms, seed " +
           std::to_string(seed));
  ipond_result* result = nullptr;
  ipond_status status = ipond_run(scenario.ptr, *mode, seed, *duration, &result);
  if (status != IPOND_OK) {
    return fail(status);
  }

  int rc = ensure_out_dir(out_dir);
  if (rc == 0) {
    rc = write_file(std::filesystem::path(out_dir) / "flows.csv",
                    ipond_result_flows_csv(result));
  }
  if (rc == 0) {
    rc = write_file(std::filesystem::path(out_dir) / "nodes.csv",
                    ipond_result_nodes_csv(result));
  }

  if (rc == 0) {
    ipond_run_summary summary{};
    ipond_result_summary(result, &summary);
    std::cout << "delivered " << summary.delivered_datagrams << "/" << summary.captured_datagrams
              << " datagrams, goodput " << summary.goodput_bps << " bps, loss "
              << summary.loss_pct << " %\n";
  }
  ipond_result_free(result);
  return rc;
}

int cmd_compare(const std::string& spec_path, const std::vector<uint64_t>& seeds,
                const std::string& duration_text, const std::string& out_dir)
{
  auto duration = parse_duration_ms(duration_text);
  if (!duration || *duration <= 0) {
    std::cerr << "error: invalid duration '" << duration_text << "'\n";
    return kExitUsage;
  }
  if (seeds.empty()) {
    std::cerr << "error: need at least one seed\n";
    return kExitUsage;
  }

  ScenarioHandle scenario;
  if (int rc = load_and_validate(spec_path, scenario); rc != 0) {
    return rc;
  }

  log_note("comparing both modes over " + std::to_string(seeds.size()) + " seed(s)");
  ipond_comparison* comparison = nullptr;
  ipond_status status =
      ipond_compare(scenario.ptr, seeds.data(), seeds.size(), *duration, &comparison);
  if (status != IPOND_OK) {
    return fail(status);
  }

  int rc = ensure_out_dir(out_dir);
  if (rc == 0) {
    rc = write_file(std::filesystem::path(out_dir) / "summary.csv",
                    ipond_comparison_csv(comparison));
  }
  if (rc == 0) {
    rc = write_file(std::filesystem::path(out_dir) / "runs.csv",
                    ipond_comparison_runs_csv(comparison));
  }
  if (rc == 0) {
    std::cout << ipond_comparison_table(comparison);
  }
  ipond_comparison_free(comparison);
  return rc;
}

int cmd_validate(const std::string& spec_path)
{
  ScenarioHandle scenario;
  ipond_status status = ipond_scenario_load(spec_path.c_str(), &scenario.ptr);
  if (status != IPOND_OK) {
    return fail(status);
  }
  status = ipond_scenario_validate(scenario.ptr);
  if (status != IPOND_OK) {
    // One diagnostic per line.
    std::string message = ipond_last_error();
    std::size_t pos = 0;
    while ((pos = message.find("; ", pos)) != std::string::npos) {
      message.replace(pos, 2, "\n");
    }
    std::cerr << message << '\n';
    return exit_code_for(status);
  }
  std::cout << "ok\n";
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  if (const char* log = std::getenv("IPOND_LOG")) {
    std::string level = log;
    g_verbose = level == "debug" || level == "info" || level == "1";
  }

  CLI::App app{"IP-over-NDN gateway simulator (library version " +
               std::string(ipond_version()) + ")"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string mode = "basic";
  std::string duration = "10s";
  std::string out_dir = ".";
  uint64_t seed = 1;
  std::vector<uint64_t> seeds;

  CLI::App* run = app.add_subcommand("run", "run one scenario and write flow/node CSVs");
  run->add_option("spec", spec_path, "scenario file")->required();
  run->add_option("--mode", mode, "basic | improved");
  run->add_option("--seed", seed, "PRNG seed");
  run->add_option("--duration", duration, "simulated time, e.g. 10s or 500ms");
  run->add_option("--out", out_dir, "output directory");

  CLI::App* compare = app.add_subcommand("compare", "run both modes across seeds and summarize");
  compare->add_option("spec", spec_path, "scenario file")->required();
  compare->add_option("--seeds", seeds, "comma-separated seed list")->delimiter(',');
  compare->add_option("--duration", duration, "simulated time per run");
  compare->add_option("--out", out_dir, "output directory");

  CLI::App* validate = app.add_subcommand("validate", "check a scenario without running it");
  validate->add_option("spec", spec_path, "scenario file")->required();

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (run->parsed()) {
    return cmd_run(spec_path, mode, duration, seed, out_dir);
  }
  if (compare->parsed()) {
    if (seeds.empty()) {
      seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    }
    return cmd_compare(spec_path, seeds, duration, out_dir);
  }
  return cmd_validate(spec_path);
}
