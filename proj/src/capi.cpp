/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ipond/ipond.h"

#include <string>

#include "sim/compare.hpp"
#include "sim/network.hpp"
#include "sim/report.hpp"
#include "sim/scenario.hpp"

using namespace ipond;

struct ipond_scenario {
  sim::Scenario scenario;
};

struct ipond_result {
  sim::RunResult result;
  sim::RunSummary summary;
  std::string flows_csv;
  std::string nodes_csv;
};

struct ipond_comparison {
  sim::Comparison comparison;
  std::string csv;
  std::string runs_csv;
  std::string table;
};

namespace {

thread_local std::string g_last_error = "ok";

ipond_status set_error(ipond_status status, const std::string& message)
{
  g_last_error = message;
  return status;
}

/// Runs `fn` inside the exception-to-status boundary.
template <typename Fn>
ipond_status guarded(Fn&& fn)
{
  try {
    return fn();
  }
  catch (const sim::IoError& e) {
    return set_error(IPOND_ERR_IO, e.what());
  }
  catch (const sim::ScenarioError& e) {
    return set_error(IPOND_ERR_PARSE, e.what());
  }
  catch (const sim::ValidationError& e) {
    return set_error(IPOND_ERR_VALIDATE, e.what());
  }
  catch (const std::exception& e) {
    return set_error(IPOND_ERR_INTERNAL, e.what());
  }
  catch (...) {
    return set_error(IPOND_ERR_INTERNAL, "unknown error");
  }
}

std::optional<gw::Mode> to_mode(ipond_mode mode)
{
  switch (mode) {
  case IPOND_MODE_BASIC:
    return gw::Mode::Basic;
  case IPOND_MODE_IMPROVED:
    return gw::Mode::Improved;
  }
  return std::nullopt;
}

} // namespace

extern "C" {

const char* ipond_version(void)
{
  return "0.1.0";
}

const char* ipond_last_error(void)
{
  return g_last_error.c_str();
}

ipond_status ipond_scenario_load(const char* path, ipond_scenario** out)
{
  if (path == nullptr || out == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null argument");
  }
  *out = nullptr;
  return guarded([&]() {
    auto handle = new ipond_scenario{sim::load_scenario(path)};
    *out = handle;
    return IPOND_OK;
  });
}

ipond_status ipond_scenario_parse(const char* text, size_t len, ipond_scenario** out)
{
  if (text == nullptr || out == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null argument");
  }
  *out = nullptr;
  return guarded([&]() {
    auto handle = new ipond_scenario{sim::parse_scenario(std::string_view(text, len))};
    *out = handle;
    return IPOND_OK;
  });
}

ipond_status ipond_scenario_validate(const ipond_scenario* scenario)
{
  if (scenario == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null scenario");
  }
  return guarded([&]() {
    auto errors = sim::validate(scenario->scenario);
    if (!errors.empty()) {
      std::string all;
      for (const auto& e : errors) {
        if (!all.empty()) {
          all += "; ";
        }
        all += e;
      }
      return set_error(IPOND_ERR_VALIDATE, all);
    }
    return IPOND_OK;
  });
}

void ipond_scenario_free(ipond_scenario* scenario)
{
  delete scenario;
}

ipond_status ipond_run(const ipond_scenario* scenario, ipond_mode mode, uint64_t seed,
                       int64_t duration_ms, ipond_result** out)
{
  if (scenario == nullptr || out == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null argument");
  }
  auto m = to_mode(mode);
  if (!m) {
    return set_error(IPOND_ERR_BADARG, "invalid mode");
  }
  if (duration_ms <= 0) {
    return set_error(IPOND_ERR_BADARG, "duration must be positive");
  }
  *out = nullptr;
  return guarded([&]() {
    auto result = sim::run_scenario(scenario->scenario, *m, seed, from_ms(duration_ms));
    auto handle = new ipond_result{std::move(result), {}, {}, {}};
    handle->summary = sim::summarize(handle->result);
    handle->flows_csv = sim::flows_csv(handle->result);
    handle->nodes_csv = sim::nodes_csv(handle->result);
    *out = handle;
    return IPOND_OK;
  });
}

const char* ipond_result_flows_csv(const ipond_result* result)
{
  return result ? result->flows_csv.c_str() : nullptr;
}

const char* ipond_result_nodes_csv(const ipond_result* result)
{
  return result ? result->nodes_csv.c_str() : nullptr;
}

ipond_status ipond_result_summary(const ipond_result* result, ipond_run_summary* out)
{
  if (result == nullptr || out == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null argument");
  }
  const sim::RunSummary& s = result->summary;
  out->goodput_bps = s.goodput_bps;
  out->jitter_ms = s.jitter_ms;
  out->loss_pct = s.loss_pct;
  out->captured_datagrams = s.captured;
  out->delivered_datagrams = s.delivered;
  out->gateway_ndn_packets = s.gateway_ndn_packets;
  out->overhead_ratio = s.overhead_ratio;
  return IPOND_OK;
}

void ipond_result_free(ipond_result* result)
{
  delete result;
}

ipond_status ipond_compare(const ipond_scenario* scenario, const uint64_t* seeds, size_t n_seeds,
                           int64_t duration_ms, ipond_comparison** out)
{
  if (scenario == nullptr || seeds == nullptr || out == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null argument");
  }
  if (n_seeds == 0) {
    return set_error(IPOND_ERR_BADARG, "need at least one seed");
  }
  if (duration_ms <= 0) {
    return set_error(IPOND_ERR_BADARG, "duration must be positive");
  }
  *out = nullptr;
  return guarded([&]() {
    auto comparison = sim::compare_modes(scenario->scenario, std::span(seeds, n_seeds),
                                         from_ms(duration_ms));
    auto handle = new ipond_comparison{std::move(comparison), {}, {}, {}};
    handle->csv = sim::comparison_csv(handle->comparison);
    handle->runs_csv = sim::comparison_runs_csv(handle->comparison);
    handle->table = sim::comparison_table(handle->comparison);
    *out = handle;
    return IPOND_OK;
  });
}

const char* ipond_comparison_csv(const ipond_comparison* comparison)
{
  return comparison ? comparison->csv.c_str() : nullptr;
}

const char* ipond_comparison_runs_csv(const ipond_comparison* comparison)
{
  return comparison ? comparison->runs_csv.c_str() : nullptr;
}

const char* ipond_comparison_table(const ipond_comparison* comparison)
{
  return comparison ? comparison->table.c_str() : nullptr;
}

ipond_status ipond_comparison_summary(const ipond_comparison* comparison, ipond_mode mode,
                                      ipond_mode_summary* out)
{
  if (comparison == nullptr || out == nullptr) {
    return set_error(IPOND_ERR_BADARG, "null argument");
  }
  auto m = to_mode(mode);
  if (!m) {
    return set_error(IPOND_ERR_BADARG, "invalid mode");
  }
  const sim::ModeAggregate& agg = comparison->comparison.mode(*m);
  out->goodput_mean_bps = agg.goodput_bps.mean;
  out->goodput_ci95_bps = agg.goodput_bps.ci95;
  out->jitter_mean_ms = agg.jitter_ms.mean;
  out->jitter_ci95_ms = agg.jitter_ms.ci95;
  out->loss_mean_pct = agg.loss_pct.mean;
  out->loss_ci95_pct = agg.loss_pct.ci95;
  out->overhead_ratio_mean = agg.overhead_ratio.mean;
  out->overhead_ratio_ci95 = agg.overhead_ratio.ci95;
  return IPOND_OK;
}

void ipond_comparison_free(ipond_comparison* comparison)
{
  delete comparison;
}

} // extern "C"
