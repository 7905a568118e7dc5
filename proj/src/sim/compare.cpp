/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sim/compare.hpp"

#include <cmath>
#include <cstdio>
#include <future>

#include "sim/report.hpp"

namespace ipond::sim {

namespace {

ModeAggregate aggregate(std::vector<RunSummary> runs)
{
  ModeAggregate agg;
  agg.runs = std::move(runs);

  std::vector<double> goodput;
  std::vector<double> jitter;
  std::vector<double> loss;
  std::vector<double> overhead;
  for (const auto& run : agg.runs) {
    goodput.push_back(run.goodput_bps);
    loss.push_back(run.loss_pct);
    if (!std::isnan(run.jitter_ms)) {
      jitter.push_back(run.jitter_ms);
    }
    if (!std::isnan(run.overhead_ratio)) {
      overhead.push_back(run.overhead_ratio);
    }
  }
  agg.goodput_bps = mean_ci95(goodput);
  agg.jitter_ms = mean_ci95(jitter);
  agg.loss_pct = mean_ci95(loss);
  agg.overhead_ratio = mean_ci95(overhead);
  return agg;
}

std::string table_value(double v, const char* unit)
{
  if (std::isnan(v)) {
    return "-";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f%s", v, unit);
  return buf;
}

std::string table_mean_ci(const MeanCi& m, const char* unit)
{
  if (std::isnan(m.mean)) {
    return "-";
  }
  if (std::isnan(m.ci95)) {
    return table_value(m.mean, unit);
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.3f +/- %.3f%s", m.mean, m.ci95, unit);
  return buf;
}

} // namespace

Comparison compare_modes(const Scenario& scenario, std::span<const std::uint64_t> seeds,
                         SimTime duration)
{
  Comparison comparison;
  comparison.seeds.assign(seeds.begin(), seeds.end());
  comparison.duration_ms = std::chrono::duration_cast<Millis>(duration).count();

  auto run_mode = [&](gw::Mode mode) {
    std::vector<std::future<RunSummary>> futures;
    futures.reserve(seeds.size());
    for (std::uint64_t seed : seeds) {
      futures.push_back(std::async(std::launch::async, [&scenario, mode, seed, duration]() {
        return summarize(run_scenario(scenario, mode, seed, duration));
      }));
    }
    std::vector<RunSummary> runs;
    runs.reserve(seeds.size());
    for (auto& f : futures) {
      runs.push_back(f.get());
    }
    return runs;
  };

  comparison.basic = aggregate(run_mode(gw::Mode::Basic));
  comparison.improved = aggregate(run_mode(gw::Mode::Improved));
  return comparison;
}

std::string comparison_csv(const Comparison& comparison)
{
  std::string out = "mode,runs,goodput_mean_bps,goodput_ci95_bps,jitter_mean_ms,jitter_ci95_ms,"
                    "loss_mean_pct,loss_ci95_pct,overhead_ratio_mean,overhead_ratio_ci95\n";
  for (gw::Mode mode : {gw::Mode::Basic, gw::Mode::Improved}) {
    const ModeAggregate& agg = comparison.mode(mode);
    out += std::string(gw::to_string(mode)) + ',';
    out += std::to_string(agg.runs.size()) + ',';
    out += csv_double(agg.goodput_bps.mean) + ',';
    out += csv_double(agg.goodput_bps.ci95) + ',';
    out += csv_double(agg.jitter_ms.mean) + ',';
    out += csv_double(agg.jitter_ms.ci95) + ',';
    out += csv_double(agg.loss_pct.mean) + ',';
    out += csv_double(agg.loss_pct.ci95) + ',';
    out += csv_double(agg.overhead_ratio.mean) + ',';
    out += csv_double(agg.overhead_ratio.ci95) + '\n';
  }
  return out;
}

std::string comparison_runs_csv(const Comparison& comparison)
{
  std::string out =
      "mode,seed,goodput_bps,jitter_ms,loss_pct,captured,delivered,gateway_ndn_packets,"
      "overhead_ratio\n";
  for (gw::Mode mode : {gw::Mode::Basic, gw::Mode::Improved}) {
    const ModeAggregate& agg = comparison.mode(mode);
    for (std::size_t i = 0; i < agg.runs.size(); ++i) {
      const RunSummary& run = agg.runs[i];
      out += std::string(gw::to_string(mode)) + ',';
      out += std::to_string(comparison.seeds[i]) + ',';
      out += csv_double(run.goodput_bps) + ',';
      out += csv_double(run.jitter_ms) + ',';
      out += csv_double(run.loss_pct) + ',';
      out += std::to_string(run.captured) + ',';
      out += std::to_string(run.delivered) + ',';
      out += std::to_string(run.gateway_ndn_packets) + ',';
      out += csv_double(run.overhead_ratio) + '\n';
    }
  }
  return out;
}

std::string comparison_table(const Comparison& comparison)
{
  std::string out;
  out += "protocol comparison over " + std::to_string(comparison.seeds.size()) + " seed(s), " +
         std::to_string(comparison.duration_ms) + " ms each\n";
  char line[160];
  std::snprintf(line, sizeof(line), "  %-10s %-26s %-22s %-22s %s\n", "mode", "goodput",
                "jitter", "loss", "NDN overhead");
  out += line;
  for (gw::Mode mode : {gw::Mode::Basic, gw::Mode::Improved}) {
    const ModeAggregate& agg = comparison.mode(mode);
    std::snprintf(line, sizeof(line), "  %-10s %-26s %-22s %-22s %s\n",
                  std::string(gw::to_string(mode)).c_str(),
                  table_mean_ci(agg.goodput_bps, " bps").c_str(),
                  table_mean_ci(agg.jitter_ms, " ms").c_str(),
                  table_mean_ci(agg.loss_pct, " %").c_str(),
                  table_mean_ci(agg.overhead_ratio, " pkts/dgram").c_str());
    out += line;
  }
  return out;
}

} // namespace ipond::sim
