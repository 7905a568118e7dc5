/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "sim/network.hpp"

namespace ipond::sim {

/// Per-mode aggregate over the seed list. Mean/CI follow the usual
/// repeated-measurement treatment: sample mean and two-sided 95%
/// Student-t half width (undefined below two samples). Jitter and
/// overhead aggregate over the runs where they are defined.
struct ModeAggregate {
  std::vector<RunSummary> runs; // in seed order
  MeanCi goodput_bps{0, 0, 0};
  MeanCi jitter_ms{0, 0, 0};
  MeanCi loss_pct{0, 0, 0};
  MeanCi overhead_ratio{0, 0, 0};
};

struct Comparison {
  std::vector<std::uint64_t> seeds;
  std::int64_t duration_ms = 0;
  ModeAggregate basic;
  ModeAggregate improved;

  const ModeAggregate& mode(gw::Mode m) const
  {
    return m == gw::Mode::Basic ? basic : improved;
  }
};

/// Runs every seed under both protocol variants. Runs execute on worker
/// threads; aggregation order is by seed, so the result is deterministic.
Comparison compare_modes(const Scenario& scenario, std::span<const std::uint64_t> seeds,
                         SimTime duration);

/// Summary CSV: one row per mode.
std::string comparison_csv(const Comparison& comparison);

/// Per-run CSV: one row per (mode, seed).
std::string comparison_runs_csv(const Comparison& comparison);

/// Human-readable summary table.
std::string comparison_table(const Comparison& comparison);

} // namespace ipond::sim
