/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "core/time.hpp"
#include "sim/scenario.hpp"

namespace ipond::sim {

/// Capture instants for a constant-bit-rate flow: exact multiples of
/// 1/rate from `start` up to (not including) `stop`.
std::vector<SimTime> cbr_times(double rate_pps, SimTime start, SimTime stop);

/// Capture instants for a bursty flow: every `gap`, `burst_size`
/// back-to-back captures sharing one timestamp (ordered by emission).
std::vector<SimTime> burst_times(int burst_size, SimTime gap, SimTime start, SimTime stop);

/// All capture instants of a flow, clipped to the run horizon.
std::vector<SimTime> capture_times(const FlowSpec& flow, SimTime horizon);

} // namespace ipond::sim
