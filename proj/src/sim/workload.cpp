/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sim/workload.hpp"

#include <algorithm>
#include <cmath>

namespace ipond::sim {

std::vector<SimTime> cbr_times(double rate_pps, SimTime start, SimTime stop)
{
  std::vector<SimTime> out;
  for (std::int64_t k = 0;; ++k) {
    auto t = start + SimTime(std::llround(static_cast<double>(k) * 1e6 / rate_pps));
    if (t >= stop) {
      break;
    }
    out.push_back(t);
  }
  return out;
}

std::vector<SimTime> burst_times(int burst_size, SimTime gap, SimTime start, SimTime stop)
{
  std::vector<SimTime> out;
  for (SimTime t = start; t < stop; t += gap) {
    for (int i = 0; i < burst_size; ++i) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<SimTime> capture_times(const FlowSpec& flow, SimTime horizon)
{
  SimTime start = from_ms(flow.start_ms);
  SimTime stop = std::min(from_ms(flow.stop_ms), horizon);
  if (stop <= start) {
    return {};
  }
  if (flow.kind == FlowSpec::Kind::Cbr) {
    return cbr_times(flow.rate_pps, start, stop);
  }
  return burst_times(flow.burst_size, from_ms(flow.gap_ms), start, stop);
}

} // namespace ipond::sim
