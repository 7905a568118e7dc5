/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sim/metrics.hpp"

#include <cmath>
#include <limits>

namespace ipond::sim {

std::optional<double> compute_jitter(std::span<const double> latencies_ms)
{
  if (latencies_ms.size() < 2) {
    return std::nullopt;
  }
  double jitter = 0.0;
  for (std::size_t i = 1; i < latencies_ms.size(); ++i) {
    double d = latencies_ms[i] - latencies_ms[i - 1];
    jitter += (std::fabs(d) - jitter) / 16.0;
  }
  return jitter;
}

namespace {

// Two-sided 95% Student-t quantiles for df = 1..30; 1.960 beyond.
constexpr double kT95[] = {
    12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
    2.201,  2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
    2.080,  2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
};

double t95(std::size_t df)
{
  if (df == 0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  if (df <= 30) {
    return kT95[df - 1];
  }
  return 1.960;
}

} // namespace

MeanCi mean_ci95(std::span<const double> samples)
{
  MeanCi out{std::numeric_limits<double>::quiet_NaN(),
             std::numeric_limits<double>::quiet_NaN(), samples.size()};
  if (samples.empty()) {
    return out;
  }
  double sum = 0.0;
  for (double v : samples) {
    sum += v;
  }
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() < 2) {
    return out;
  }
  double sq = 0.0;
  for (double v : samples) {
    sq += (v - out.mean) * (v - out.mean);
  }
  double stddev = std::sqrt(sq / static_cast<double>(samples.size() - 1));
  out.ci95 = t95(samples.size() - 1) * stddev / std::sqrt(static_cast<double>(samples.size()));
  return out;
}

} // namespace ipond::sim
