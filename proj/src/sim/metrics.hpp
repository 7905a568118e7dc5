/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ipond::sim {

/// RFC 3550 interarrival jitter over per-packet one-way latencies (the
/// estimator iperf reports): J += (|D| - J) / 16 with D the difference of
/// consecutive transit times. Returns the final smoothed value in ms, or
/// nullopt for fewer than two packets.
std::optional<double> compute_jitter(std::span<const double> latencies_ms);

struct FlowStats {
  std::string id;
  std::string src;
  std::string dst;
  std::uint64_t sent_packets = 0;
  std::uint64_t received_packets = 0;
  std::uint64_t sent_octets = 0;
  std::uint64_t received_octets = 0;
  std::uint64_t out_of_order = 0;
  std::vector<double> latencies_ms; // arrival order
  std::optional<double> jitter_ms;

  double loss_pct() const
  {
    if (sent_packets == 0) {
      return 0.0;
    }
    return 100.0 * static_cast<double>(sent_packets - received_packets) /
           static_cast<double>(sent_packets);
  }

  double mean_rate_bps(std::int64_t duration_ms) const
  {
    if (duration_ms <= 0) {
      return 0.0;
    }
    return static_cast<double>(received_octets) * 8000.0 / static_cast<double>(duration_ms);
  }
};

/// Sample mean with a two-sided 95% Student-t confidence half-width.
/// ci95 is NaN for fewer than two samples.
struct MeanCi {
  double mean;
  double ci95;
  std::size_t n;
};

MeanCi mean_ci95(std::span<const double> samples);

} // namespace ipond::sim
