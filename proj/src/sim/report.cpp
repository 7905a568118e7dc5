/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sim/report.hpp"

#include <cmath>
#include <cstdio>

namespace ipond::sim {

std::string csv_double(double v)
{
  if (std::isnan(v)) {
    return "";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string flows_csv(const RunResult& result)
{
  std::string out = "flow,src,dst,sent_packets,received_packets,sent_octets,received_octets,"
                    "mean_rate_bps,jitter_ms,loss_pct,out_of_order\n";
  for (const auto& flow : result.flows) {
    out += flow.id + ',' + flow.src + ',' + flow.dst + ',';
    out += std::to_string(flow.sent_packets) + ',';
    out += std::to_string(flow.received_packets) + ',';
    out += std::to_string(flow.sent_octets) + ',';
    out += std::to_string(flow.received_octets) + ',';
    out += csv_double(flow.mean_rate_bps(result.duration_ms)) + ',';
    out += (flow.jitter_ms ? csv_double(*flow.jitter_ms) : "") + ',';
    out += csv_double(flow.loss_pct()) + ',';
    out += std::to_string(flow.out_of_order) + '\n';
  }
  return out;
}

std::string nodes_csv(const RunResult& result)
{
  std::string out =
      "node,role,interests_in,interests_out,data_in,data_out,cs_hits,aggregated,"
      "loops_suppressed,no_route_drops,unsolicited_data,pit_expired,"
      "captured,injected,requests_sent,interest_datagrams_sent,data_sent,"
      "drops_unroutable,drops_local,drops_oversize,drops_overflow,"
      "drops_expired_entries,drops_expired_datagrams,parse_errors,queue_misses,"
      "corrupt_slices,gw_unsolicited_data,inject_failures,pending_at_end\n";
  for (const auto& node : result.nodes) {
    out += node.id + ',';
    out += std::string(to_string(node.role)) + ',';
    out += std::to_string(node.fwd.interests_in) + ',';
    out += std::to_string(node.fwd.interests_out) + ',';
    out += std::to_string(node.fwd.data_in) + ',';
    out += std::to_string(node.fwd.data_out) + ',';
    out += std::to_string(node.fwd.cs_hits) + ',';
    out += std::to_string(node.fwd.aggregated) + ',';
    out += std::to_string(node.fwd.loops_suppressed) + ',';
    out += std::to_string(node.fwd.no_route_drops) + ',';
    out += std::to_string(node.fwd.unsolicited_data) + ',';
    out += std::to_string(node.fwd.pit_expired) + ',';
    out += std::to_string(node.gw.captured) + ',';
    out += std::to_string(node.gw.injected) + ',';
    out += std::to_string(node.gw.requests_sent) + ',';
    out += std::to_string(node.gw.interest_datagrams_sent) + ',';
    out += std::to_string(node.gw.data_sent) + ',';
    out += std::to_string(node.gw.drops_unroutable) + ',';
    out += std::to_string(node.gw.drops_local) + ',';
    out += std::to_string(node.gw.drops_oversize) + ',';
    out += std::to_string(node.gw.drops_overflow) + ',';
    out += std::to_string(node.gw.drops_expired_entries) + ',';
    out += std::to_string(node.gw.drops_expired_datagrams) + ',';
    out += std::to_string(node.gw.parse_errors) + ',';
    out += std::to_string(node.gw.queue_misses) + ',';
    out += std::to_string(node.gw.corrupt_slices) + ',';
    out += std::to_string(node.gw.unsolicited_data) + ',';
    out += std::to_string(node.inject_failures) + ',';
    out += std::to_string(node.pending_datagrams_at_end) + '\n';
  }
  return out;
}

} // namespace ipond::sim
