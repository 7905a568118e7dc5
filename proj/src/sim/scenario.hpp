/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gw/ip.hpp"
#include "ndn/name.hpp"

namespace ipond::sim {

enum class NodeRole {
  NdnRouter,
  Gateway,
  IpHost,
};

std::string_view to_string(NodeRole role);

struct NodeSpec {
  std::string id;
  NodeRole role = NodeRole::NdnRouter;
  std::string label;    // gateway: NDN node label
  gw::Subnet subnet;    // gateway: directly connected IP subnet
  gw::Ipv4Addr address = 0; // host
};

struct LinkSpec {
  std::string a;
  std::string b;
  double delay_ms = 1.0;
  std::int64_t bandwidth_bps = 10'000'000;
  double loss = 0.0;
  int queue_packets = 0; // 0 = unbounded FIFO
};

struct NdnRouteSpec {
  std::string node;
  ndn::Name prefix;
  std::string next_hop;
};

struct IpRouteSpec {
  gw::Subnet subnet;
  std::string gateway_label;
};

struct Limits {
  std::size_t max_data_content = 8000;
  std::size_t queue_byte_limit = 1 << 20;
  std::int64_t pending_ttl_ms = 5000;
  std::int64_t pit_lifetime_ms = 4000;
  std::size_t cs_capacity = 256;
  std::int64_t data_freshness_ms = 10000;
};

struct FlowSpec {
  enum class Kind { Cbr, Burst };

  std::string id;
  Kind kind = Kind::Cbr;
  std::string src;
  std::string dst;
  std::size_t payload_octets = 1000;
  double rate_pps = 100.0;    // cbr
  int burst_size = 1;         // burst
  std::int64_t gap_ms = 1000; // burst
  std::int64_t start_ms = 0;
  std::int64_t stop_ms = 1000;
};

/// Topology plus workload: everything a run needs except mode, seed and
/// duration. The on-disk form is a JSON document (schema in the README).
struct Scenario {
  std::string name;
  ndn::Name network_prefix;
  Limits limits;
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;
  std::vector<NdnRouteSpec> ndn_routes;
  std::vector<IpRouteSpec> ip_routes;
  std::vector<FlowSpec> workload;
};

/// Unreadable scenario file.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario document; the message carries the line (for syntax
/// errors) or the offending field/id.
class ScenarioError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(std::string_view json_text);

/// Topology and workload invariant checks; one diagnostic per violation,
/// empty when the scenario is valid.
std::vector<std::string> validate(const Scenario& scenario);

} // namespace ipond::sim
