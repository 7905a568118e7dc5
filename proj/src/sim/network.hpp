/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <variant>

#include "gw/gateway.hpp"
#include "ndn/forwarder.hpp"
#include "sim/metrics.hpp"
#include "sim/scenario.hpp"

namespace ipond::sim {

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct NodeReport {
  std::string id;
  NodeRole role = NodeRole::NdnRouter;
  ndn::ForwarderCounters fwd;
  gw::GatewayCounters gw;
  std::uint64_t inject_failures = 0;
  std::uint64_t pending_datagrams_at_end = 0;
};

struct RunResult {
  gw::Mode mode = gw::Mode::Basic;
  std::uint64_t seed = 0;
  std::int64_t duration_ms = 0;
  std::vector<FlowStats> flows;
  std::vector<NodeReport> nodes;
  std::uint64_t ndn_packets_lost_on_links = 0;
  std::uint64_t ip_packets_lost_on_links = 0;
  /// IP datagrams that were riding inside NDN Data packets dropped or lost
  /// on a link; feeds the conservation accounting.
  std::uint64_t datagrams_lost_on_links = 0;
};

/// Headline numbers for one run.
struct RunSummary {
  double goodput_bps = 0.0;
  double jitter_ms = 0.0; // NaN when undefined
  double loss_pct = 0.0;
  std::uint64_t captured = 0;
  std::uint64_t delivered = 0;
  std::uint64_t gateway_ndn_packets = 0;
  double overhead_ratio = 0.0; // gateway NDN packets / delivered, NaN when delivered = 0
};

RunSummary summarize(const RunResult& result);

/// Observation hook for tests: fired for every link-level event. The
/// pointed-to packet/datagram is only valid during the call.
struct TraceRecord {
  enum class Kind {
    NdnSend,
    NdnArrive,
    NdnLost,      // Bernoulli link loss
    NdnQueueDrop, // finite-queue congestion drop
    IpSend,
    IpArrive,
    IpLost,
    IpQueueDrop,
  };

  Kind kind;
  SimTime time;
  const std::string* from = nullptr;
  const std::string* to = nullptr;
  const ndn::Packet* ndn = nullptr;
  const gw::IpDatagram* ip = nullptr;
};

using TraceFn = std::function<void(const TraceRecord&)>;

/// A fully instantiated network: routers, gateways, hosts and links built
/// from a validated scenario. Deterministic for a given (scenario, mode,
/// seed): one event loop, one PRNG (nonces and loss draws), strict
/// (time, insertion) event order.
class Network {
public:
  Network(const Scenario& scenario, gw::Mode mode, std::uint64_t seed);

  void set_trace(TraceFn trace) { trace_ = std::move(trace); }

  RunResult run(SimTime duration);

  /// Dispatches events with t < until; usable repeatedly before collect().
  void run_until(SimTime until);

  RunResult collect(SimTime duration);

private:
  using LinkPayload = std::variant<ndn::Packet, gw::IpDatagram>;

  struct Arrival {
    int link = 0;
    int to_node = 0;
    LinkPayload payload;
  };
  struct Capture {
    int flow = 0;
    std::uint32_t seq = 0;
  };
  struct GatewayTick {
    int node = 0;
  };

  struct Event {
    SimTime time;
    std::uint64_t order;
    std::variant<Arrival, Capture, GatewayTick> action;
  };

  struct EventAfter {
    bool operator()(const Event& a, const Event& b) const
    {
      return a.time != b.time ? a.time > b.time : a.order > b.order;
    }
  };

  struct Face {
    int link = 0;
    int peer = 0;
  };

  struct Node {
    NodeSpec spec;
    std::vector<Face> faces;
    std::unique_ptr<ndn::Forwarder> forwarder; // routers
    std::unique_ptr<gw::Gateway> gateway;      // gateways
    ndn::Fib origin_fib;                       // gateways: route own Interests
    std::uint64_t inject_failures = 0;
    int host_flow_hint = -1; // unused; reserved
  };

  struct LinkDir {
    std::deque<SimTime> busy; // completion times of queued transmissions
  };

  struct Link {
    LinkSpec spec;
    int node_a = 0;
    int node_b = 0;
    int face_at_a = 0;
    int face_at_b = 0;
    std::int64_t delay_us = 0;
    bool carries_ip = false;
    LinkDir dir[2];
  };

  struct FlowRuntime {
    FlowSpec spec;
    int src_node = 0;
    int dst_node = 0;
    gw::Ipv4Addr src_addr = 0;
    gw::Ipv4Addr dst_addr = 0;
    FlowStats stats;
    std::uint32_t next_expected_seq = 0;
  };

  void schedule(SimTime t, std::variant<Arrival, Capture, GatewayTick> action);
  void send_on_link(int link_idx, int from_node, LinkPayload payload, SimTime now);
  void dispatch(const Event& event);
  void handle_arrival(const Arrival& arrival, SimTime now);
  void handle_capture(const Capture& capture, SimTime now);
  void deliver_to_router(Node& node, const LinkPayload& payload, ndn::FaceId in_face, SimTime now);
  void deliver_to_gateway(Node& node, const LinkPayload& payload, ndn::FaceId in_face,
                          SimTime now);
  void deliver_to_host(Node& node, const gw::IpDatagram& dgram, SimTime now);
  void emit_from_gateway(Node& node, std::vector<ndn::Packet> packets, ndn::FaceId reply_face,
                         SimTime now);
  void inject(Node& gateway_node, const gw::IpDatagram& dgram, SimTime now);
  bool bernoulli(double p);
  std::uint64_t tunnel_datagram_count(const ndn::Packet& packet) const;
  void trace(TraceRecord::Kind kind, SimTime t, int from, int to, const LinkPayload& payload);

  gw::Mode mode_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  gw::NonceSource nonce_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<FlowRuntime> flows_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> events_;
  std::uint64_t next_order_ = 0;
  SimTime horizon_{0};
  std::uint64_t ndn_lost_ = 0;
  std::uint64_t ip_lost_ = 0;
  std::uint64_t datagrams_lost_ = 0;
  std::set<ndn::Name> tunnel_prefixes_; // <prefix>/<label>/ip/datagram per gateway
  TraceFn trace_;
};

/// Validates, builds and runs in one call.
RunResult run_scenario(const Scenario& scenario, gw::Mode mode, std::uint64_t seed,
                       SimTime duration);

} // namespace ipond::sim
