/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sim/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ndn/codec.hpp"
#include "sim/workload.hpp"

namespace ipond::sim {

namespace {

constexpr SimTime kGatewayTickPeriod = SimTime(1'000'000); // 1 s

std::string join_errors(const std::vector<std::string>& errors)
{
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) {
      out += "; ";
    }
    out += e;
  }
  return out;
}

} // namespace

Network::Network(const Scenario& scenario, gw::Mode mode, std::uint64_t seed)
  : mode_(mode)
  , seed_(seed)
  , rng_(seed)
{
  auto errors = validate(scenario);
  if (!errors.empty()) {
    throw ValidationError(join_errors(errors));
  }

  nonce_ = [this]() { return static_cast<std::uint32_t>(rng_()); };

  std::map<std::string, int> index;
  nodes_.reserve(scenario.nodes.size());
  for (const auto& spec : scenario.nodes) {
    index[spec.id] = static_cast<int>(nodes_.size());
    Node node;
    node.spec = spec;
    nodes_.push_back(std::move(node));
  }

  links_.reserve(scenario.links.size());
  for (const auto& spec : scenario.links) {
    Link link;
    link.spec = spec;
    link.node_a = index.at(spec.a);
    link.node_b = index.at(spec.b);
    link.delay_us = std::llround(spec.delay_ms * 1000.0);
    link.carries_ip = nodes_[static_cast<std::size_t>(link.node_a)].spec.role == NodeRole::IpHost ||
                      nodes_[static_cast<std::size_t>(link.node_b)].spec.role == NodeRole::IpHost;
    int link_idx = static_cast<int>(links_.size());
    Node& a = nodes_[static_cast<std::size_t>(link.node_a)];
    Node& b = nodes_[static_cast<std::size_t>(link.node_b)];
    link.face_at_a = static_cast<int>(a.faces.size());
    a.faces.push_back({link_idx, link.node_b});
    link.face_at_b = static_cast<int>(b.faces.size());
    b.faces.push_back({link_idx, link.node_a});
    links_.push_back(std::move(link));
  }

  // Shared gateway routing table, straight from the scenario.
  gw::RoutingTable routes;
  for (const auto& route : scenario.ip_routes) {
    routes.add({route.subnet, gw::GatewayId{scenario.network_prefix, route.gateway_label}});
  }

  for (auto& node : nodes_) {
    if (node.spec.role == NodeRole::NdnRouter) {
      ndn::ForwarderConfig config;
      config.cs_capacity = scenario.limits.cs_capacity;
      node.forwarder = std::make_unique<ndn::Forwarder>(config);
    }
    else if (node.spec.role == NodeRole::Gateway) {
      gw::GatewayConfig config;
      config.id = gw::GatewayId{scenario.network_prefix, node.spec.label};
      config.mode = mode_;
      config.max_data_content = scenario.limits.max_data_content;
      config.queue_byte_limit = scenario.limits.queue_byte_limit;
      config.pending_ttl = Millis(scenario.limits.pending_ttl_ms);
      config.interest_lifetime = Millis(scenario.limits.pit_lifetime_ms);
      config.data_freshness = Millis(scenario.limits.data_freshness_ms);
      node.gateway = std::make_unique<gw::Gateway>(config, routes);
      tunnel_prefixes_.insert(scenario.network_prefix.appended(node.spec.label)
                                  .append("ip")
                                  .append("datagram"));
    }
  }

  for (const auto& route : scenario.ndn_routes) {
    Node& node = nodes_[static_cast<std::size_t>(index.at(route.node))];
    int hop = index.at(route.next_hop);
    auto face = std::find_if(node.faces.begin(), node.faces.end(),
                             [&](const Face& f) { return f.peer == hop; });
    ndn::FaceId face_id = static_cast<ndn::FaceId>(face - node.faces.begin());
    if (node.forwarder) {
      node.forwarder->fib().add(route.prefix, face_id);
    }
    else {
      node.origin_fib.add(route.prefix, face_id);
    }
  }

  flows_.reserve(scenario.workload.size());
  for (const auto& spec : scenario.workload) {
    FlowRuntime flow;
    flow.spec = spec;
    flow.src_node = index.at(spec.src);
    flow.dst_node = index.at(spec.dst);
    flow.src_addr = nodes_[static_cast<std::size_t>(flow.src_node)].spec.address;
    flow.dst_addr = nodes_[static_cast<std::size_t>(flow.dst_node)].spec.address;
    flow.stats.id = spec.id;
    flow.stats.src = spec.src;
    flow.stats.dst = spec.dst;
    flows_.push_back(std::move(flow));
  }
}

void Network::schedule(SimTime t, std::variant<Arrival, Capture, GatewayTick> action)
{
  events_.push({t, next_order_++, std::move(action)});
}

RunResult Network::run(SimTime duration)
{
  if (duration <= SimTime(0)) {
    throw ValidationError("duration must be positive");
  }
  horizon_ = duration;

  for (std::size_t i = 0; i < flows_.size(); ++i) {
    std::uint32_t seq = 0;
    for (SimTime t : capture_times(flows_[i].spec, duration)) {
      schedule(t, Capture{static_cast<int>(i), seq++});
    }
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].spec.role == NodeRole::Gateway) {
      for (SimTime t = kGatewayTickPeriod; t < duration; t += kGatewayTickPeriod) {
        schedule(t, GatewayTick{static_cast<int>(i)});
      }
    }
  }

  run_until(duration);
  return collect(duration);
}

void Network::run_until(SimTime until)
{
  while (!events_.empty() && events_.top().time < until) {
    Event event = events_.top();
    events_.pop();
    dispatch(event);
  }
}

void Network::dispatch(const Event& event)
{
  if (const auto* arrival = std::get_if<Arrival>(&event.action)) {
    handle_arrival(*arrival, event.time);
  }
  else if (const auto* capture = std::get_if<Capture>(&event.action)) {
    handle_capture(*capture, event.time);
  }
  else {
    const auto& tick = std::get<GatewayTick>(event.action);
    Node& node = nodes_[static_cast<std::size_t>(tick.node)];
    emit_from_gateway(node, node.gateway->tick(event.time), -1, event.time);
  }
}

void Network::handle_capture(const Capture& capture, SimTime now)
{
  FlowRuntime& flow = flows_[static_cast<std::size_t>(capture.flow)];
  Node& host = nodes_[static_cast<std::size_t>(flow.src_node)];

  gw::IpDatagram dgram;
  dgram.protocol = 17;
  dgram.src = flow.src_addr;
  dgram.dst = flow.dst_addr;
  dgram.payload.reserve(flow.spec.payload_octets);
  put_be32(dgram.payload, static_cast<std::uint32_t>(capture.flow));
  put_be32(dgram.payload, capture.seq);
  put_be64(dgram.payload, static_cast<std::uint64_t>(now.count()));
  dgram.payload.resize(flow.spec.payload_octets, 0);

  flow.stats.sent_packets += 1;
  flow.stats.sent_octets += dgram.total_length();

  // Hosts have exactly one face, toward their gateway.
  send_on_link(host.faces.front().link, flow.src_node, std::move(dgram), now);
}

void Network::handle_arrival(const Arrival& arrival, SimTime now)
{
  const Link& link = links_[static_cast<std::size_t>(arrival.link)];
  Node& node = nodes_[static_cast<std::size_t>(arrival.to_node)];
  ndn::FaceId in_face = arrival.to_node == link.node_a ? link.face_at_a : link.face_at_b;

  int from_node = arrival.to_node == link.node_a ? link.node_b : link.node_a;
  trace(std::holds_alternative<ndn::Packet>(arrival.payload) ? TraceRecord::Kind::NdnArrive
                                                             : TraceRecord::Kind::IpArrive,
        now, from_node, arrival.to_node, arrival.payload);

  switch (node.spec.role) {
  case NodeRole::NdnRouter:
    deliver_to_router(node, arrival.payload, in_face, now);
    break;
  case NodeRole::Gateway:
    deliver_to_gateway(node, arrival.payload, in_face, now);
    break;
  case NodeRole::IpHost:
    deliver_to_host(node, std::get<gw::IpDatagram>(arrival.payload), now);
    break;
  }
}

void Network::deliver_to_router(Node& node, const LinkPayload& payload, ndn::FaceId in_face,
                                SimTime now)
{
  const auto& packet = std::get<ndn::Packet>(payload);
  int self = static_cast<int>(&node - nodes_.data());

  std::vector<ndn::Emission> emissions;
  if (const auto* interest = std::get_if<ndn::InterestPacket>(&packet)) {
    emissions = node.forwarder->on_interest(*interest, in_face, now);
  }
  else {
    emissions = node.forwarder->on_data(std::get<ndn::DataPacket>(packet), in_face, now);
  }
  for (auto& emission : emissions) {
    const Face& face = node.faces[static_cast<std::size_t>(emission.face)];
    send_on_link(face.link, self, std::move(emission.packet), now);
  }
}

void Network::deliver_to_gateway(Node& node, const LinkPayload& payload, ndn::FaceId in_face,
                                 SimTime now)
{
  if (const auto* dgram = std::get_if<gw::IpDatagram>(&payload)) {
    emit_from_gateway(node, node.gateway->on_ip_capture(*dgram, now, nonce_), -1, now);
    return;
  }

  const auto& packet = std::get<ndn::Packet>(payload);
  if (const auto* interest = std::get_if<ndn::InterestPacket>(&packet)) {
    emit_from_gateway(node, node.gateway->on_interest(*interest, now, nonce_), in_face, now);
  }
  else {
    auto injections = node.gateway->on_data_arrival(std::get<ndn::DataPacket>(packet), now);
    for (const auto& dgram : injections) {
      inject(node, dgram, now);
    }
  }
}

void Network::emit_from_gateway(Node& node, std::vector<ndn::Packet> packets,
                                ndn::FaceId reply_face, SimTime now)
{
  int self = static_cast<int>(&node - nodes_.data());
  for (auto& packet : packets) {
    if (std::holds_alternative<ndn::DataPacket>(packet)) {
      // Data flows back along the face its Interest arrived on.
      const Face& face = node.faces[static_cast<std::size_t>(reply_face)];
      send_on_link(face.link, self, std::move(packet), now);
      continue;
    }
    auto hops = node.origin_fib.lookup(ndn::packet_name(packet));
    if (hops.empty()) {
      continue; // no NDN route configured for this name
    }
    const Face& face = node.faces[static_cast<std::size_t>(hops.front())];
    send_on_link(face.link, self, std::move(packet), now);
  }
}

void Network::inject(Node& gateway_node, const gw::IpDatagram& dgram, SimTime now)
{
  int self = static_cast<int>(&gateway_node - nodes_.data());
  for (const Face& face : gateway_node.faces) {
    const Node& peer = nodes_[static_cast<std::size_t>(face.peer)];
    if (peer.spec.role == NodeRole::IpHost && peer.spec.address == dgram.dst) {
      send_on_link(face.link, self, dgram, now);
      return;
    }
  }
  ++gateway_node.inject_failures;
}

void Network::deliver_to_host(Node& node, const gw::IpDatagram& dgram, SimTime now)
{
  if (dgram.dst != node.spec.address || dgram.payload.size() < 16) {
    return;
  }
  std::uint32_t flow_idx = get_be32(dgram.payload, 0);
  std::uint32_t seq = get_be32(dgram.payload, 4);
  auto sent_us = static_cast<std::int64_t>(get_be64(dgram.payload, 8));
  if (flow_idx >= flows_.size()) {
    return;
  }
  FlowRuntime& flow = flows_[flow_idx];
  if (&node != &nodes_[static_cast<std::size_t>(flow.dst_node)]) {
    return;
  }
  flow.stats.received_packets += 1;
  flow.stats.received_octets += dgram.total_length();
  flow.stats.latencies_ms.push_back(to_ms(now - SimTime(sent_us)));
  if (seq < flow.next_expected_seq) {
    flow.stats.out_of_order += 1;
  }
  else {
    flow.next_expected_seq = seq + 1;
  }
}

void Network::send_on_link(int link_idx, int from_node, LinkPayload payload, SimTime now)
{
  Link& link = links_[static_cast<std::size_t>(link_idx)];
  int to_node = from_node == link.node_a ? link.node_b : link.node_a;
  bool is_ndn = std::holds_alternative<ndn::Packet>(payload);
  LinkDir& dir = link.dir[from_node == link.node_a ? 0 : 1];

  while (!dir.busy.empty() && dir.busy.front() <= now) {
    dir.busy.pop_front();
  }

  if (link.spec.queue_packets > 0 &&
      dir.busy.size() >= static_cast<std::size_t>(link.spec.queue_packets)) {
    if (is_ndn) {
      ++ndn_lost_;
      datagrams_lost_ += tunnel_datagram_count(std::get<ndn::Packet>(payload));
    }
    else {
      ++ip_lost_;
    }
    trace(is_ndn ? TraceRecord::Kind::NdnQueueDrop : TraceRecord::Kind::IpQueueDrop, now,
          from_node, to_node, payload);
    return;
  }

  std::int64_t wire_octets =
      is_ndn ? static_cast<std::int64_t>(ndn::encoded_size(std::get<ndn::Packet>(payload)))
             : static_cast<std::int64_t>(std::get<gw::IpDatagram>(payload).total_length());
  std::int64_t bits = wire_octets * 8;
  std::int64_t tx_us = (bits * 1'000'000 + link.spec.bandwidth_bps - 1) / link.spec.bandwidth_bps;

  SimTime start = dir.busy.empty() ? now : std::max(now, dir.busy.back());
  SimTime completion = start + SimTime(tx_us);
  dir.busy.push_back(completion);

  trace(is_ndn ? TraceRecord::Kind::NdnSend : TraceRecord::Kind::IpSend, now, from_node, to_node,
        payload);

  if (link.spec.loss > 0.0 && bernoulli(link.spec.loss)) {
    // Transmitted but lost on the wire; the serializer time is spent.
    if (is_ndn) {
      ++ndn_lost_;
      datagrams_lost_ += tunnel_datagram_count(std::get<ndn::Packet>(payload));
    }
    else {
      ++ip_lost_;
    }
    trace(is_ndn ? TraceRecord::Kind::NdnLost : TraceRecord::Kind::IpLost, now, from_node, to_node,
          payload);
    return;
  }

  schedule(completion + SimTime(link.delay_us), Arrival{link_idx, to_node, std::move(payload)});
}

bool Network::bernoulli(double p)
{
  // 53-bit draw; avoids distribution objects so streams are portable.
  double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint64_t Network::tunnel_datagram_count(const ndn::Packet& packet) const
{
  const auto* data = std::get_if<ndn::DataPacket>(&packet);
  if (data == nullptr) {
    return 0;
  }
  for (const auto& prefix : tunnel_prefixes_) {
    if (prefix.is_prefix_of(data->name)) {
      return gw::split_datagrams(data->content).datagrams.size();
    }
  }
  return 0;
}

void Network::trace(TraceRecord::Kind kind, SimTime t, int from, int to,
                    const LinkPayload& payload)
{
  if (!trace_) {
    return;
  }
  TraceRecord record;
  record.kind = kind;
  record.time = t;
  record.from = &nodes_[static_cast<std::size_t>(from)].spec.id;
  record.to = &nodes_[static_cast<std::size_t>(to)].spec.id;
  record.ndn = std::get_if<ndn::Packet>(&payload);
  record.ip = std::get_if<gw::IpDatagram>(&payload);
  trace_(record);
}

RunResult Network::collect(SimTime duration)
{
  RunResult result;
  result.mode = mode_;
  result.seed = seed_;
  result.duration_ms = std::chrono::duration_cast<Millis>(duration).count();
  result.ndn_packets_lost_on_links = ndn_lost_;
  result.ip_packets_lost_on_links = ip_lost_;
  result.datagrams_lost_on_links = datagrams_lost_;

  for (auto& flow : flows_) {
    flow.stats.jitter_ms = compute_jitter(flow.stats.latencies_ms);
    result.flows.push_back(flow.stats);
  }
  for (const auto& node : nodes_) {
    NodeReport report;
    report.id = node.spec.id;
    report.role = node.spec.role;
    if (node.forwarder) {
      report.fwd = node.forwarder->counters();
    }
    if (node.gateway) {
      report.gw = node.gateway->counters();
      report.pending_datagrams_at_end = node.gateway->pending_datagrams();
    }
    report.inject_failures = node.inject_failures;
    result.nodes.push_back(std::move(report));
  }
  return result;
}

RunSummary summarize(const RunResult& result)
{
  RunSummary s;
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t received_octets = 0;
  std::vector<double> jitters;
  for (const auto& flow : result.flows) {
    sent += flow.sent_packets;
    received += flow.received_packets;
    received_octets += flow.received_octets;
    if (flow.jitter_ms) {
      jitters.push_back(*flow.jitter_ms);
    }
  }
  s.delivered = received;
  s.goodput_bps = result.duration_ms > 0 ? static_cast<double>(received_octets) * 8000.0 /
                                               static_cast<double>(result.duration_ms)
                                         : 0.0;
  s.loss_pct = sent == 0 ? 0.0
                         : 100.0 * static_cast<double>(sent - received) / static_cast<double>(sent);
  if (jitters.empty()) {
    s.jitter_ms = std::numeric_limits<double>::quiet_NaN();
  }
  else {
    double sum = 0.0;
    for (double j : jitters) {
      sum += j;
    }
    s.jitter_ms = sum / static_cast<double>(jitters.size());
  }
  for (const auto& node : result.nodes) {
    if (node.role == NodeRole::Gateway) {
      s.captured += node.gw.captured;
      s.gateway_ndn_packets +=
          node.gw.requests_sent + node.gw.interest_datagrams_sent + node.gw.data_sent;
    }
  }
  s.overhead_ratio = s.delivered == 0 ? std::numeric_limits<double>::quiet_NaN()
                                      : static_cast<double>(s.gateway_ndn_packets) /
                                            static_cast<double>(s.delivered);
  return s;
}

RunResult run_scenario(const Scenario& scenario, gw::Mode mode, std::uint64_t seed,
                       SimTime duration)
{
  Network network(scenario, mode, seed);
  return network.run(duration);
}

} // namespace ipond::sim
