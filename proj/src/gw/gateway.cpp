/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gw/gateway.hpp"

#include <algorithm>

namespace ipond::gw {

Gateway::Gateway(GatewayConfig config, RoutingTable routes)
  : config_(std::move(config))
  , routes_(std::move(routes))
  , basic_next_seqno_(config_.seqno_origin)
{
}

std::vector<ndn::Packet> Gateway::on_ip_capture(const IpDatagram& dgram, SimTime now,
                                                const NonceSource& nonce)
{
  ++counters_.captured;

  auto egress = routes_.lookup(dgram.dst);
  if (!egress) {
    ++counters_.drops_unroutable;
    return {};
  }
  if (egress->label == config_.id.label) {
    // Local delivery, not the gateway's job.
    ++counters_.drops_local;
    return {};
  }
  if (dgram.total_length() > config_.max_data_content) {
    ++counters_.drops_oversize;
    return {};
  }

  return config_.mode == Mode::Basic ? capture_basic(*egress, dgram, now, nonce)
                                     : capture_improved(*egress, dgram, now, nonce);
}

std::vector<ndn::Packet> Gateway::capture_basic(const GatewayId& egress, const IpDatagram& dgram,
                                                SimTime now, const NonceSource& nonce)
{
  if (basic_octets_ + dgram.total_length() > config_.queue_byte_limit) {
    ++counters_.drops_overflow;
    return {};
  }

  std::uint64_t seqno = basic_next_seqno_++;
  basic_octets_ += dgram.total_length();
  basic_queue_.push_back({seqno, dgram, now});

  ++counters_.requests_sent;
  return {ndn::InterestPacket{make_request_name(egress, config_.id, seqno), nonce(),
                              config_.interest_lifetime}};
}

std::vector<ndn::Packet> Gateway::capture_improved(const GatewayId& egress,
                                                   const IpDatagram& dgram, SimTime now,
                                                   const NonceSource& nonce)
{
  auto [it, inserted] = queues_.try_emplace(egress.label);
  MacroQueue& queue = it->second;
  if (inserted) {
    queue.next_seqno = config_.seqno_origin;
  }

  if (queue.octets + dgram.total_length() > config_.queue_byte_limit) {
    ++counters_.drops_overflow;
    return {};
  }

  // A new macro-packet is needed only when the queue is empty, the last
  // macro-packet is no longer accepting appends, or appending would exceed
  // the Data content limit.
  bool need_new = queue.packets.empty() ||
                  queue.packets.back().state != MacroState::Open ||
                  queue.packets.back().octets + dgram.total_length() > config_.max_data_content;

  if (!need_new) {
    MacroPacket& tail = queue.packets.back();
    tail.octets += dgram.total_length();
    queue.octets += dgram.total_length();
    tail.datagrams.push_back(dgram);
    // The Interest Request for this macro-packet is already out; the
    // eventual Interest Datagram authorizes everything stored in it.
    return {};
  }

  if (!queue.packets.empty() && queue.packets.back().state == MacroState::Open) {
    queue.packets.back().state = MacroState::Requested;
  }

  MacroPacket macro;
  macro.seqno = queue.next_seqno++;
  macro.state = MacroState::Open;
  macro.created_at = now;
  macro.octets = dgram.total_length();
  macro.datagrams.push_back(dgram);
  queue.octets += macro.octets;
  std::uint64_t seqno = macro.seqno;
  queue.packets.push_back(std::move(macro));

  ++counters_.requests_sent;
  return {ndn::InterestPacket{make_request_name(egress, config_.id, seqno), nonce(),
                              config_.interest_lifetime}};
}

std::vector<ndn::Packet> Gateway::on_interest(const ndn::InterestPacket& interest, SimTime now,
                                              const NonceSource& nonce)
{
  if (auto req = parse_request_name(interest.name, config_.id)) {
    return on_interest_request(*req, now, nonce);
  }
  if (auto dg = parse_datagram_name(interest.name, config_.id, config_.mode)) {
    return on_interest_datagram(*dg, interest.name, now);
  }
  ++counters_.parse_errors;
  return {};
}

std::vector<ndn::Packet> Gateway::on_interest_request(const RequestInfo& info, SimTime now,
                                                      const NonceSource& nonce)
{
  // Peers share our network prefix; the label is all the request carries.
  GatewayId requester{config_.id.prefix, info.src_label};
  ndn::Name name = make_datagram_name(config_.mode, requester, config_.id, info.seqno);
  awaiting_data_.emplace(name, now);
  ++counters_.interest_datagrams_sent;
  return {ndn::InterestPacket{std::move(name), nonce(), config_.interest_lifetime}};
}

std::vector<ndn::Packet> Gateway::on_interest_datagram(const DatagramInfo& info,
                                                       const ndn::Name& name, SimTime now)
{
  (void)now;
  Bytes content;

  if (config_.mode == Mode::Basic) {
    auto it = std::find_if(basic_queue_.begin(), basic_queue_.end(),
                           [&](const BasicEntry& e) { return e.seqno == info.seqno; });
    if (it == basic_queue_.end()) {
      ++counters_.queue_misses;
      return {};
    }
    content = it->dgram.serialize();
    basic_octets_ -= it->dgram.total_length();
    basic_queue_.erase(it);
  }
  else {
    auto queue_it = queues_.find(info.responder_label);
    if (queue_it == queues_.end()) {
      ++counters_.queue_misses;
      return {};
    }
    MacroQueue& queue = queue_it->second;
    auto it = std::find_if(queue.packets.begin(), queue.packets.end(),
                           [&](const MacroPacket& m) { return m.seqno == info.seqno; });
    if (it == queue.packets.end()) {
      ++counters_.queue_misses;
      return {};
    }
    it->state = MacroState::InFlight;
    content = join_datagrams(it->datagrams);
    queue.octets -= it->octets;
    queue.packets.erase(it); // sent once, never retransmitted
  }

  ++counters_.data_sent;
  return {ndn::DataPacket{name, std::move(content), config_.data_freshness}};
}

std::vector<IpDatagram> Gateway::on_data_arrival(const ndn::DataPacket& data, SimTime now)
{
  (void)now;
  auto it = awaiting_data_.find(data.name);
  if (it == awaiting_data_.end()) {
    ++counters_.unsolicited_data;
    return {};
  }
  awaiting_data_.erase(it);

  SplitResult result = split_datagrams(data.content);
  if (config_.mode == Mode::Basic && result.datagrams.size() > 1) {
    // Basic content is exactly one datagram; anything further is noise.
    result.datagrams.resize(1);
    result.corrupted = true;
  }
  if (result.corrupted) {
    ++counters_.corrupt_slices;
  }
  counters_.injected += result.datagrams.size();
  return result.datagrams;
}

std::vector<ndn::Packet> Gateway::tick(SimTime now)
{
  auto expired = [&](SimTime created) { return now - created > config_.pending_ttl; };

  while (!basic_queue_.empty() && expired(basic_queue_.front().enqueued_at)) {
    basic_octets_ -= basic_queue_.front().dgram.total_length();
    basic_queue_.pop_front();
    ++counters_.drops_expired_entries;
    ++counters_.drops_expired_datagrams;
  }

  for (auto& [label, queue] : queues_) {
    while (!queue.packets.empty() && expired(queue.packets.front().created_at)) {
      const MacroPacket& front = queue.packets.front();
      queue.octets -= front.octets;
      ++counters_.drops_expired_entries;
      counters_.drops_expired_datagrams += front.datagrams.size();
      queue.packets.pop_front();
    }
  }

  for (auto it = awaiting_data_.begin(); it != awaiting_data_.end();) {
    it = expired(it->second) ? awaiting_data_.erase(it) : std::next(it);
  }

  return {};
}

std::size_t Gateway::pending_datagrams() const
{
  std::size_t n = basic_queue_.size();
  for (const auto& [label, queue] : queues_) {
    for (const auto& macro : queue.packets) {
      n += macro.datagrams.size();
    }
  }
  return n;
}

std::size_t Gateway::pending_octets() const
{
  std::size_t n = basic_octets_;
  for (const auto& [label, queue] : queues_) {
    n += queue.octets;
  }
  return n;
}

const std::deque<MacroPacket>* Gateway::queue_for(const std::string& label) const
{
  auto it = queues_.find(label);
  return it == queues_.end() ? nullptr : &it->second.packets;
}

} // namespace ipond::gw
