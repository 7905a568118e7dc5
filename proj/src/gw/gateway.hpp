/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "core/time.hpp"
#include "gw/ip.hpp"
#include "gw/names.hpp"
#include "gw/routing.hpp"
#include "ndn/packet.hpp"

namespace ipond::gw {

struct GatewayConfig {
  GatewayId id;
  Mode mode = Mode::Basic;
  std::size_t max_data_content = 8000;
  std::size_t queue_byte_limit = 1 << 20;
  Millis pending_ttl{5000};
  Millis interest_lifetime{4000};
  Millis data_freshness{10000};
  std::uint64_t seqno_origin = 0;
};

struct GatewayCounters {
  std::uint64_t captured = 0;
  std::uint64_t injected = 0;
  std::uint64_t requests_sent = 0;
  std::uint64_t interest_datagrams_sent = 0;
  std::uint64_t data_sent = 0;
  std::uint64_t drops_unroutable = 0;
  std::uint64_t drops_local = 0;
  std::uint64_t drops_oversize = 0;
  std::uint64_t drops_overflow = 0;
  std::uint64_t drops_expired_entries = 0;   // evicted pending entries/macro-packets
  std::uint64_t drops_expired_datagrams = 0; // datagrams inside them
  std::uint64_t parse_errors = 0;
  std::uint64_t queue_misses = 0; // Interest Datagram for an unknown seqno
  std::uint64_t corrupt_slices = 0;
  std::uint64_t unsolicited_data = 0;
};

enum class MacroState {
  Open,      // newest in its queue, still accepting appends
  Requested, // Interest Request outstanding, closed to appends
  InFlight,  // popped for serialization into a Data packet
};

struct MacroPacket {
  std::uint64_t seqno = 0;
  std::vector<IpDatagram> datagrams;
  MacroState state = MacroState::Open;
  SimTime created_at{0};
  std::size_t octets = 0; // sum of datagram total lengths
};

/// Fresh 32-bit Interest nonces; the simulation owns the PRNG.
using NonceSource = std::function<std::uint32_t()>;

/// The IP-over-NDN gateway state machine. Handlers are driven one at a
/// time by the event loop, never perform I/O, and return the NDN packets
/// (or recovered IP datagrams) to emit. In basic mode each captured
/// datagram runs the three-stage exchange by itself; in improved mode
/// captures accumulate into per-destination macro-packets and only a new
/// macro-packet triggers an Interest Request.
class Gateway {
public:
  Gateway(GatewayConfig config, RoutingTable routes);

  /// A datagram captured on the subnet side. Emits at most one Interest
  /// Request.
  std::vector<ndn::Packet> on_ip_capture(const IpDatagram& dgram, SimTime now,
                                         const NonceSource& nonce);

  /// An Interest arriving on the NDN side; dispatches to the request or
  /// datagram callback by grammar. Unparseable names are dropped.
  std::vector<ndn::Packet> on_interest(const ndn::InterestPacket& interest, SimTime now,
                                       const NonceSource& nonce);

  std::vector<ndn::Packet> on_interest_request(const RequestInfo& info, SimTime now,
                                               const NonceSource& nonce);

  std::vector<ndn::Packet> on_interest_datagram(const DatagramInfo& info, const ndn::Name& name,
                                                SimTime now);

  /// A Data packet returning for one of our Interest Datagrams. Returns
  /// the datagrams to inject at the subnet side, in storage order.
  std::vector<IpDatagram> on_data_arrival(const ndn::DataPacket& data, SimTime now);

  /// Housekeeping: expires pending entries stranded longer than
  /// PENDING_TTL. Also the hook where a retransmission policy would live.
  std::vector<ndn::Packet> tick(SimTime now);

  const GatewayConfig& config() const { return config_; }
  const GatewayCounters& counters() const { return counters_; }
  const RoutingTable& routes() const { return routes_; }

  std::size_t pending_datagrams() const;
  std::size_t pending_octets() const;

  /// Test access: macro-packet queue for one destination label.
  const std::deque<MacroPacket>* queue_for(const std::string& label) const;

private:
  std::vector<ndn::Packet> capture_basic(const GatewayId& egress, const IpDatagram& dgram,
                                         SimTime now, const NonceSource& nonce);
  std::vector<ndn::Packet> capture_improved(const GatewayId& egress, const IpDatagram& dgram,
                                            SimTime now, const NonceSource& nonce);

  struct BasicEntry {
    std::uint64_t seqno = 0;
    IpDatagram dgram;
    SimTime enqueued_at{0};
  };

  struct MacroQueue {
    std::deque<MacroPacket> packets;
    std::uint64_t next_seqno = 0;
    std::size_t octets = 0;
  };

  GatewayConfig config_;
  RoutingTable routes_;
  GatewayCounters counters_;

  // Basic mode: one FIFO, one sequence number space.
  std::deque<BasicEntry> basic_queue_;
  std::uint64_t basic_next_seqno_ = 0;
  std::size_t basic_octets_ = 0;

  // Improved mode: one queue per destination gateway, each with its own
  // sequence number space.
  std::map<std::string, MacroQueue> queues_;

  // Names of Interest Datagrams we emitted and still expect Data for.
  std::map<ndn::Name, SimTime> awaiting_data_;
};

} // namespace ipond::gw
