/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ndn/tables.hpp"

namespace ipond::ndn {

struct ForwarderConfig {
  std::size_t cs_capacity = 256;
};

struct ForwarderCounters {
  std::uint64_t interests_in = 0;
  std::uint64_t interests_out = 0;
  std::uint64_t data_in = 0;
  std::uint64_t data_out = 0;
  std::uint64_t cs_hits = 0;
  std::uint64_t aggregated = 0;
  std::uint64_t loops_suppressed = 0;
  std::uint64_t no_route_drops = 0;
  std::uint64_t unsolicited_data = 0;
  std::uint64_t pit_expired = 0;
};

struct Emission {
  FaceId face;
  Packet packet;
};

/// One NDN router: FIB longest-prefix forwarding, PIT aggregation with
/// nonce loop suppression, and an exact-match Content Store. State is
/// single-owner; handlers take the current simulation time and return the
/// packets to emit instead of doing I/O.
class Forwarder {
public:
  explicit Forwarder(ForwarderConfig config = {})
    : cs_(config.cs_capacity)
  {
  }

  std::vector<Emission> on_interest(const InterestPacket& interest, FaceId in_face, SimTime now);

  std::vector<Emission> on_data(const DataPacket& data, FaceId in_face, SimTime now);

  Fib& fib() { return fib_; }
  const Fib& fib() const { return fib_; }
  const ForwarderCounters& counters() const { return counters_; }

  std::size_t pit_size() const { return pit_.size(); }
  bool pit_has(const Name& name, SimTime now) const;

private:
  Fib fib_;
  std::map<Name, PitEntry> pit_;
  ContentStore cs_;
  ForwarderCounters counters_;
};

} // namespace ipond::ndn
