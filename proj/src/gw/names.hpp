/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ndn/name.hpp"

namespace ipond::gw {

enum class Mode {
  Basic,
  Improved,
};

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

struct GatewayId {
  ndn::Name prefix;  // network prefix, e.g. /mynet
  std::string label; // node label, e.g. nodeA

  bool operator==(const GatewayId&) const = default;
};

// The two name grammars spoken between gateways. With network prefix P,
// requester R, responder S and sequence number n:
//
//   Interest Request   P/<responder>/ip/request/<requester>/<n>
//   Interest Datagram  P/<requester>/ip/datagram/<n>              (basic)
//                      P/<requester>/ip/datagram/<responder>/<n>  (improved)
//
// Sequence numbers render as canonical decimal (no sign, no leading
// zeros); parsers reject anything else.

ndn::Name make_request_name(const GatewayId& dst, const GatewayId& src, std::uint64_t seqno);

ndn::Name make_datagram_name(Mode mode, const GatewayId& requester, const GatewayId& responder,
                             std::uint64_t seqno);

struct RequestInfo {
  std::string src_label;
  std::uint64_t seqno = 0;

  bool operator==(const RequestInfo&) const = default;
};

/// Parses an Interest Request addressed to `self`; nullopt when the name
/// does not match the grammar or is addressed elsewhere.
std::optional<RequestInfo> parse_request_name(const ndn::Name& name, const GatewayId& self);

struct DatagramInfo {
  std::string responder_label; // empty in basic mode
  std::uint64_t seqno = 0;

  bool operator==(const DatagramInfo&) const = default;
};

/// Parses an Interest Datagram addressed to `self` under the grammar of
/// `mode`. The improved grammar has one extra component (the responder
/// label naming the queue), so the two never cross-parse.
std::optional<DatagramInfo> parse_datagram_name(const ndn::Name& name, const GatewayId& self,
                                                Mode mode);

std::optional<std::uint64_t> parse_seqno(const std::string& component);

} // namespace ipond::gw
