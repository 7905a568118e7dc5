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
#include <string_view>
#include <vector>

#include "core/bytes.hpp"

namespace ipond::gw {

using Ipv4Addr = std::uint32_t; // numeric value of the dotted quad

std::optional<Ipv4Addr> parse_ipv4(std::string_view text);
std::string format_ipv4(Ipv4Addr addr);

struct Subnet {
  Ipv4Addr address = 0;
  int prefix_len = 0;

  bool contains(Ipv4Addr addr) const
  {
    if (prefix_len == 0) {
      return true;
    }
    Ipv4Addr mask = prefix_len >= 32 ? 0xFFFFFFFFu : ~(0xFFFFFFFFu >> prefix_len);
    return (addr & mask) == (address & mask);
  }

  bool operator==(const Subnet&) const = default;
};

/// Parses "a.b.c.d/len".
std::optional<Subnet> parse_subnet(std::string_view text);
std::string format_subnet(const Subnet& s);

inline constexpr std::size_t kIpv4HeaderLen = 20;

/// Simplified IPv4 datagram: minimal 20-octet header (version 4, no
/// options) plus payload. The serialized total-length field is what drives
/// macro-packet splitting, so the byte layout is part of the protocol
/// contract (docs/wire-format.md).
struct IpDatagram {
  std::uint8_t protocol = 17;
  Ipv4Addr src = 0;
  Ipv4Addr dst = 0;
  Bytes payload;

  std::size_t total_length() const { return kIpv4HeaderLen + payload.size(); }

  Bytes serialize() const;

  bool operator==(const IpDatagram&) const = default;
};

/// Concatenated serializations, in order. This is the macro-packet body.
Bytes join_datagrams(std::span<const IpDatagram> datagrams);

/// Walks a buffer of concatenated datagrams, slicing on each header's
/// total-length field. A malformed slice (short header, version/IHL other
/// than plain IPv4, total length < 20, or a length overrunning the buffer)
/// aborts the walk; everything recovered up to that point is kept.
struct SplitResult {
  std::vector<IpDatagram> datagrams;
  bool corrupted = false;
  std::size_t error_offset = 0;
};

SplitResult split_datagrams(std::span<const std::uint8_t> buffer);

} // namespace ipond::gw
