/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <vector>

#include "gw/ip.hpp"
#include "gw/names.hpp"

namespace ipond::gw {

struct RouteEntry {
  Subnet subnet;
  GatewayId egress;
};

/// The shared gateway routing table: which egress gateway serves each IP
/// subnet. Lookup is longest-mask match.
class RoutingTable {
public:
  /// Rejects a second entry with an identical (address, mask) pair.
  bool add(RouteEntry entry);

  std::optional<GatewayId> lookup(Ipv4Addr dst) const;

  const std::vector<RouteEntry>& entries() const { return entries_; }

private:
  std::vector<RouteEntry> entries_;
};

} // namespace ipond::gw
