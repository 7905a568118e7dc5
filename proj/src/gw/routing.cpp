/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gw/routing.hpp"

namespace ipond::gw {

bool RoutingTable::add(RouteEntry entry)
{
  for (const auto& existing : entries_) {
    if (existing.subnet == entry.subnet) {
      return false;
    }
  }
  entries_.push_back(std::move(entry));
  return true;
}

std::optional<GatewayId> RoutingTable::lookup(Ipv4Addr dst) const
{
  const RouteEntry* best = nullptr;
  for (const auto& entry : entries_) {
    if (entry.subnet.contains(dst) &&
        (best == nullptr || entry.subnet.prefix_len > best->subnet.prefix_len)) {
      best = &entry;
    }
  }
  if (best == nullptr) {
    return std::nullopt;
  }
  return best->egress;
}

} // namespace ipond::gw
