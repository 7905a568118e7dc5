/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <variant>

#include "core/bytes.hpp"
#include "core/time.hpp"
#include "ndn/name.hpp"

namespace ipond::ndn {

struct InterestPacket {
  Name name;
  std::uint32_t nonce = 0;
  Millis lifetime{4000};

  bool operator==(const InterestPacket&) const = default;
};

struct DataPacket {
  Name name;
  Bytes content;
  Millis freshness{10000};

  bool operator==(const DataPacket&) const = default;
};

using Packet = std::variant<InterestPacket, DataPacket>;

inline const Name& packet_name(const Packet& p)
{
  return std::visit([](const auto& v) -> const Name& { return v.name; }, p);
}

} // namespace ipond::ndn
