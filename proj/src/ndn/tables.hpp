/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <set>
#include <vector>

#include "core/time.hpp"
#include "ndn/packet.hpp"

namespace ipond::ndn {

using FaceId = int;

struct FibEntry {
  Name prefix;
  std::vector<FaceId> next_hops;
};

/// FIB with longest-prefix match. Entries are keyed by prefix, so prefixes
/// stay unique; lookup probes the query name's prefixes from longest to
/// shortest with exact map lookups.
class Fib {
public:
  /// Adds a next hop under `prefix`, merging with an existing entry.
  void add(const Name& prefix, FaceId face);

  std::vector<FaceId> lookup(const Name& name) const;

  std::vector<FibEntry> entries() const;

  bool empty() const { return table_.empty(); }

private:
  std::map<Name, std::vector<FaceId>> table_;
};

struct PitEntry {
  std::set<FaceId> in_faces;
  std::set<std::uint32_t> seen_nonces;
  SimTime expiry{0};

  bool live(SimTime now) const { return now < expiry; }
};

struct ContentStoreEntry {
  DataPacket data;
  SimTime inserted_at{0};
};

/// Exact-match cache with FIFO eviction. Entries are never served past
/// their freshness window.
class ContentStore {
public:
  explicit ContentStore(std::size_t capacity = 256)
    : capacity_(capacity)
  {
  }

  void insert(const DataPacket& data, SimTime now);

  /// Fresh entry matching `name` exactly, or nullptr.
  const DataPacket* find(const Name& name, SimTime now) const;

  std::size_t size() const { return order_.size(); }

private:
  std::size_t capacity_;
  std::list<ContentStoreEntry> order_; // front = oldest
  std::map<Name, std::list<ContentStoreEntry>::iterator> index_;
};

} // namespace ipond::ndn
