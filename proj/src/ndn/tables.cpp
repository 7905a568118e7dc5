/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ndn/tables.hpp"

#include <algorithm>

namespace ipond::ndn {

void Fib::add(const Name& prefix, FaceId face)
{
  auto& hops = table_[prefix];
  if (std::find(hops.begin(), hops.end(), face) == hops.end()) {
    hops.push_back(face);
  }
}

std::vector<FaceId> Fib::lookup(const Name& name) const
{
  // Probe /a/b/c, /a/b, /a, then the root prefix.
  for (std::size_t len = name.size() + 1; len-- > 0;) {
    auto it = table_.find(name.prefix(len));
    if (it != table_.end()) {
      return it->second;
    }
  }
  return {};
}

std::vector<FibEntry> Fib::entries() const
{
  std::vector<FibEntry> out;
  out.reserve(table_.size());
  for (const auto& [prefix, hops] : table_) {
    out.push_back({prefix, hops});
  }
  return out;
}

void ContentStore::insert(const DataPacket& data, SimTime now)
{
  if (capacity_ == 0) {
    return;
  }
  if (auto it = index_.find(data.name); it != index_.end()) {
    order_.erase(it->second);
    index_.erase(it);
  }
  if (order_.size() >= capacity_) {
    index_.erase(order_.front().data.name);
    order_.pop_front();
  }
  order_.push_back({data, now});
  index_[data.name] = std::prev(order_.end());
}

const DataPacket* ContentStore::find(const Name& name, SimTime now) const
{
  auto it = index_.find(name);
  if (it == index_.end()) {
    return nullptr;
  }
  const ContentStoreEntry& entry = *it->second;
  if (now >= entry.inserted_at + entry.data.freshness) {
    return nullptr; // stale
  }
  return &entry.data;
}

} // namespace ipond::ndn
