/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ndn/forwarder.hpp"

namespace ipond::ndn {

std::vector<Emission> Forwarder::on_interest(const InterestPacket& interest, FaceId in_face,
                                             SimTime now)
{
  ++counters_.interests_in;

  // Content Store first: a fresh exact match satisfies the Interest on the
  // arrival face without touching the PIT.
  if (const DataPacket* cached = cs_.find(interest.name, now)) {
    ++counters_.cs_hits;
    ++counters_.data_out;
    return {{in_face, *cached}};
  }

  auto pit_it = pit_.find(interest.name);
  if (pit_it != pit_.end() && !pit_it->second.live(now)) {
    pit_.erase(pit_it);
    pit_it = pit_.end();
    ++counters_.pit_expired;
  }

  if (pit_it != pit_.end()) {
    PitEntry& entry = pit_it->second;
    if (entry.seen_nonces.count(interest.nonce)) {
      // Looped Interest.
      ++counters_.loops_suppressed;
      return {};
    }
    entry.in_faces.insert(in_face);
    entry.seen_nonces.insert(interest.nonce);
    ++counters_.aggregated;
    return {};
  }

  std::vector<FaceId> hops = fib_.lookup(interest.name);
  std::vector<Emission> out;
  for (FaceId f : hops) {
    if (f != in_face) {
      out.push_back({f, interest});
    }
  }
  if (out.empty()) {
    ++counters_.no_route_drops;
    return {};
  }

  PitEntry entry;
  entry.in_faces.insert(in_face);
  entry.seen_nonces.insert(interest.nonce);
  entry.expiry = now + interest.lifetime;
  pit_.emplace(interest.name, std::move(entry));

  counters_.interests_out += out.size();
  return out;
}

std::vector<Emission> Forwarder::on_data(const DataPacket& data, FaceId in_face, SimTime now)
{
  ++counters_.data_in;

  auto pit_it = pit_.find(data.name);
  if (pit_it != pit_.end() && !pit_it->second.live(now)) {
    pit_.erase(pit_it);
    pit_it = pit_.end();
    ++counters_.pit_expired;
  }
  if (pit_it == pit_.end()) {
    ++counters_.unsolicited_data;
    return {};
  }

  std::vector<Emission> out;
  for (FaceId f : pit_it->second.in_faces) {
    out.push_back({f, data});
  }
  pit_.erase(pit_it);
  cs_.insert(data, now);
  counters_.data_out += out.size();
  (void)in_face;
  return out;
}

bool Forwarder::pit_has(const Name& name, SimTime now) const
{
  auto it = pit_.find(name);
  return it != pit_.end() && it->second.live(now);
}

} // namespace ipond::ndn
