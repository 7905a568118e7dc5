/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ndn/codec.hpp"

#include <limits>

namespace ipond::ndn {

namespace {

constexpr std::uint8_t kTagInterest = 1;
constexpr std::uint8_t kTagData = 2;

void check_millis_field(Millis v, const char* field)
{
  if (v.count() < 0 || v.count() > std::numeric_limits<std::uint32_t>::max()) {
    throw EncodeError(std::string(field) + " out of range for u32 milliseconds");
  }
}

void encode_name(Bytes& out, const Name& name)
{
  if (name.empty()) {
    throw EncodeError("packet name needs at least one component");
  }
  if (name.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw EncodeError("too many name components");
  }
  put_be16(out, static_cast<std::uint16_t>(name.size()));
  for (const auto& c : name.components()) {
    if (c.empty()) {
      throw EncodeError("empty name component");
    }
    if (c.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw EncodeError("name component too long");
    }
    put_be16(out, static_cast<std::uint16_t>(c.size()));
    out.insert(out.end(), c.begin(), c.end());
  }
}

class Reader {
public:
  explicit Reader(std::span<const std::uint8_t> wire)
    : wire_(wire)
  {
  }

  std::uint8_t u8(const char* what)
  {
    need(1, what);
    return wire_[pos_++];
  }

  std::uint16_t u16(const char* what)
  {
    need(2, what);
    auto v = get_be16(wire_, pos_);
    pos_ += 2;
    return v;
  }

  std::uint32_t u32(const char* what)
  {
    need(4, what);
    auto v = get_be32(wire_, pos_);
    pos_ += 4;
    return v;
  }

  std::span<const std::uint8_t> bytes(std::size_t n, const char* what)
  {
    need(n, what);
    auto v = wire_.subspan(pos_, n);
    pos_ += n;
    return v;
  }

  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return wire_.size() - pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw DecodeError(pos_, what); }

private:
  void need(std::size_t n, const char* what)
  {
    if (remaining() < n) {
      throw DecodeError(pos_, std::string("truncated ") + what);
    }
  }

  std::span<const std::uint8_t> wire_;
  std::size_t pos_ = 0;
};

Name decode_name(Reader& r)
{
  std::size_t count_off = r.pos();
  std::uint16_t count = r.u16("name component count");
  if (count == 0) {
    throw DecodeError(count_off, "name has zero components");
  }
  std::vector<std::string> components;
  components.reserve(count);
  for (std::uint16_t i = 0; i < count; ++i) {
    std::size_t len_off = r.pos();
    std::uint16_t len = r.u16("name component length");
    if (len == 0) {
      throw DecodeError(len_off, "empty name component");
    }
    auto raw = r.bytes(len, "name component");
    components.emplace_back(raw.begin(), raw.end());
  }
  return Name{std::move(components)};
}

} // namespace

Bytes encode_packet(const Packet& packet, std::size_t max_data_content)
{
  Bytes out;
  out.reserve(encoded_size(packet));
  if (const auto* i = std::get_if<InterestPacket>(&packet)) {
    check_millis_field(i->lifetime, "lifetime");
    out.push_back(kTagInterest);
    encode_name(out, i->name);
    put_be32(out, i->nonce);
    put_be32(out, static_cast<std::uint32_t>(i->lifetime.count()));
  }
  else {
    const auto& d = std::get<DataPacket>(packet);
    if (d.content.size() > max_data_content) {
      throw EncodeError("content length " + std::to_string(d.content.size()) +
                        " exceeds MAX_DATA_CONTENT " + std::to_string(max_data_content));
    }
    check_millis_field(d.freshness, "freshness");
    out.push_back(kTagData);
    encode_name(out, d.name);
    put_be32(out, static_cast<std::uint32_t>(d.content.size()));
    out.insert(out.end(), d.content.begin(), d.content.end());
    put_be32(out, static_cast<std::uint32_t>(d.freshness.count()));
  }
  return out;
}

Packet decode_packet(std::span<const std::uint8_t> wire)
{
  Reader r(wire);
  if (wire.empty()) {
    r.fail("empty buffer");
  }
  std::uint8_t tag = r.u8("type tag");
  if (tag != kTagInterest && tag != kTagData) {
    throw DecodeError(0, "unknown type tag " + std::to_string(tag));
  }

  Name name = decode_name(r);
  Packet result;
  if (tag == kTagInterest) {
    std::uint32_t nonce = r.u32("nonce");
    std::uint32_t lifetime = r.u32("lifetime");
    result = InterestPacket{std::move(name), nonce, Millis(lifetime)};
  }
  else {
    std::uint32_t content_len = r.u32("content length");
    auto raw = r.bytes(content_len, "content");
    std::uint32_t freshness = r.u32("freshness");
    result = DataPacket{std::move(name), Bytes(raw.begin(), raw.end()), Millis(freshness)};
  }

  if (r.remaining() != 0) {
    throw DecodeError(r.pos(), "trailing bytes after packet");
  }
  return result;
}

std::size_t encoded_size(const Packet& packet)
{
  const Name& name = packet_name(packet);
  std::size_t n = 1 + 2; // tag + component count
  for (const auto& c : name.components()) {
    n += 2 + c.size();
  }
  if (const auto* d = std::get_if<DataPacket>(&packet)) {
    n += 4 + d->content.size() + 4;
  }
  else {
    n += 4 + 4;
  }
  return n;
}

} // namespace ipond::ndn
