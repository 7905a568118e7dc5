/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gw/ip.hpp"

#include <charconv>

namespace ipond::gw {

namespace {

std::optional<std::uint32_t> parse_decimal(std::string_view text, std::uint32_t max)
{
  if (text.empty()) {
    return std::nullopt;
  }
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value > max) {
    return std::nullopt;
  }
  return value;
}

} // namespace

std::optional<Ipv4Addr> parse_ipv4(std::string_view text)
{
  Ipv4Addr addr = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t dot = text.find('.');
    std::string_view part = (i == 3) ? text : text.substr(0, dot);
    if (i < 3 && dot == std::string_view::npos) {
      return std::nullopt;
    }
    auto octet = parse_decimal(part, 255);
    if (!octet) {
      return std::nullopt;
    }
    addr = (addr << 8) | *octet;
    if (i < 3) {
      text.remove_prefix(dot + 1);
    }
  }
  return addr;
}

std::string format_ipv4(Ipv4Addr addr)
{
  return std::to_string((addr >> 24) & 0xFF) + '.' + std::to_string((addr >> 16) & 0xFF) + '.' +
         std::to_string((addr >> 8) & 0xFF) + '.' + std::to_string(addr & 0xFF);
}

std::optional<Subnet> parse_subnet(std::string_view text)
{
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return std::nullopt;
  }
  auto addr = parse_ipv4(text.substr(0, slash));
  auto len = parse_decimal(text.substr(slash + 1), 32);
  if (!addr || !len) {
    return std::nullopt;
  }
  return Subnet{*addr, static_cast<int>(*len)};
}

std::string format_subnet(const Subnet& s)
{
  return format_ipv4(s.address) + '/' + std::to_string(s.prefix_len);
}

Bytes IpDatagram::serialize() const
{
  Bytes out;
  out.reserve(total_length());
  out.push_back(0x45); // version 4, IHL 5
  out.push_back(0x00); // DSCP/ECN
  put_be16(out, static_cast<std::uint16_t>(total_length()));
  put_be16(out, 0); // identification
  put_be16(out, 0); // flags + fragment offset
  out.push_back(64); // TTL
  out.push_back(protocol);
  put_be16(out, 0); // checksum not computed
  put_be32(out, src);
  put_be32(out, dst);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bytes join_datagrams(std::span<const IpDatagram> datagrams)
{
  Bytes out;
  for (const auto& d : datagrams) {
    Bytes wire = d.serialize();
    out.insert(out.end(), wire.begin(), wire.end());
  }
  return out;
}

SplitResult split_datagrams(std::span<const std::uint8_t> buffer)
{
  SplitResult result;
  std::size_t offset = 0;
  while (offset < buffer.size()) {
    std::size_t remaining = buffer.size() - offset;
    if (remaining < kIpv4HeaderLen || buffer[offset] != 0x45) {
      result.corrupted = true;
      result.error_offset = offset;
      return result;
    }
    std::size_t total = get_be16(buffer, offset + 2);
    if (total < kIpv4HeaderLen || offset + total > buffer.size()) {
      result.corrupted = true;
      result.error_offset = offset;
      return result;
    }
    IpDatagram d;
    d.protocol = buffer[offset + 9];
    d.src = get_be32(buffer, offset + 12);
    d.dst = get_be32(buffer, offset + 16);
    d.payload.assign(buffer.begin() + static_cast<std::ptrdiff_t>(offset + kIpv4HeaderLen),
                     buffer.begin() + static_cast<std::ptrdiff_t>(offset + total));
    result.datagrams.push_back(std::move(d));
    offset += total;
  }
  return result;
}

} // namespace ipond::gw
