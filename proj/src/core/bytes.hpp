/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ipond {

using Bytes = std::vector<std::uint8_t>;

// Big-endian field helpers shared by the NDN wire codec and the IPv4
// serializer. Writers append to a Bytes buffer; readers assume the caller
// already checked the bounds.

inline void put_be16(Bytes& out, std::uint16_t v)
{
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_be32(Bytes& out, std::uint32_t v)
{
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_be64(Bytes& out, std::uint64_t v)
{
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

inline std::uint16_t get_be16(std::span<const std::uint8_t> in, std::size_t off)
{
  return static_cast<std::uint16_t>((in[off] << 8) | in[off + 1]);
}

inline std::uint32_t get_be32(std::span<const std::uint8_t> in, std::size_t off)
{
  return (static_cast<std::uint32_t>(in[off]) << 24) |
         (static_cast<std::uint32_t>(in[off + 1]) << 16) |
         (static_cast<std::uint32_t>(in[off + 2]) << 8) |
         static_cast<std::uint32_t>(in[off + 3]);
}

inline std::uint64_t get_be64(std::span<const std::uint8_t> in, std::size_t off)
{
  return (static_cast<std::uint64_t>(get_be32(in, off)) << 32) | get_be32(in, off + 4);
}

} // namespace ipond
