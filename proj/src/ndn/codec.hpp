/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "ndn/packet.hpp"

namespace ipond::ndn {

/// Default cap on Data content octets; deployments may lower or raise it.
inline constexpr std::size_t kMaxDataContentDefault = 8000;

class EncodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Decode failure. `offset` is the buffer position at which the violated
/// read began (0 for an empty buffer or unknown type tag).
class DecodeError : public std::runtime_error {
public:
  DecodeError(std::size_t offset, const std::string& what)
    : std::runtime_error("decode error at offset " + std::to_string(offset) + ": " + what)
    , offset_(offset)
  {
  }

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Wire layout (all length fields big-endian, documented byte-exactly in
// docs/wire-format.md):
//
//   packet   := type:u8 body            type 1 = Interest, 2 = Data
//   name     := count:u16 (len:u16 bytes)*      count >= 1, len >= 1
//   Interest := name nonce:u32 lifetime_ms:u32
//   Data     := name content_len:u32 content freshness_ms:u32
//
// decode_packet consumes the whole buffer; trailing bytes are an error.

Bytes encode_packet(const Packet& packet, std::size_t max_data_content = kMaxDataContentDefault);

Packet decode_packet(std::span<const std::uint8_t> wire);

/// Exact length encode_packet would produce, without allocating.
std::size_t encoded_size(const Packet& packet);

} // namespace ipond::ndn
