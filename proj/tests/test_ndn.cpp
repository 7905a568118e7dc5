/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ndn/codec.hpp"
#include "ndn/name.hpp"

using namespace ipond;
using namespace ipond::ndn;

namespace {

Name name_of(const char* text)
{
  auto n = Name::parse(text);
  REQUIRE(n.has_value());
  return *n;
}

// Random valid packets; the generator doubles as the round-trip oracle.
struct PacketGen {
  std::mt19937 rng{20260809};

  std::string component()
  {
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> byte(0, 255);
    std::string c;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      char ch = static_cast<char>(byte(rng));
      if (ch == '/') {
        ch = '_';
      }
      c.push_back(ch);
    }
    return c;
  }

  Name name()
  {
    std::uniform_int_distribution<int> count(1, 6);
    std::vector<std::string> comps;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      comps.push_back(component());
    }
    return Name{std::move(comps)};
  }

  Packet packet()
  {
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng) == 0) {
      std::uniform_int_distribution<std::uint32_t> nonce;
      std::uniform_int_distribution<std::uint32_t> life(0, 1u << 20);
      return InterestPacket{name(), nonce(rng), Millis(life(rng))};
    }
    std::uniform_int_distribution<int> len(0, 2000);
    std::uniform_int_distribution<int> byte(0, 255);
    Bytes content(static_cast<std::size_t>(len(rng)));
    for (auto& b : content) {
      b = static_cast<std::uint8_t>(byte(rng));
    }
    std::uniform_int_distribution<std::uint32_t> fresh(0, 1u << 20);
    return DataPacket{name(), std::move(content), Millis(fresh(rng))};
  }
};

} // namespace

TEST_CASE("name text render/parse round-trips")
{
  CHECK(name_of("/a/b/c").to_text() == "/a/b/c");
  CHECK(name_of("/mynet/nodeA/ip/request/nodeB/3").size() == 6);
  CHECK(Name{}.to_text() == "/");
  CHECK(Name::parse("/") == Name{});
  CHECK_FALSE(Name::parse("").has_value());
  CHECK_FALSE(Name::parse("a/b").has_value());
  CHECK_FALSE(Name::parse("//a").has_value());
  CHECK_FALSE(Name::parse("/a//b").has_value());

  PacketGen gen;
  for (int i = 0; i < 500; ++i) {
    Name n = gen.name();
    CHECK(Name::parse(n.to_text()) == n);
  }
}

TEST_CASE("name prefix relation")
{
  Name root;
  CHECK(root.is_prefix_of(name_of("/a")));
  CHECK(name_of("/a").is_prefix_of(name_of("/a/b")));
  CHECK_FALSE(name_of("/a/b").is_prefix_of(name_of("/a")));
  CHECK_FALSE(name_of("/a/x").is_prefix_of(name_of("/a/b/c")));
  CHECK(name_of("/a/b/c").prefix(2) == name_of("/a/b"));
  CHECK(name_of("/a/b/c").prefix(0) == root);
}

TEST_CASE("shortest legal Interest encodes to known bytes")
{
  InterestPacket p{name_of("/a"), 0, Millis(0)};
  Bytes wire = encode_packet(p);
  Bytes expected = {
      0x01,             // Interest
      0x00, 0x01,       // one component
      0x00, 0x01, 'a',  // "a"
      0x00, 0x00, 0x00, 0x00, // nonce
      0x00, 0x00, 0x00, 0x00, // lifetime
  };
  CHECK(wire == expected);
  CHECK(decode_packet(wire) == Packet{p});
}

TEST_CASE("Data packet round-trips name and content")
{
  Bytes content(40);
  for (std::size_t i = 0; i < content.size(); ++i) {
    content[i] = static_cast<std::uint8_t>(i * 7);
  }
  DataPacket d{name_of("/mynet/nodeB/ip/datagram/3"), content, Millis(10000)};
  Packet back = decode_packet(encode_packet(d));
  REQUIRE(std::holds_alternative<DataPacket>(back));
  const auto& dd = std::get<DataPacket>(back);
  CHECK(dd.name == d.name);
  CHECK(dd.content == content);
}

TEST_CASE("1000 random packets round-trip byte-identically")
{
  PacketGen gen;
  for (int i = 0; i < 1000; ++i) {
    Packet p = gen.packet();
    Bytes wire = encode_packet(p);
    CHECK(encoded_size(p) == wire.size());
    Packet back = decode_packet(wire);
    CHECK(back == p);
    CHECK(encode_packet(back) == wire);
  }
}

TEST_CASE("decode rejects the empty buffer at offset 0")
{
  try {
    decode_packet({});
    FAIL("expected DecodeError");
  }
  catch (const DecodeError& e) {
    CHECK(e.offset() == 0);
  }
}

TEST_CASE("decode rejects unknown type tags")
{
  Bytes wire = encode_packet(InterestPacket{name_of("/a"), 1, Millis(1)});
  wire[0] = 0x7F;
  CHECK_THROWS_AS(decode_packet(wire), DecodeError);
}

TEST_CASE("decode rejects trailing garbage")
{
  Bytes wire = encode_packet(InterestPacket{name_of("/a/b"), 5, Millis(4000)});
  std::size_t valid_len = wire.size();
  wire.push_back(0x00);
  try {
    decode_packet(wire);
    FAIL("expected DecodeError");
  }
  catch (const DecodeError& e) {
    CHECK(e.offset() == valid_len);
  }
}

TEST_CASE("every truncation of a valid encoding is rejected")
{
  PacketGen gen;
  for (int i = 0; i < 50; ++i) {
    Bytes wire = encode_packet(gen.packet());
    for (std::size_t len = 0; len < wire.size(); ++len) {
      Bytes cut(wire.begin(), wire.begin() + static_cast<std::ptrdiff_t>(len));
      CHECK_THROWS_AS(decode_packet(cut), DecodeError);
    }
  }
}

TEST_CASE("encode refuses oversized content")
{
  DataPacket d{name_of("/x"), Bytes(8001), Millis(1)};
  CHECK_THROWS_AS(encode_packet(d), EncodeError);
  CHECK_NOTHROW(encode_packet(DataPacket{name_of("/x"), Bytes(8000), Millis(1)}));
  // The limit is a knob, not a constant.
  CHECK_THROWS_AS(encode_packet(DataPacket{name_of("/x"), Bytes(100), Millis(1)}, 99),
                  EncodeError);
}

TEST_CASE("encode refuses the empty name")
{
  CHECK_THROWS_AS(encode_packet(InterestPacket{Name{}, 0, Millis(1)}), EncodeError);
}
