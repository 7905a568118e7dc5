/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gw/names.hpp"

#include <charconv>

namespace ipond::gw {

namespace {

constexpr const char* kIpComponent = "ip";
constexpr const char* kRequestComponent = "request";
constexpr const char* kDatagramComponent = "datagram";

/// True when `name` is prefix + label + "ip" + <method>, with `tail`
/// components after the method.
bool matches_method(const ndn::Name& name, const GatewayId& self, const char* method,
                    std::size_t tail)
{
  std::size_t head = self.prefix.size();
  if (name.size() != head + 3 + tail) {
    return false;
  }
  if (!self.prefix.is_prefix_of(name)) {
    return false;
  }
  return name.at(head) == self.label && name.at(head + 1) == kIpComponent &&
         name.at(head + 2) == method;
}

} // namespace

std::string_view to_string(Mode mode)
{
  return mode == Mode::Basic ? "basic" : "improved";
}

std::optional<Mode> mode_from_string(std::string_view text)
{
  if (text == "basic") {
    return Mode::Basic;
  }
  if (text == "improved") {
    return Mode::Improved;
  }
  return std::nullopt;
}

ndn::Name make_request_name(const GatewayId& dst, const GatewayId& src, std::uint64_t seqno)
{
  return dst.prefix.appended(dst.label)
      .append(kIpComponent)
      .append(kRequestComponent)
      .append(src.label)
      .append(std::to_string(seqno));
}

ndn::Name make_datagram_name(Mode mode, const GatewayId& requester, const GatewayId& responder,
                             std::uint64_t seqno)
{
  ndn::Name name = requester.prefix.appended(requester.label)
                       .append(kIpComponent)
                       .append(kDatagramComponent);
  if (mode == Mode::Improved) {
    name.append(responder.label);
  }
  return name.append(std::to_string(seqno));
}

std::optional<RequestInfo> parse_request_name(const ndn::Name& name, const GatewayId& self)
{
  if (!matches_method(name, self, kRequestComponent, 2)) {
    return std::nullopt;
  }
  std::size_t head = self.prefix.size() + 3;
  const std::string& src_label = name.at(head);
  auto seqno = parse_seqno(name.at(head + 1));
  if (src_label.empty() || !seqno) {
    return std::nullopt;
  }
  return RequestInfo{src_label, *seqno};
}

std::optional<DatagramInfo> parse_datagram_name(const ndn::Name& name, const GatewayId& self,
                                                Mode mode)
{
  std::size_t tail = mode == Mode::Improved ? 2 : 1;
  if (!matches_method(name, self, kDatagramComponent, tail)) {
    return std::nullopt;
  }
  std::size_t head = self.prefix.size() + 3;
  DatagramInfo info;
  if (mode == Mode::Improved) {
    info.responder_label = name.at(head);
    if (info.responder_label.empty()) {
      return std::nullopt;
    }
    ++head;
  }
  auto seqno = parse_seqno(name.at(head));
  if (!seqno) {
    return std::nullopt;
  }
  info.seqno = *seqno;
  return info;
}

std::optional<std::uint64_t> parse_seqno(const std::string& component)
{
  if (component.empty() || (component.size() > 1 && component.front() == '0')) {
    return std::nullopt;
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(component.data(), component.data() + component.size(), value);
  if (ec != std::errc() || ptr != component.data() + component.size()) {
    return std::nullopt;
  }
  return value;
}

} // namespace ipond::gw
