/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "sim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ipond::sim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what)
{
  throw ScenarioError(context + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& context)
{
  auto it = j.find(key);
  if (it == j.end()) {
    fail(context, std::string("missing field '") + key + "'");
  }
  return *it;
}

std::string get_string(const json& j, const char* key, const std::string& context)
{
  const json& v = member(j, key, context);
  if (!v.is_string()) {
    fail(context, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

double get_number(const json& j, const char* key, const std::string& context, double fallback,
                  bool required = false)
{
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) {
      fail(context, std::string("missing field '") + key + "'");
    }
    return fallback;
  }
  if (!it->is_number()) {
    fail(context, std::string("field '") + key + "' must be a number");
  }
  return it->get<double>();
}

std::int64_t get_int(const json& j, const char* key, const std::string& context,
                     std::int64_t fallback, bool required = false)
{
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) {
      fail(context, std::string("missing field '") + key + "'");
    }
    return fallback;
  }
  if (!it->is_number_integer()) {
    fail(context, std::string("field '") + key + "' must be an integer");
  }
  return it->get<std::int64_t>();
}

ndn::Name get_name(const json& j, const char* key, const std::string& context)
{
  std::string text = get_string(j, key, context);
  auto name = ndn::Name::parse(text);
  if (!name) {
    fail(context, "'" + text + "' is not a valid name");
  }
  return *name;
}

gw::Subnet get_subnet(const json& j, const char* key, const std::string& context)
{
  std::string text = get_string(j, key, context);
  auto subnet = gw::parse_subnet(text);
  if (!subnet) {
    fail(context, "'" + text + "' is not a valid subnet (expected a.b.c.d/len)");
  }
  return *subnet;
}

NodeSpec parse_node(const json& j, std::size_t index)
{
  std::string context = "nodes[" + std::to_string(index) + "]";
  NodeSpec node;
  node.id = get_string(j, "id", context);
  context += " ('" + node.id + "')";

  std::string role = get_string(j, "role", context);
  if (role == "router" || role == "ndn-router") {
    node.role = NodeRole::NdnRouter;
  }
  else if (role == "gateway") {
    node.role = NodeRole::Gateway;
    node.label = get_string(j, "label", context);
    node.subnet = get_subnet(j, "subnet", context);
  }
  else if (role == "host" || role == "ip-host") {
    node.role = NodeRole::IpHost;
    std::string addr = get_string(j, "address", context);
    auto parsed = gw::parse_ipv4(addr);
    if (!parsed) {
      fail(context, "'" + addr + "' is not a valid IPv4 address");
    }
    node.address = *parsed;
  }
  else {
    fail(context, "unknown role '" + role + "'");
  }
  return node;
}

FlowSpec parse_flow(const json& j, std::size_t index)
{
  std::string context = "workload[" + std::to_string(index) + "]";
  FlowSpec flow;
  flow.id = get_string(j, "flow", context);
  context += " ('" + flow.id + "')";

  std::string type = get_string(j, "type", context);
  if (type == "cbr") {
    flow.kind = FlowSpec::Kind::Cbr;
    flow.rate_pps = get_number(j, "rate_pps", context, 0, true);
  }
  else if (type == "burst") {
    flow.kind = FlowSpec::Kind::Burst;
    flow.burst_size = static_cast<int>(get_int(j, "burst_size", context, 1));
    flow.gap_ms = get_int(j, "gap_ms", context, 1000);
  }
  else {
    fail(context, "unknown flow type '" + type + "'");
  }
  flow.src = get_string(j, "src", context);
  flow.dst = get_string(j, "dst", context);
  flow.payload_octets = static_cast<std::size_t>(get_int(j, "payload_octets", context, 1000));
  flow.start_ms = get_int(j, "start_ms", context, 0);
  flow.stop_ms = get_int(j, "stop_ms", context, 1000);
  return flow;
}

} // namespace

std::string_view to_string(NodeRole role)
{
  switch (role) {
  case NodeRole::NdnRouter:
    return "router";
  case NodeRole::Gateway:
    return "gateway";
  case NodeRole::IpHost:
    return "host";
  }
  return "?";
}

Scenario load_scenario(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read scenario file '" + path + "'");
  }
  return parse_scenario(buffer.str());
}

Scenario parse_scenario(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  }
  catch (const json::parse_error& e) {
    // Map the byte offset onto a line for the diagnostic.
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
      }
    }
    throw ScenarioError("line " + std::to_string(line) + ": " + e.what());
  }

  if (!doc.is_object()) {
    throw ScenarioError("top level: expected a JSON object");
  }

  Scenario s;
  s.name = get_string(doc, "name", "top level");
  s.network_prefix = get_name(doc, "network_prefix", "top level");

  if (auto it = doc.find("limits"); it != doc.end()) {
    const json& l = *it;
    const std::string ctx = "limits";
    s.limits.max_data_content =
        static_cast<std::size_t>(get_int(l, "max_data_content", ctx, 8000));
    s.limits.queue_byte_limit =
        static_cast<std::size_t>(get_int(l, "queue_byte_limit", ctx, 1 << 20));
    s.limits.pending_ttl_ms = get_int(l, "pending_ttl_ms", ctx, 5000);
    s.limits.pit_lifetime_ms = get_int(l, "pit_lifetime_ms", ctx, 4000);
    s.limits.cs_capacity = static_cast<std::size_t>(get_int(l, "cs_capacity", ctx, 256));
    s.limits.data_freshness_ms = get_int(l, "data_freshness_ms", ctx, 10000);
  }

  const json& nodes = member(doc, "nodes", "top level");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    s.nodes.push_back(parse_node(nodes[i], i));
  }

  const json& links = member(doc, "links", "top level");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const json& j = links[i];
    std::string context = "links[" + std::to_string(i) + "]";
    LinkSpec link;
    link.a = get_string(j, "a", context);
    link.b = get_string(j, "b", context);
    link.delay_ms = get_number(j, "delay_ms", context, 1.0);
    link.bandwidth_bps = get_int(j, "bandwidth_bps", context, 10'000'000);
    link.loss = get_number(j, "loss", context, 0.0);
    link.queue_packets = static_cast<int>(get_int(j, "queue_packets", context, 0));
    s.links.push_back(std::move(link));
  }

  if (auto it = doc.find("ndn_routes"); it != doc.end()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& j = (*it)[i];
      std::string context = "ndn_routes[" + std::to_string(i) + "]";
      s.ndn_routes.push_back({get_string(j, "node", context), get_name(j, "prefix", context),
                              get_string(j, "next_hop", context)});
    }
  }

  if (auto it = doc.find("ip_routes"); it != doc.end()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& j = (*it)[i];
      std::string context = "ip_routes[" + std::to_string(i) + "]";
      s.ip_routes.push_back({get_subnet(j, "subnet", context), get_string(j, "gateway", context)});
    }
  }

  if (auto it = doc.find("workload"); it != doc.end()) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      s.workload.push_back(parse_flow((*it)[i], i));
    }
  }

  return s;
}

std::vector<std::string> validate(const Scenario& s)
{
  std::vector<std::string> errors;
  auto err = [&](std::string msg) { errors.push_back(std::move(msg)); };

  std::map<std::string, const NodeSpec*> by_id;
  for (const auto& node : s.nodes) {
    if (!by_id.emplace(node.id, &node).second) {
      err("duplicate node id '" + node.id + "'");
    }
  }
  if (s.nodes.empty()) {
    err("scenario has no nodes");
    return errors;
  }

  std::set<std::string> labels;
  std::set<gw::Ipv4Addr> addresses;
  for (const auto& node : s.nodes) {
    if (node.role == NodeRole::Gateway) {
      if (node.label.empty() || node.label.find('/') != std::string::npos) {
        err("gateway '" + node.id + "': invalid label");
      }
      else if (!labels.insert(node.label).second) {
        err("gateway '" + node.id + "': duplicate label '" + node.label + "'");
      }
    }
    if (node.role == NodeRole::IpHost && !addresses.insert(node.address).second) {
      err("host '" + node.id + "': duplicate address " + gw::format_ipv4(node.address));
    }
  }

  std::map<std::string, std::vector<const NodeSpec*>> neighbors;
  for (std::size_t i = 0; i < s.links.size(); ++i) {
    const LinkSpec& link = s.links[i];
    std::string where = "link " + link.a + "-" + link.b;
    auto a = by_id.find(link.a);
    auto b = by_id.find(link.b);
    if (a == by_id.end()) {
      err(where + ": unknown node '" + link.a + "'");
    }
    if (b == by_id.end()) {
      err(where + ": unknown node '" + link.b + "'");
    }
    if (link.a == link.b) {
      err(where + ": self-link");
    }
    if (link.loss < 0.0 || link.loss > 1.0) {
      err(where + ": loss " + std::to_string(link.loss) + " outside [0,1]");
    }
    if (link.delay_ms < 0.0) {
      err(where + ": negative delay");
    }
    if (link.bandwidth_bps <= 0) {
      err(where + ": bandwidth must be positive");
    }
    if (link.queue_packets < 0) {
      err(where + ": negative queue size");
    }
    if (a != by_id.end() && b != by_id.end() && link.a != link.b) {
      neighbors[link.a].push_back(b->second);
      neighbors[link.b].push_back(a->second);
      if ((a->second->role == NodeRole::IpHost && b->second->role == NodeRole::IpHost) ||
          (a->second->role == NodeRole::IpHost && b->second->role == NodeRole::NdnRouter) ||
          (b->second->role == NodeRole::IpHost && a->second->role == NodeRole::NdnRouter)) {
        err(where + ": hosts attach to gateways only");
      }
    }
  }

  for (const auto& node : s.nodes) {
    const auto& adjacent = neighbors[node.id];
    if (node.role == NodeRole::Gateway) {
      bool has_router = std::any_of(adjacent.begin(), adjacent.end(), [](const NodeSpec* n) {
        return n->role == NodeRole::NdnRouter || n->role == NodeRole::Gateway;
      });
      bool has_host = std::any_of(adjacent.begin(), adjacent.end(), [](const NodeSpec* n) {
        return n->role == NodeRole::IpHost;
      });
      if (!has_router) {
        err("gateway '" + node.id + "' has no NDN-side link");
      }
      if (!has_host) {
        err("gateway '" + node.id + "' has no host-side link");
      }
    }
    if (node.role == NodeRole::IpHost && adjacent.size() != 1) {
      err("host '" + node.id + "' must attach to exactly one gateway");
    }
  }

  // Connectivity over the whole graph.
  {
    std::set<std::string> seen;
    std::queue<std::string> frontier;
    frontier.push(s.nodes.front().id);
    seen.insert(s.nodes.front().id);
    while (!frontier.empty()) {
      std::string id = frontier.front();
      frontier.pop();
      for (const NodeSpec* n : neighbors[id]) {
        if (seen.insert(n->id).second) {
          frontier.push(n->id);
        }
      }
    }
    for (const auto& node : s.nodes) {
      if (!seen.count(node.id)) {
        err("node '" + node.id + "' is disconnected");
      }
    }
  }

  for (const auto& route : s.ndn_routes) {
    std::string where = "ndn route " + route.prefix.to_text() + " at '" + route.node + "'";
    auto node = by_id.find(route.node);
    auto hop = by_id.find(route.next_hop);
    if (node == by_id.end()) {
      err(where + ": unknown node");
      continue;
    }
    if (node->second->role == NodeRole::IpHost) {
      err(where + ": hosts have no FIB");
    }
    if (hop == by_id.end()) {
      err(where + ": unknown next hop '" + route.next_hop + "'");
      continue;
    }
    const auto& adjacent = neighbors[route.node];
    if (std::none_of(adjacent.begin(), adjacent.end(),
                     [&](const NodeSpec* n) { return n->id == route.next_hop; })) {
      err(where + ": next hop '" + route.next_hop + "' is not adjacent");
    }
  }

  std::set<std::pair<gw::Ipv4Addr, int>> subnets;
  for (const auto& route : s.ip_routes) {
    std::string where = "ip route " + gw::format_subnet(route.subnet);
    if (!labels.count(route.gateway_label)) {
      err(where + ": unknown gateway label '" + route.gateway_label + "'");
    }
    if (!subnets.emplace(route.subnet.address, route.subnet.prefix_len).second) {
      err(where + ": duplicate subnet entry");
    }
  }

  std::set<std::string> flow_ids;
  for (const auto& flow : s.workload) {
    std::string where = "flow '" + flow.id + "'";
    if (!flow_ids.insert(flow.id).second) {
      err(where + ": duplicate flow id");
    }
    auto src = by_id.find(flow.src);
    auto dst = by_id.find(flow.dst);
    if (src == by_id.end() || src->second->role != NodeRole::IpHost) {
      err(where + ": src '" + flow.src + "' is not a host");
    }
    if (dst == by_id.end() || dst->second->role != NodeRole::IpHost) {
      err(where + ": dst '" + flow.dst + "' is not a host");
    }
    if (flow.src == flow.dst) {
      err(where + ": src and dst are the same host");
    }
    if (flow.kind == FlowSpec::Kind::Cbr && !(flow.rate_pps > 0)) {
      err(where + ": rate must be positive");
    }
    if (flow.kind == FlowSpec::Kind::Burst && flow.burst_size < 1) {
      err(where + ": burst size must be at least 1");
    }
    if (flow.kind == FlowSpec::Kind::Burst && flow.gap_ms <= 0) {
      err(where + ": burst gap must be positive");
    }
    if (flow.payload_octets < 16) {
      err(where + ": payload must be at least 16 octets (flow header)");
    }
    if (flow.payload_octets + gw::kIpv4HeaderLen > 65535) {
      err(where + ": datagram exceeds the IPv4 total-length field");
    }
    if (flow.stop_ms <= flow.start_ms) {
      err(where + ": stop must be after start");
    }
  }

  return errors;
}

} // namespace ipond::sim
