/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "ndn/name.hpp"

namespace ipond::ndn {

std::optional<Name> Name::parse(std::string_view text)
{
  if (text.empty() || text.front() != '/') {
    return std::nullopt;
  }
  if (text == "/") {
    return Name{};
  }
  std::vector<std::string> components;
  std::size_t pos = 1;
  while (pos <= text.size()) {
    std::size_t next = text.find('/', pos);
    if (next == std::string_view::npos) {
      next = text.size();
    }
    if (next == pos) {
      return std::nullopt; // empty component
    }
    components.emplace_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return Name{std::move(components)};
}

std::string Name::to_text() const
{
  if (components_.empty()) {
    return "/";
  }
  std::string out;
  for (const auto& c : components_) {
    out += '/';
    out += c;
  }
  return out;
}

bool Name::is_prefix_of(const Name& other) const
{
  if (components_.size() > other.components_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i] != other.components_[i]) {
      return false;
    }
  }
  return true;
}

Name Name::prefix(std::size_t count) const
{
  if (count >= components_.size()) {
    return *this;
  }
  return Name{std::vector<std::string>(components_.begin(),
                                       components_.begin() + static_cast<std::ptrdiff_t>(count))};
}

} // namespace ipond::ndn
