/*
 * (C) Copyright 2026 ipond authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ipond::ndn {

/// Hierarchical NDN name: an ordered list of byte-string components,
/// rendered textually as `/c1/c2/...`. Components are non-empty and never
/// contain the `/` separator. The empty name renders as `/` and is only
/// meaningful as a catch-all FIB prefix; packet names carry at least one
/// component (enforced by the wire codec).
class Name {
public:
  Name() = default;

  explicit Name(std::vector<std::string> components)
    : components_(std::move(components))
  {
  }

  /// Parses the textual form. Returns nullopt unless the text starts with
  /// `/` and every component between separators is non-empty (`/` alone is
  /// the empty name).
  static std::optional<Name> parse(std::string_view text);

  std::string to_text() const;

  Name& append(std::string component)
  {
    components_.push_back(std::move(component));
    return *this;
  }

  Name appended(std::string component) const
  {
    Name copy = *this;
    copy.append(std::move(component));
    return copy;
  }

  bool is_prefix_of(const Name& other) const;

  /// Longest proper-or-equal prefixes of this name, for table walks:
  /// getPrefix(k) keeps the first k components.
  Name prefix(std::size_t count) const;

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::string& at(std::size_t i) const { return components_.at(i); }
  const std::vector<std::string>& components() const { return components_; }

  auto operator<=>(const Name&) const = default;

private:
  std::vector<std::string> components_;
};

} // namespace ipond::ndn
