// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#include "hyperon/events.hpp"

#include <array>
#include <utility>

namespace hyperon {

namespace {
constexpr std::array<std::pair<Role, std::string_view>, 5> kRoleNames{{
    {Role::Single, "single"},
    {Role::Pair1, "pair-1"},
    {Role::Pair2, "pair-2"},
    {Role::CascadeMu, "cascade-mu"},
    {Role::CascadeNu, "cascade-nu"},
}};
}  // namespace

std::string_view to_string(Role role) {
  for (const auto& [r, name] : kRoleNames)
    if (r == role) return name;
  return "single";
}

std::optional<Role> role_from_string(std::string_view text) {
  for (const auto& [r, name] : kRoleNames)
    if (name == text) return r;
  return std::nullopt;
}

}  // namespace hyperon
