// Copyright 2026 The hyperon-channels Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyperon/qcore.hpp"

namespace hyperon {

enum class Role { Single, Pair1, Pair2, CascadeMu, CascadeNu };

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

/// One sampled daughter direction.
struct EventRecord {
  std::uint64_t event_id = 0;
  Role role = Role::Single;
  std::string channel;
  Vec3 n = Vec3::UnitZ();
};

/// Daughter directions of one entangled pair event.
struct PairEvent {
  std::uint64_t event_id = 0;
  Vec3 n1 = Vec3::UnitZ();
  Vec3 n2 = Vec3::UnitZ();
};

}  // namespace hyperon
