#pragma once

#include <string>

#include "hecke/linearity.hpp"

namespace hecke::cli {

/// Largest n probed when validating a family against its first admissible instance.
inline constexpr std::int64_t kConfigProbeLimit = 400;

/// Resolves a built-in family name or reads a family JSON file, then checks the
/// declared digits against the first admissible instance.
FamilySpec load_family_config(const std::string& name_or_path);

}  // namespace hecke::cli
