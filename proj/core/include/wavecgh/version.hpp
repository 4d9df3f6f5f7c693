#pragma once

#include <string_view>

namespace wavecgh {

inline constexpr std::string_view kArtifactName = "wavecgh";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace wavecgh
