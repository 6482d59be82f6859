#pragma once

namespace selink {

inline constexpr const char* kEngineVersion = "selink 1.0.0";

}  // namespace selink
