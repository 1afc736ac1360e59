#pragma once

namespace g2cohom {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace g2cohom
