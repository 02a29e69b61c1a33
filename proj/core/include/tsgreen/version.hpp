#pragma once

namespace tsgreen {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace tsgreen
