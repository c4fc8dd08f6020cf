#pragma once

namespace icurve {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace icurve
