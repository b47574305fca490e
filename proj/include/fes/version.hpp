#pragma once

namespace fes {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fes
