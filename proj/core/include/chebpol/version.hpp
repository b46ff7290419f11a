#pragma once

namespace chebpol {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chebpol
