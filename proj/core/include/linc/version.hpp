#pragma once

namespace linc {

inline constexpr const char* kVersion = "0.1.0";

} // namespace linc
