#pragma once

namespace fracrelax {

inline constexpr const char* kLibraryVersion = "0.1.0";

} // namespace fracrelax
