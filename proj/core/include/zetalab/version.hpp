#pragma once

namespace zetalab {

// Bumped whenever a change could invalidate cached zero files.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace zetalab
