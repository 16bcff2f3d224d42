#pragma once

namespace polyglue {
inline constexpr const char* kVersion = "0.1.0";
}
