#pragma once

namespace kkw {
inline constexpr const char* kVersion = "0.1.0";
}
