#pragma once

namespace finring {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace finring
