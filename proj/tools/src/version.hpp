#pragma once

namespace dealmix::cli {

inline constexpr const char* kVersion = DEALMIX_VERSION;

}  // namespace dealmix::cli
