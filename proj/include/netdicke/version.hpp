#pragma once

namespace netdicke {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace netdicke
