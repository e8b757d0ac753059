#pragma once

namespace sievelab {

// Stamped into every serialized report.
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace sievelab
