#pragma once

#include <stdexcept>
#include <string>

namespace sievelab {

// Enumeration or dense allocation would exceed the configured cap.
// CLI maps this to exit code 3.
class resource_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A theorem-level inequality or an exact/float cross-check failed.
// This signals an implementation bug, not bad input.  CLI exit code 1.
class invariant_violation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative solver hit its iteration cap before reaching tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sievelab
