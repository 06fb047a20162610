#pragma once

#include <stdexcept>

namespace queens {

// Thrown when a desk-scale guard refuses an oversized request (as opposed to
// a malformed one, which throws std::invalid_argument).
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace queens
