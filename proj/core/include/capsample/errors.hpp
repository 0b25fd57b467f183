#pragma once

#include <stdexcept>

namespace capsample {

// Thrown when a quantity required in linear floating point has underflowed
// to zero and the requested operation has no underflow-safe path.
class underflow_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative scheme exhausts its iteration cap without
// converging. Results are never silently returned in that state.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace capsample
