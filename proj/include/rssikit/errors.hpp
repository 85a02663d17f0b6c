#pragma once

#include <stdexcept>
#include <string>

namespace rssikit {

// Bad data: malformed files, non-finite samples, violated preconditions on
// user-supplied values. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad settings: parameters outside their documented ranges. Maps to CLI
// exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that is formally valid but carries no usable signal (constant trace,
// zero variance, too few samples for the requested statistic).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rssikit
