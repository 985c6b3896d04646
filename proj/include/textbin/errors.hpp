#pragma once

#include <stdexcept>
#include <string>

namespace textbin {

// File-system level failures (missing file, unwritable path).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Config grammar violations (bad key, bad value).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Image file format violations (bad magic, maxval, truncation).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace textbin
