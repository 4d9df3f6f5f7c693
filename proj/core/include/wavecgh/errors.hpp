#pragma once

#include <stdexcept>
#include <string>

namespace wavecgh {

// Rejected input: bad argument, malformed configuration, violated contract.
// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Filesystem or serialization failure. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A cache file exists but was written for different scene parameters or a
// different block size.
class StaleCacheError : public IoError {
 public:
  explicit StaleCacheError(const std::string& what) : IoError(what) {}
};

}  // namespace wavecgh
