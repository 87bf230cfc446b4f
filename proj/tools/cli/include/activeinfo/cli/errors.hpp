#pragma once

#include <stdexcept>

#include "activeinfo/error.hpp"

namespace activeinfo::cli {

/// Malformed command line or spec string. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Input data that could not be parsed; the message names the line.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace activeinfo::cli
