#pragma once

#include <stdexcept>
#include <string>

namespace jrka {

// Error taxonomy mirrored by the CLI exit codes: usage errors exit 1,
// data/format errors exit 2, numeric failures exit 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace jrka
