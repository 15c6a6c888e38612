#pragma once

#include <stdexcept>
#include <string>

namespace tempered {

// Base for all domain errors raised by the library. CLI maps these to exit
// code 1; parse/usage problems map to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct DisconnectedError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct NonIntegralError : Error {
  using Error::Error;
};
struct NonCommutingError : Error {
  using Error::Error;
};
struct NotExactError : Error {
  using Error::Error;
};
struct ConditionKError : Error {
  using Error::Error;
};
struct NotLocallyClosedError : Error {
  using Error::Error;
};
struct NotNestedError : Error {
  using Error::Error;
};
struct ShapeMismatchError : Error {
  using Error::Error;
};
struct UnknownSignatureError : Error {
  using Error::Error;
};

}  // namespace tempered
