#pragma once

#include <stdexcept>
#include <string>

namespace zinbiel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes, dimensions or degrees that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input: scalars, algebra files, builtin names.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace zinbiel
