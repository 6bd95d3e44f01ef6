#pragma once

#include <stdexcept>
#include <string>

namespace adet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An enumeration over S_m (or a related set) would exceed the configured cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

class SizeMismatch : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class NotInH : public Error {
public:
  using Error::Error;
};

class EmptyInvariantSpace : public Error {
public:
  using Error::Error;
};

class DivisionByZeroPochhammer : public Error {
public:
  using Error::Error;
};

class SpectralRadiusViolation : public Error {
public:
  using Error::Error;
};

class ZeroAlpha : public Error {
public:
  using Error::Error;
};

class UnknownSuite : public Error {
public:
  using Error::Error;
};

} // namespace adet
