#pragma once

#include <stdexcept>
#include <string>

namespace awgshuffle {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index, dimension, or radix pattern outside its allowed range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A (port, wavelength) pair that routes past the last physical port.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Channel count above the configured safety cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed document; the message starts with the JSON path of the fault.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Well-formed document whose contents contradict its own parameters.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace awgshuffle
