#pragma once

#include <stdexcept>
#include <string>

namespace hueon {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A slot in the requested window is already owned by another lightpath.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// A spectrum window does not fit inside the fiber's slot range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class UnknownDemand : public Error {
 public:
  using Error::Error;
};

class InvalidBandwidth : public Error {
 public:
  using Error::Error;
};

/// An OSNR provider has no data for the requested link or path.
class MissingEntry : public Error {
 public:
  using Error::Error;
};

class EmptyRoute : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Malformed topology (unknown node, duplicate link, bad distance, ...).
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// A fiber strategy was requested in a traffic mode it does not support.
class StrategyModeError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hueon
