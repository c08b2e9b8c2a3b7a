/**
 * @file errors.h
 * @brief Exception types raised by the conversion pipeline.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace chromanote {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bytes could not be decoded as an image.
class MalformedImage : public Error {
 public:
  using Error::Error;
};

/// Bytes are a recognizable image container that is not PNG or JPEG.
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class TooManySegments : public Error {
 public:
  using Error::Error;
};

/// A harmony candidate had fewer than 2 or more than 4 members.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Every pixel of a segment was removed by the filter.
class EmptySegment : public Error {
 public:
  using Error::Error;
};

class EmptyBin : public Error {
 public:
  using Error::Error;
};

class ValueTooLarge : public Error {
 public:
  using Error::Error;
};

class NoteOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration value or mapping table.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class WriteFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace chromanote
