#pragma once

#include <stdexcept>
#include <string>

namespace wilf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotPrime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class MalformedD : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonInvertibleConstantTerm : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class TooLarge : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A period search ran past its step cap without returning to the start state.
class PeriodNotFound : public Error {
 public:
  using Error::Error;
};

class CheckpointIOError : public Error {
 public:
  using Error::Error;
};

class NoStabilization : public Error {
 public:
  using Error::Error;
};

}  // namespace wilf
