#pragma once

#include <stdexcept>
#include <string>

namespace tubal {

// Root of every error raised by the library. Subclasses identify the failure
// class so callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Extents do not line up (t-product inner size, concatenation, masks, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-finite data, a ratio outside its range, a zero reference tensor.
class ValueError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Requested rank / oversampling is incompatible with the tensor extents.
class RankError : public Error {
 public:
  using Error::Error;
};

// An inverse DFT produced a significant imaginary part.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

// A dense factorization failed on some Fourier slice.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Oracle paths refuse inputs that would materialize huge block-circulant matrices.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed tensor or image file contents.
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace tubal
