#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rigidity {

// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or ill-typed input: bad dimensions, unparsable text, schema
// violations, operands outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exponent vector, coefficient vector, or matrix whose length does not
// match the ambient ring dimension.
class DimensionMismatchError : public InputError {
 public:
  using InputError::InputError;
};

// Operands built over different ring specs.
class SpecMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration request whose candidate box exceeds the configured ceiling.
// The operation refuses instead of silently truncating the search.
class SearchSpaceError : public Error {
 public:
  SearchSpaceError(const boost::multiprecision::cpp_int& size,
                   const boost::multiprecision::cpp_int& ceiling)
      : Error("search space of " + size.str() +
              " candidates exceeds the ceiling of " + ceiling.str()),
        size_(size) {}

  const boost::multiprecision::cpp_int& computed_size() const { return size_; }

 private:
  boost::multiprecision::cpp_int size_;
};

// A map that was required to be a graded automorphism is not one.
class NotAutomorphismError : public Error {
 public:
  using Error::Error;
};

// A certified identity failed to verify. Indicates a bug in this library,
// never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rigidity
