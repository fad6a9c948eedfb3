#pragma once

#include <stdexcept>
#include <string>

namespace geogrowth {

// Base of every error raised by the library.  The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A method was asked to run on a graph outside its hypotheses (not
// link-regular, has triangles, non-constant numbering, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A configured budget (word count, closure size, length limit) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Broken caller contract: bad clique, subclique not contained, bad generator.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Something that must hold by construction did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ZeroDenominatorError : public Error {
 public:
  ZeroDenominatorError() : Error("zero denominator") {}
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("singular matrix") {}
};

class NoExpansionError : public Error {
 public:
  NoExpansionError() : Error("no power-series expansion at origin") {}
};

}  // namespace geogrowth
