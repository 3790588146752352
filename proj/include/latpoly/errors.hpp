#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latpoly {

/** Base class for every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Mismatched vector lengths, non-square input, wrong intrinsic dimension. */
class DimensionError : public Error {
 public:
  using Error::Error;
};

/** A parameter outside its documented range (negative order, zero scale, ...). */
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyPolytopeError : public Error {
 public:
  using Error::Error;
};

class UnboundedPolytopeError : public Error {
 public:
  using Error::Error;
};

/** An H-description whose vertices are not all integral. */
class NonLatticeVertexError : public Error {
 public:
  using Error::Error;
};

class NotAVertexError : public Error {
 public:
  using Error::Error;
};

class NotAFaceError : public Error {
 public:
  using Error::Error;
};

class NonSmoothError : public Error {
 public:
  using Error::Error;
};

class InvalidBlowUpDepth : public Error {
 public:
  using Error::Error;
};

/** Every monomial of a configuration vanishes (or has a pole) at the point. */
class PointNotInDomain : public Error {
 public:
  using Error::Error;
};

/** The configuration is not k-jet spanned at the general point. */
class GaussMapUndefined : public Error {
 public:
  using Error::Error;
};

/** Lower Seshadri bound exceeded the upper bound; always a bug. */
class InconsistentBoundsError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/** A classification entry failed validation; carries the entry index. */
class ValidationError : public Error {
 public:
  ValidationError(std::size_t index, const std::string& what)
      : Error("entry " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace latpoly
