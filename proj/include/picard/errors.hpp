#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace picard {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was asked for a value outside its domain (e.g. the affine
// image of infinity for an element that fixes infinity).
struct DomainError : Error {
  using Error::Error;
};

// A Heisenberg translation (tau, k) with k and |tau|^2 of different parity.
struct ParityError : Error {
  using Error::Error;
};

// A matrix does not have the block shape of a stabilizer element.
struct ShapeError : Error {
  using Error::Error;
};

// A matrix is not in U(3,1;Z[w]) or U(2;Z[w]).
struct NotMember : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

// A structurally malformed document (wrong JSON shape, bad integer text).
struct FormatError : Error {
  using Error::Error;
};

// A mathematical guarantee failed at runtime. Always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace picard
