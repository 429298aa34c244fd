#pragma once

#include <stdexcept>
#include <string>

namespace tropo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotRegular : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct ZeroVector : Error {
  using Error::Error;
};

// Square matrix whose finite-entry digraph is not strongly connected.
struct NotIrreducible : Error {
  using Error::Error;
};

// No column of the product closure carries a unit diagonal entry.
struct EmptyPlus : Error {
  using Error::Error;
};

// A solver premise (trace-closure condition) does not hold for the input.
struct PremiseViolation : Error {
  using Error::Error;
};

struct GridTooLarge : Error {
  using Error::Error;
};

struct NoFeasibleNode : Error {
  using Error::Error;
};

struct DimensionUnsupported : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace tropo
