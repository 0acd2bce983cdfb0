#pragma once

#include <stdexcept>
#include <string>

namespace inoue {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different scalar contexts.
class ContextError : public Error {
 public:
  using Error::Error;
};

// Chart bookkeeping failures (non-adjacent transitions, mismatched sources).
class ChartError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace inoue
