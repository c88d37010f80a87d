#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data: unparsable files, out-of-range vertices or colours, or a
/// quiver that violates the coloured-quiver invariants where a valid one is
/// required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The arguments are well formed but outside the operation's domain
/// (non-simple quiver, non-member of the A_n class, a vertex set that is not a
/// clique, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration ran past its configured budget.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}

  /// Size of the partial result (or of the refused search space).
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

/// A computed result contradicts a property the algorithms rely on. Seeing one
/// of these means a bug, or a counterexample to the classification.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cqm
