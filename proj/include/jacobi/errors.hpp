#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponent left the fixed q- or p-grid.
class GridError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

/// A windowed expansion was used where full p-support is required, or
/// window arithmetic produced an empty validity region.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Not enough known coefficients to answer the question asked.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// An exact linear system has no solution; `row` is the first offending row
/// and `q_order` the integer q-order whose system failed, when there is one.
class InconsistentSystem : public Error {
 public:
  InconsistentSystem(const std::string& what, std::size_t row,
                     std::optional<long> q_order = std::nullopt)
      : Error(what), row_(row), q_order_(q_order) {}
  std::size_t row() const { return row_; }
  std::optional<long> q_order() const { return q_order_; }

 private:
  std::size_t row_;
  std::optional<long> q_order_;
};

/// Two independent computations of the same object disagree.
class RouteMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace jacobi
