#pragma once

#include <stdexcept>
#include <string>

namespace monofold {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible dimensions or shapes.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// A matrix required to be invertible is singular (or has no exact
/// inverse in the integer kind).
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

/// Axis composition attempted between elements whose off-axis
/// exponents differ.
class AxisMismatch : public Error {
 public:
  explicit AxisMismatch(const std::string& what) : Error(what) {}
};

/// Axis composition attempted between elements of different generator
/// families.
class FamilyMismatch : public Error {
 public:
  explicit FamilyMismatch(const std::string& what) : Error(what) {}
};

/// A grid fold was requested for a family whose generators do not
/// commute; the result would depend on reduction order.
class NonCommutingFamily : public Error {
 public:
  explicit NonCommutingFamily(const std::string& what) : Error(what) {}
};

/// A grid reduction schedule violates a merge precondition or does not
/// reduce the grid to a single element.
class InvalidSchedule : public Error {
 public:
  explicit InvalidSchedule(const std::string& what) : Error(what) {}
};

/// Generic precondition violation (empty input, size not a power of
/// two, out-of-range index, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace monofold
