#pragma once

#include <stdexcept>
#include <string>

namespace refl {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested group exceeds the configured order bound.
class GroupTooLarge : public Error {
public:
  using Error::Error;
};

/// Closure of an exceptional generator record did not reach the declared order.
class ClosureMismatch : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Grouping reflections by hyperplane produced a non-cyclic fixator.
class NotCyclicFixator : public Error {
public:
  using Error::Error;
};

/// An eigenvalue of a finite-order element failed the root-of-unity check.
class EigenvalueNotRootOfUnity : public Error {
public:
  using Error::Error;
};

/// A subgroup action moved a hyperplane outside the supplied set.
class OrbitEscape : public Error {
public:
  using Error::Error;
};

/// The abelianization count criterion and the orbit criterion disagree.
class CriterionMismatch : public Error {
public:
  using Error::Error;
};

/// A linear-form product is not stable under the acting subgroup.
class NotStable : public Error {
public:
  using Error::Error;
};

/// Subgroup is not regenerated by the reflections it contains.
class NotReflectionSubgroup : public Error {
public:
  using Error::Error;
};

/// The natural character order f varies along a single orbit.
class OrbitInconsistent : public Error {
public:
  using Error::Error;
};

/// Malformed data or fixture file.
class DataError : public Error {
public:
  using Error::Error;
};

/// Operation called outside its stated preconditions.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace refl
