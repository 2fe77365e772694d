#ifndef MDC_ERRORS_HPP
#define MDC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdc {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or unsupported parameters (bad field order, t >= q, mismatched
/// operands, malformed input). Maps to CLI exit code 2.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& msg) : Error(msg) {}
};

/// Inversion of a non-unit (zero field element, zero-divisor residue).
class NonInvertibleError : public Error {
 public:
  explicit NonInvertibleError(const std::string& msg) : Error(msg) {}
};

/// A brute-force enumeration was asked to exceed its size guard.
class GuardError : public Error {
 public:
  explicit GuardError(const std::string& msg) : Error(msg) {}
};

/// Two distinct error multisets of equal cardinality produced the same
/// syndrome while building lookup tables. This cannot happen for valid
/// construction parameters, so table building aborts with this error.
class ConstructionSoundnessError : public Error {
 public:
  explicit ConstructionSoundnessError(const std::string& msg) : Error(msg) {}
};

/// The received multiset has a cardinality outside [n - t, n].
class DeletionRangeError : public Error {
 public:
  explicit DeletionRangeError(const std::string& msg) : Error(msg) {}
};

/// The received multiset is well-formed but not reachable from any codeword
/// (its residual syndrome is absent from the lookup table).
class UncorrectableError : public Error {
 public:
  explicit UncorrectableError(const std::string& msg) : Error(msg) {}
};

/// Exact integer arithmetic overflowed its 128-bit range.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

}  // namespace mdc

#endif  // MDC_ERRORS_HPP
