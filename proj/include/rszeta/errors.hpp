#pragma once

#include <stdexcept>
#include <string>

namespace rszeta {

// Caller violated a precondition (bad sizes, mismatched contexts, unsupported case).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Series inversion requested for a series whose constant term is not 1.
class InversionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Exact evaluation hit a zero divisor or a non-integral exponent.
class EvaluationError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A combinatorial construction produced an inconsistent coordinate pattern.
class StructureError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// An internal consistency assertion fired during evaluation.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace rszeta
