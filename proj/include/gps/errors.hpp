#pragma once

#include <stdexcept>
#include <string>

namespace gps {

/// Argument outside the mathematical domain of a function (|x| > 1, r <= 0, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// An iterative kernel (Newton, QL) exceeded its iteration budget.
class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A bound state could not be made grid-stable within the escalation ladder.
class NotConvergedError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: potential strings, state labels, golden files.
class ParseError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request that is well-formed but deliberately not supported.
class UnsupportedError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace gps
