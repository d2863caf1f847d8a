#pragma once

#include <stdexcept>
#include <string>

namespace ncqm {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A Γ-function or hypergeometric denominator hit a pole.
class PoleError : public Error
{
  public:
    using Error::Error;
};

/// A non-terminating series exceeded the iteration cap.
class DivergenceError : public Error
{
  public:
    using Error::Error;
};

/// Index or degree outside a precomputed table.
class RangeError : public Error
{
  public:
    using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error
{
  public:
    using Error::Error;
};

/// Requested closed form does not match the energy regime.
class RegimeError : public Error
{
  public:
    using Error::Error;
};

/// A series was outside its monitored convergence region.
class ConvergenceError : public Error
{
  public:
    using Error::Error;
};

/// Root bracket did not contain a sign change.
class NoRootError : public Error
{
  public:
    using Error::Error;
};

/// Constants file missing or malformed.
class ConfigError : public Error
{
  public:
    using Error::Error;
};

/// Leading coefficient of a level recurrence vanished.
class BreakdownError : public Error
{
  public:
    BreakdownError(std::string const& what, unsigned level)
        : Error(what + " (level " + std::to_string(level) + ")"), level_(level)
    {
    }

    unsigned level() const { return level_; }

  private:
    unsigned level_;
};

}  // namespace ncqm
