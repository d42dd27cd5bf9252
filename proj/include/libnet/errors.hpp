#pragma once

#include <stdexcept>
#include <string>

namespace libnet
{
//---------------------------------------------------------------------------//
/*!
 * Input outside the mathematical domain of an operation.
 *
 * The message names the violated rule, e.g. "fov out of range".
 */
class DomainError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//---------------------------------------------------------------------------//
/*!
 * An iterative numerical method stopped before meeting its tolerance.
 */
class ConvergenceError : public std::runtime_error
{
  public:
    ConvergenceError(std::string const& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error)
    {
    }

    //! Best error estimate reached before giving up
    double achieved_error() const noexcept { return achieved_error_; }

  private:
    double achieved_error_;
};

//---------------------------------------------------------------------------//
//! Requested sample would exceed the configured point budget.
class CapacityError : public std::length_error
{
  public:
    using std::length_error::length_error;
};

}  // namespace libnet
