#pragma once

#include <stdexcept>
#include <string>

namespace blockcrit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments or violated preconditions.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A numerical method could not meet its tolerance or a sanity guard tripped.
/// Carries the best estimate available at the time of failure.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double best_estimate)
        : Error(what), best_estimate_(best_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }

private:
    double best_estimate_;
};

/// File-system or on-disk format problems.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace blockcrit
