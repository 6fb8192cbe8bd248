#pragma once

#include <stdexcept>
#include <string>

namespace tg {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument values: non-prime modulus, singular curve, malformed input, ...
// The caller violated a precondition; the computation never started.
struct ArgumentError : Error {
    using Error::Error;
};

// exact_divide called on a non-multiple.  Carries the offending remainder in text
// form so the message is actionable without a debugger.
struct InexactDivisionError : Error {
    using Error::Error;
};

// u = a*y + b*x + c fails the admissibility conditions (a != 0 and 2b - a1*a != 0),
// so u does not separate the relevant torsion points.
struct InadmissibleUError : Error {
    using Error::Error;
};

// Iterative root finding failed to converge within its iteration cap.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace tg
