#pragma once

#include <stdexcept>
#include <string>

namespace thetafay {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different genera or have incompatible shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A genus outside the range an operation supports (enumeration, size guards).
class GenusError : public Error {
public:
    using Error::Error;
};

/// Two characteristics of different parity where equal parity is required.
class ParityError : public Error {
public:
    using Error::Error;
};

/// Matrix over F2 is singular or fails the symplectic check.
class AlgebraError : public Error {
public:
    using Error::Error;
};

/// An exact computation contradicted the declared two-eigenvalue spectrum.
class SpectrumViolation : public Error {
public:
    using Error::Error;
};

/// Floating-point evaluation could not meet its contract (radius cap, validation).
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace thetafay
