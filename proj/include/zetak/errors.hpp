#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetak {

// Base class for every numeric failure the library can signal. Callers that
// only care about "did it work" catch this; the CLI maps it to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleAtOne : public Error {
public:
    using Error::Error;
};

class PoleInsideRing : public Error {
public:
    using Error::Error;
};

class PoleAtNonPositiveInteger : public Error {
public:
    using Error::Error;
};

// Raised when the internal error estimate of an evaluation exceeds the
// requested tolerance. Never returns junk silently.
class PrecisionLoss : public Error {
public:
    PrecisionLoss(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

class PoleOfF : public Error {
public:
    using Error::Error;
};

class RangeOverflow : public Error {
public:
    using Error::Error;
};

class NearPole : public Error {
public:
    using Error::Error;
};

class NearZeroDenominator : public Error {
public:
    using Error::Error;
};

// A tracked path passed too close to a zero of the tracked function.
// Carries the offending sample so callers can perturb and retry.
class ZeroOnPath : public Error {
public:
    ZeroOnPath(const std::string& what, std::complex<double> where, double modulus)
        : Error(what), where_(where), modulus_(modulus) {}
    std::complex<double> where() const { return where_; }
    double modulus() const { return modulus_; }

private:
    std::complex<double> where_;
    double modulus_;
};

class MaxSubdivision : public Error {
public:
    using Error::Error;
};

class ZeroOnBoundary : public Error {
public:
    ZeroOnBoundary(const std::string& what, std::complex<double> where)
        : Error(what), where_(where) {}
    std::complex<double> where() const { return where_; }

private:
    std::complex<double> where_;
};

class NonIntegerWinding : public Error {
public:
    NonIntegerWinding(const std::string& what, double winding)
        : Error(what), winding_(winding) {}
    double winding() const { return winding_; }

private:
    double winding_;
};

class SubdivisionLimit : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace zetak
