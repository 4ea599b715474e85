#pragma once

#include <stdexcept>
#include <string>

namespace vekua {

// Base class for all numerical-engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Attempted inversion of zero or of a bicomplex zero divisor.
class ZeroDivisorOrZero : public Error {
public:
    explicit ZeroDivisorOrZero(const std::string& what) : Error(what) {}
};

// Vec(conj(F)G) vanished (or is numerically a zero divisor) at an
// evaluation point, so the pair cannot generate there.
class DegeneratePair : public Error {
public:
    explicit DegeneratePair(const std::string& what) : Error(what) {}
};

// Finite-difference Richardson estimate exceeded the requested tolerance.
class StepTooLarge : public Error {
public:
    explicit StepTooLarge(const std::string& what) : Error(what) {}
};

// Node doubling hit the cap before the quadrature settled.
class QuadratureNotConverged : public Error {
public:
    explicit QuadratureNotConverged(const std::string& what) : Error(what) {}
};

// The similarity-principle hypothesis b(z) not in S u {0} failed on the grid.
class ZeroDivisorCoefficient : public Error {
public:
    explicit ZeroDivisorCoefficient(const std::string& what) : Error(what) {}
};

// A particular solution of -f0'' + nu f0 = 0 vanished inside the domain.
class SolutionVanishes : public Error {
public:
    explicit SolutionVanishes(const std::string& what) : Error(what) {}
};

// Malformed or incomplete run configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace vekua
