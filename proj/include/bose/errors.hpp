#pragma once

#include <stdexcept>
#include <string>

namespace bose {

// Root of every error raised by the library. The CLI maps subclasses onto
// exit codes (domain-like errors -> 2, convergence -> 3, config -> 4).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// A mathematically divergent quantity, e.g. g_nu(0) for nu <= 1.
class DivergentValue : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// d <= sigma: condensation at constant density only happens at T = 0.
// This is a regime answer rather than a malfunction.
class ZeroTemperatureBEC : public Error {
public:
    using Error::Error;
};

// Isobar solver asked for a state below T_c(P).
class CondensedRegion : public Error {
public:
    using Error::Error;
};

// Landau expression evaluated outside its real branch (Psi^2 + (d/sigma) t < 0).
class BranchError : public Error {
public:
    using Error::Error;
};

// Landau form requested outside sigma < d < 2 sigma.
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace bose
