#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leipnik {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument/constructor contract violation (bad r, nonpositive mass, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Mode amplitude or velocity is exactly zero where a spread is needed.
class ZeroAmplitude : public Error {
public:
    using Error::Error;
};

// Damped oscillator with omega0 <= gamma/2 has no oscillatory closed form.
class OverdampedUnsupported : public Error {
public:
    using Error::Error;
};

// User-supplied model coefficient returned a non-finite value, threw,
// or produced a nonpositive mass.
class ModelEvaluationError : public Error {
public:
    using Error::Error;
};

// Integrated mode no longer satisfies the normalization m(u du* - du u*) = i
// within the configured alarm threshold.
class WronskianDriftExceeded : public Error {
public:
    using Error::Error;
};

// A state handed to an identity that requires exact normalization fails it.
class WronskianViolation : public Error {
public:
    using Error::Error;
};

// Frequency-dependent bound requested where omega(t)^2 <= 0.
class FrequencyZero : public Error {
public:
    using Error::Error;
};

// Probability density integral differs from 1 beyond tolerance.
class UnnormalizedDensity : public Error {
public:
    using Error::Error;
};

// Closed-form identity evaluated outside its domain of validity.
class DomainError : public Error {
public:
    using Error::Error;
};

// Expression evaluation produced NaN or infinity.
class NonFiniteResult : public Error {
public:
    using Error::Error;
};

// Expression references a parameter the caller did not bind.
class UnboundParameter : public Error {
public:
    using Error::Error;
};

// Call to a function name outside the supported set.
class UnknownIdentifier : public Error {
public:
    UnknownIdentifier(const std::string& msg, std::size_t offset)
        : Error(msg), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Malformed expression text; offset is the byte position of the problem.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Scenario file is malformed: unknown key, missing key, wrong type, bad grid.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Adaptive stepper could not meet tolerances (step size underflow).
class IntegrationError : public Error {
public:
    using Error::Error;
};

}  // namespace leipnik
