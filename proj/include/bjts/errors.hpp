#pragma once

#include <stdexcept>
#include <string>

namespace bjts {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Problems with the caller's data, flags or specification. The CLI maps these to exit code 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// Numerical failures on otherwise well-formed input. The CLI maps these to exit code 2.
class ComputationError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class IngestionError : public InputError {
public:
    using InputError::InputError;
};

class LengthError : public InputError {
public:
    using InputError::InputError;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class UnsupportedFrequencyError : public InputError {
public:
    using InputError::InputError;
};

class SpecificationError : public InputError {
public:
    using InputError::InputError;
};

class IntegrationError : public InputError {
public:
    using InputError::InputError;
};

class HorizonError : public InputError {
public:
    using InputError::InputError;
};

class IncomparableCandidatesError : public InputError {
public:
    using InputError::InputError;
};

class InvalidConfigError : public InputError {
public:
    using InputError::InputError;
};

class DegenerateSeriesError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class NumericalDegeneracyError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class CollinearityError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class DegenerateFitError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class InfeasibleSpecError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

}  // namespace bjts
