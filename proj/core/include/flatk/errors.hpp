#pragma once

#include <stdexcept>
#include <string>

namespace flatk {

// Bad input from the caller: malformed job files, unsupported types, out-of-range
// labels. The CLI maps these to exit code 2.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation could not be completed even though the request was well formed.
// The CLI maps these to exit code 3.
class ComputeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotRational : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class NonzeroConstantTerm : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class UnsupportedType : public SpecError {
public:
    using SpecError::SpecError;
};

class NonDominant : public SpecError {
public:
    using SpecError::SpecError;
};

class NonRegularPoint : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class NonIntegralLevel : public SpecError {
public:
    using SpecError::SpecError;
};

class LabelOutOfRange : public SpecError {
public:
    using SpecError::SpecError;
};

class InsufficientSamples : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class ValidationMismatch : public ComputeError {
public:
    using ComputeError::ComputeError;
};

} // namespace flatk
