#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// A constructed value failed one of its structural invariants
/// (non-Hermitian density matrix, trace != 1, negative spectrum, ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its contract.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Subsystem index out of range or otherwise not addressable.
class invalid_subsystem_error : public precondition_error {
public:
    explicit invalid_subsystem_error(const std::string& what) : precondition_error(what) {}
};

/// Operation requires a qubit (or other fixed dimension) and got something else.
class unsupported_dimension_error : public precondition_error {
public:
    explicit unsupported_dimension_error(const std::string& what) : precondition_error(what) {}
};

/// Observable not usable here (degenerate spectrum, dimension mismatch, ...).
class unsupported_observable_error : public precondition_error {
public:
    explicit unsupported_observable_error(const std::string& what) : precondition_error(what) {}
};

} // namespace qcorr
