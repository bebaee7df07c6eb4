#pragma once

#include <stdexcept>
#include <string>

namespace pointdec {

// Malformed or inconsistent input (unknown ids, broken invariants, bad JSON).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exhaustive search was asked to exceed its configured size cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// The solver detected that the supplied decomposition cannot be valid
// (e.g. a per-cell graph failed the chordality check).
class InvalidDecompositionError : public std::runtime_error {
public:
    explicit InvalidDecompositionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pointdec
