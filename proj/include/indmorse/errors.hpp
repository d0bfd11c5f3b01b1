#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace indmorse {

// Malformed arguments or violated preconditions (CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested computation exceeds a documented size gate.
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Some recursion stage has no isolated vertex, is not complete and has no
// simplicial vertex (CLI exit code 3).
class UnsupportedGraphError : public std::runtime_error {
public:
    UnsupportedGraphError(const std::string& what, std::vector<int> offending)
        : std::runtime_error(what), offending_(std::move(offending)) {}

    // Original vertex ids of the induced subgraph that blocked the recursion.
    const std::vector<int>& offending_vertices() const noexcept { return offending_; }

private:
    std::vector<int> offending_;
};

// An internal consistency check failed (CLI exit code 1).
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace indmorse
