#pragma once

#include <stdexcept>
#include <string>

namespace nbrprof {

// Caller passed arguments that violate an operation's preconditions
// (bad probability, mismatched lengths, size bound exceeded, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input data is malformed or inconsistent with the graph it refers to
// (parse errors, out-of-range vertex ids, self-loops, empty graphs, I/O).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nbrprof
