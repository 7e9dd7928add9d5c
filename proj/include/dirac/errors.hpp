#pragma once

#include <stdexcept>
#include <string>

namespace dirac {

/// Vectors of different length met in one operation.
class dimension_mismatch : public std::invalid_argument {
public:
    dimension_mismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Reflection requested through the zero vector.
class zero_root : public std::invalid_argument {
public:
    zero_root() : std::invalid_argument("reflection through the zero vector") {}
};

/// Case parameters outside the admissible range, or an unknown case name.
class invalid_case : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual rational, vector or table.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The Dirac index only exists when rank(G) = rank(K).
class index_undefined : public std::logic_error {
public:
    index_undefined() : std::logic_error("Dirac index undefined (unequal rank)") {}
};

/// A structural invariant of the computation failed to hold.
class invariant_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dirac
