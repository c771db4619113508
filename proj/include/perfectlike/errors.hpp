#ifndef PERFECTLIKE_ERRORS_HPP
#define PERFECTLIKE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perfectlike {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments: wrong q, mismatched lengths, out-of-range symbols, ...
struct parameter_error : error {
    using error::error;
};

// An operation needed to enumerate more vertices than the configured budget,
// or required an explicit code but got an oracle one.
struct budget_error : error {
    using error::error;
};

// Input violates the semantics of the operation (e.g. multiset passed where
// a plain set is required).
struct semantics_error : error {
    using error::error;
};

// Operation produced or received an empty code where a nonempty one is needed.
struct empty_code_error : error {
    using error::error;
};

// Minimum distance requested for an empty or singleton code.
struct undefined_distance_error : error {
    using error::error;
};

// Text-format parse failure; message carries the line number.
struct parse_error : error {
    using error::error;
};

} // namespace perfectlike

#endif
