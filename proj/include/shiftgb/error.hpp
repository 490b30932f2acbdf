#pragma once

#include <stdexcept>
#include <string>

namespace shiftgb {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic between scalars of different fields.
struct domain_mismatch_error : error {
    explicit domain_mismatch_error(const std::string& msg) : error(msg) {}
};

struct division_by_zero_error : error {
    explicit division_by_zero_error(const std::string& msg) : error(msg) {}
};

// Mismatched shapes, variable counts, orders or out-of-range indices.
struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

// Bad construction values: non-prime modulus, malformed text, wrong degree.
struct value_error : error {
    explicit value_error(const std::string& msg) : error(msg) {}
};

// A configured cap (minor count, determinant side) was exceeded.
struct resource_limit_error : error {
    explicit resource_limit_error(const std::string& msg) : error(msg) {}
};

// The input matrix does not have the required rank.
struct rank_error : error {
    explicit rank_error(const std::string& msg) : error(msg) {}
};

// A search (grid sweep or randomized attempts) ended without a witness.
struct search_exhausted_error : error {
    explicit search_exhausted_error(const std::string& msg) : error(msg) {}
};

} // namespace shiftgb
