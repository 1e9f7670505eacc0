#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homtop {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid generator parameters, out-of-range arguments, oversized universes.
struct parameter_error : error {
    using error::error;
};

// Mismatched matrix/vector dimensions or a graph of the wrong shape.
struct shape_error : error {
    using error::error;
};

// A size budget was exhausted; `count` is the size reached when it tripped.
struct budget_error : error {
    std::size_t count;
    budget_error(const std::string& what, std::size_t count_)
        : error(what), count(count_) {}
};

// An involution that was required to act freely has a fixed cell.
struct freeness_error : error {
    using error::error;
};

// A referenced vertex or cell does not exist in the complex.
struct lookup_error : error {
    using error::error;
};

// Internal consistency check failed; indicates a defect, not bad input.
struct defect_error : error {
    using error::error;
};

// Malformed graph file; `line` is 1-based.
struct parse_error : error {
    int line;
    parse_error(const std::string& what, int line_) : error(what), line(line_) {}
};

} // namespace homtop
