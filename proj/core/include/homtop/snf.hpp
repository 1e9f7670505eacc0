#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homtop/errors.hpp"

namespace homtop {

using bigint = boost::multiprecision::cpp_int;

// Sparse integer matrix given by (row, col, value) triples.
// No duplicate positions, no explicit zeros once sealed.
class IntSparseMatrix {
public:
    struct Entry {
        std::uint32_t row, col;
        bigint value;
    };

    IntSparseMatrix() = default;
    IntSparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add_entry(std::size_t row, std::size_t col, bigint value);
    // Merges duplicates and drops zeros.
    void seal();

    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Entry> entries_;
};

// Invariant factors d_1 | d_2 | ... (positive, nonzero). The rank over the
// rationals equals the number of factors returned.
std::vector<bigint> smith_normal_form(const IntSparseMatrix& m);

} // namespace homtop
