#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homtop/errors.hpp"

namespace homtop {

// Packed bit vector over GF(2).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        if (value)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    bool operator==(const BitVector& other) const = default;

    bool any() const;
    std::size_t popcount() const;
    // Largest set index, or -1 if zero.
    long long highest_set() const;
    std::vector<std::uint32_t> set_indices() const;

    static BitVector from_indices(std::size_t size, const std::vector<std::uint32_t>& indices);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Sparse GF(2) matrix stored by columns (sorted row indices per column).
// Immutable once sealed; rank/solve are pure functions of the sealed matrix.
class SparseBitMatrix {
public:
    SparseBitMatrix() = default;
    SparseBitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), col_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    void add_entry(std::size_t row, std::size_t col);
    // Sorts and cancels duplicate entries mod 2.
    void seal();

    const std::vector<std::uint32_t>& column(std::size_t j) const { return col_[j]; }
    bool get(std::size_t row, std::size_t col) const;

    SparseBitMatrix transpose() const;

    // y = M x
    BitVector apply(const BitVector& x) const;

    static SparseBitMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::uint32_t>> col_;
    bool sealed_ = false;
    friend std::size_t rank_gf2(const SparseBitMatrix&);
    friend class Gf2Solver;
};

std::size_t rank_gf2(const SparseBitMatrix& m);

// Any x with M x = b, or nullopt when the system is inconsistent.
std::optional<BitVector> solve_gf2(const SparseBitMatrix& m, const BitVector& b);

// Basis of the null space {x : M x = 0}.
std::vector<BitVector> kernel_gf2(const SparseBitMatrix& m);

// Incremental independence filter: vectors are absorbed one at a time and
// tested against the span of everything absorbed so far.
class Gf2Reducer {
public:
    // True when v is independent of the current span (v is then absorbed).
    bool add(const BitVector& v);
    bool contains(const BitVector& v) const;

private:
    std::vector<std::vector<std::uint32_t>> reduced_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pivot_; // (row, index), sorted by row
};

// Reusable left-looking reduction of M's columns; answers repeated
// membership/solve queries against the column space.
class Gf2Solver {
public:
    explicit Gf2Solver(const SparseBitMatrix& m);

    std::size_t rank() const { return rank_; }
    const std::vector<BitVector>& kernel_basis() const { return kernel_; }

    // Coordinates x (over M's columns) with M x = b, or nullopt.
    std::optional<BitVector> solve(const BitVector& b) const;
    bool in_column_space(const BitVector& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0, rank_ = 0;
    // reduced_[k] is a reduced nonzero column with distinct highest set bit;
    // combo_[k] records which original columns sum to it.
    std::vector<std::vector<std::uint32_t>> reduced_;
    std::vector<std::vector<std::uint32_t>> combo_;
    std::vector<long long> pivot_of_row_; // row -> index into reduced_, or -1
    std::vector<BitVector> kernel_;
};

} // namespace homtop
