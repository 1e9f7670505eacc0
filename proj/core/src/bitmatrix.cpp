#include "homtop/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace homtop {

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) throw shape_error("bit vector length mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

bool BitVector::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

long long BitVector::highest_set() const {
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i]) return static_cast<long long>(i * 64 + 63 - std::countl_zero(words_[i]));
    return -1;
}

std::vector<std::uint32_t> BitVector::set_indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

BitVector BitVector::from_indices(std::size_t size, const std::vector<std::uint32_t>& indices) {
    BitVector v(size);
    for (auto i : indices) v.flip(i);
    return v;
}

std::size_t SparseBitMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : col_) n += c.size();
    return n;
}

void SparseBitMatrix::add_entry(std::size_t row, std::size_t col) {
    if (row >= rows_ || col >= cols_) throw shape_error("matrix entry out of bounds");
    col_[col].push_back(static_cast<std::uint32_t>(row));
    sealed_ = false;
}

void SparseBitMatrix::seal() {
    for (auto& c : col_) {
        std::sort(c.begin(), c.end());
        // cancel duplicate pairs mod 2
        std::vector<std::uint32_t> out;
        for (std::size_t i = 0; i < c.size();) {
            std::size_t j = i;
            while (j < c.size() && c[j] == c[i]) ++j;
            if ((j - i) & 1) out.push_back(c[i]);
            i = j;
        }
        c = std::move(out);
    }
    sealed_ = true;
}

bool SparseBitMatrix::get(std::size_t row, std::size_t col) const {
    const auto& c = col_[col];
    return std::binary_search(c.begin(), c.end(), static_cast<std::uint32_t>(row));
}

SparseBitMatrix SparseBitMatrix::transpose() const {
    SparseBitMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (auto i : col_[j]) t.col_[i].push_back(static_cast<std::uint32_t>(j));
    t.seal();
    return t;
}

BitVector SparseBitMatrix::apply(const BitVector& x) const {
    if (x.size() != cols_) throw shape_error("vector length does not match column count");
    BitVector y(rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        if (x.test(j))
            for (auto i : col_[j]) y.flip(i);
    return y;
}

SparseBitMatrix SparseBitMatrix::identity(std::size_t n) {
    SparseBitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.add_entry(i, i);
    m.seal();
    return m;
}

namespace {

// xor-merge of two sorted index lists, mod 2
std::vector<std::uint32_t> xor_merge(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

} // namespace

bool Gf2Reducer::add(const BitVector& v) {
    std::vector<std::uint32_t> rem = v.set_indices();
    while (!rem.empty()) {
        std::uint32_t low = rem.back();
        auto it = std::lower_bound(pivot_.begin(), pivot_.end(), std::make_pair(low, 0u));
        if (it == pivot_.end() || it->first != low) {
            pivot_.insert(it, {low, static_cast<std::uint32_t>(reduced_.size())});
            reduced_.push_back(std::move(rem));
            return true;
        }
        rem = xor_merge(rem, reduced_[it->second]);
    }
    return false;
}

bool Gf2Reducer::contains(const BitVector& v) const {
    std::vector<std::uint32_t> rem = v.set_indices();
    while (!rem.empty()) {
        std::uint32_t low = rem.back();
        auto it = std::lower_bound(pivot_.begin(), pivot_.end(), std::make_pair(low, 0u));
        if (it == pivot_.end() || it->first != low) return false;
        rem = xor_merge(rem, reduced_[it->second]);
    }
    return true;
}

Gf2Solver::Gf2Solver(const SparseBitMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), pivot_of_row_(m.rows(), -1) {
    // Left-to-right column reduction: each surviving column keeps a unique
    // highest row index. Deterministic for a fixed input.
    for (std::size_t j = 0; j < cols_; ++j) {
        std::vector<std::uint32_t> col = m.column(j);
        std::vector<std::uint32_t> combo{static_cast<std::uint32_t>(j)};
        while (!col.empty()) {
            std::uint32_t low = col.back();
            long long p = pivot_of_row_[low];
            if (p < 0) break;
            col = xor_merge(col, reduced_[static_cast<std::size_t>(p)]);
            combo = xor_merge(combo, combo_[static_cast<std::size_t>(p)]);
        }
        if (col.empty()) {
            kernel_.push_back(BitVector::from_indices(cols_, combo));
        } else {
            pivot_of_row_[col.back()] = static_cast<long long>(reduced_.size());
            reduced_.push_back(std::move(col));
            combo_.push_back(std::move(combo));
        }
    }
    rank_ = reduced_.size();
}

std::optional<BitVector> Gf2Solver::solve(const BitVector& b) const {
    if (b.size() != rows_) throw shape_error("right-hand side length does not match row count");
    std::vector<std::uint32_t> rem = b.set_indices();
    std::vector<std::uint32_t> combo;
    while (!rem.empty()) {
        std::uint32_t low = rem.back();
        long long p = pivot_of_row_[low];
        if (p < 0) return std::nullopt;
        rem = xor_merge(rem, reduced_[static_cast<std::size_t>(p)]);
        combo = xor_merge(combo, combo_[static_cast<std::size_t>(p)]);
    }
    return BitVector::from_indices(cols_, combo);
}

bool Gf2Solver::in_column_space(const BitVector& b) const {
    std::vector<std::uint32_t> rem = b.set_indices();
    while (!rem.empty()) {
        std::uint32_t low = rem.back();
        long long p = pivot_of_row_[low];
        if (p < 0) return false;
        rem = xor_merge(rem, reduced_[static_cast<std::size_t>(p)]);
    }
    return true;
}

std::size_t rank_gf2(const SparseBitMatrix& m) { return Gf2Solver(m).rank(); }

std::optional<BitVector> solve_gf2(const SparseBitMatrix& m, const BitVector& b) {
    return Gf2Solver(m).solve(b);
}

std::vector<BitVector> kernel_gf2(const SparseBitMatrix& m) {
    return Gf2Solver(m).kernel_basis();
}

} // namespace homtop
