#include "homtop/snf.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace homtop {

void IntSparseMatrix::add_entry(std::size_t row, std::size_t col, bigint value) {
    if (row >= rows_ || col >= cols_) throw shape_error("matrix entry out of bounds");
    if (value == 0) return;
    entries_.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col),
                        std::move(value)});
}

void IntSparseMatrix::seal() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    std::vector<Entry> out;
    for (std::size_t i = 0; i < entries_.size();) {
        std::size_t j = i;
        bigint v = 0;
        while (j < entries_.size() && entries_[j].row == entries_[i].row &&
               entries_[j].col == entries_[i].col)
            v += entries_[j++].value;
        if (v != 0) out.push_back({entries_[i].row, entries_[i].col, std::move(v)});
        i = j;
    }
    entries_ = std::move(out);
}

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Working form: rows as sorted (col, value) vectors plus a per-column list of
// candidate rows (maintained lazily; stale ids are re-checked on use).
struct Workspace {
    std::vector<std::vector<std::pair<std::uint32_t, bigint>>> row;
    std::vector<std::vector<std::uint32_t>> col_rows;
    std::vector<std::size_t> col_count; // approximate nnz per column
    std::vector<char> row_done, col_done;

    bigint* find(std::uint32_t r, std::uint32_t c) {
        auto& rw = row[r];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& e, std::uint32_t x) { return e.first < x; });
        if (it == rw.end() || it->first != c) return nullptr;
        return &it->second;
    }

    // row[dst] += q * row[src]
    void add_row_multiple(std::uint32_t dst, std::uint32_t src, const bigint& q) {
        if (q == 0) return;
        const auto& a = row[src];
        const auto& b = row[dst];
        std::vector<std::pair<std::uint32_t, bigint>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < b.size() && j < a.size()) {
            if (b[i].first < a[j].first)
                out.push_back(b[i++]);
            else if (a[j].first < b[i].first) {
                bigint v = q * a[j].second;
                out.emplace_back(a[j].first, std::move(v));
                note_col(a[j].first, dst);
                ++j;
            } else {
                bigint v = b[i].second + q * a[j].second;
                if (v != 0) out.emplace_back(b[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        for (; i < b.size(); ++i) out.push_back(b[i]);
        for (; j < a.size(); ++j) {
            bigint v = q * a[j].second;
            out.emplace_back(a[j].first, std::move(v));
            note_col(a[j].first, dst);
        }
        row[dst] = std::move(out);
    }

    void note_col(std::uint32_t c, std::uint32_t r) {
        col_rows[c].push_back(r);
        ++col_count[c];
    }

    // Active rows with a nonzero entry in column c (compacts the lazy list).
    std::vector<std::uint32_t> active_rows_in_col(std::uint32_t c) {
        auto& cand = col_rows[c];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<std::uint32_t> live;
        for (auto r : cand)
            if (!row_done[r] && find(r, c)) live.push_back(r);
        cand = live;
        col_count[c] = live.size();
        return live;
    }
};

} // namespace

std::vector<bigint> smith_normal_form(const IntSparseMatrix& m) {
    Workspace ws;
    ws.row.resize(m.rows());
    ws.col_rows.resize(m.cols());
    ws.col_count.assign(m.cols(), 0);
    ws.row_done.assign(m.rows(), 0);
    ws.col_done.assign(m.cols(), 0);
    {
        auto sorted = m.entries();
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
        for (auto& e : sorted) {
            ws.row[e.row].emplace_back(e.col, e.value);
            ws.note_col(e.col, e.row);
        }
    }

    std::vector<bigint> diagonal;

    for (;;) {
        // Pivot column: smallest live count (cheap Markowitz proxy).
        long long pc = -1;
        std::size_t best = SIZE_MAX;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!ws.col_done[c] && ws.col_count[c] > 0 && ws.col_count[c] < best) {
                auto live = ws.active_rows_in_col(static_cast<std::uint32_t>(c));
                if (live.empty()) continue;
                if (live.size() < best) {
                    best = live.size();
                    pc = static_cast<long long>(c);
                    if (best == 1) break;
                }
            }
        if (pc < 0) break;
        auto c = static_cast<std::uint32_t>(pc);

        // Clear column c, then row r. Remainders shrink the pivot, so the
        // inner loop terminates.
        for (;;) {
            auto live = ws.active_rows_in_col(c);
            if (live.empty()) break; // column vanished; repick
            std::uint32_t r = live[0];
            bigint pv = abs(*ws.find(r, c));
            for (auto cand : live) {
                bigint v = abs(*ws.find(cand, c));
                if (v < pv || (v == pv && ws.row[cand].size() < ws.row[r].size())) {
                    pv = v;
                    r = cand;
                }
            }
            const bigint p = *ws.find(r, c);

            bool remainder = false;
            for (auto other : live) {
                if (other == r) continue;
                bigint v = *ws.find(other, c);
                bigint q = v / p; // truncated division; remainder handled next round
                ws.add_row_multiple(other, r, -q);
                if (ws.find(other, c)) remainder = true;
            }
            if (remainder) continue;

            // Column now has the single entry (r, c); clear the rest of row r
            // by column operations, which touch row r only.
            bool row_remainder = false;
            auto& rw = ws.row[r];
            for (auto& e : rw) {
                if (e.first == c) continue;
                bigint q = e.second / p;
                e.second -= q * p;
                if (e.second != 0) row_remainder = true;
            }
            rw.erase(std::remove_if(rw.begin(), rw.end(),
                                    [](const auto& e) { return e.second == 0; }),
                     rw.end());
            if (row_remainder) {
                // pick the smallest remaining entry of row r as the new pivot
                std::uint32_t nc = c;
                bigint nv = abs(p);
                for (auto& e : rw)
                    if (abs(e.second) < nv) {
                        nv = abs(e.second);
                        nc = e.first;
                    }
                c = nc;
                continue;
            }

            diagonal.push_back(abs(p));
            ws.row_done[r] = 1;
            ws.col_done[c] = 1;
            ws.row[r].clear();
            break;
        }
    }

    // Normalize the diagonal into a divisibility chain (gcd/lcm exchanges).
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diagonal.size(); ++i)
            for (std::size_t j = i + 1; j < diagonal.size(); ++j)
                if (diagonal[j] % diagonal[i] != 0) {
                    bigint g = gcd(diagonal[i], diagonal[j]);
                    bigint l = diagonal[i] / g * diagonal[j];
                    diagonal[i] = g;
                    diagonal[j] = l;
                    changed = true;
                }
    }
    std::sort(diagonal.begin(), diagonal.end());
    return diagonal;
}

} // namespace homtop
