#include "homtop/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace homtop {

namespace {

int popcount_eta(std::span<const std::uint64_t> eta) {
    int c = 0;
    for (auto w : eta) c += std::popcount(w);
    return c;
}

bool lex_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

ProdComplex::ProdComplex(ComplexKind kind, Graph t, Graph g)
    : kind_(kind), t_(std::move(t)), g_(std::move(g)), tn_(t_.vertex_count()) {
    if (tn_ == 0) throw parameter_error("the source graph must have at least one vertex");
    if (g_.vertex_count() > 64)
        throw parameter_error("the target graph exceeds the 64-vertex universe");
}

int ProdComplex::cell_dim(std::span<const std::uint64_t> eta) const {
    int total = popcount_eta(eta);
    if (kind_ == ComplexKind::hom) return total - tn_;
    return total - 1;
}

std::size_t ProdComplex::total_cells() const {
    std::size_t n = 0;
    for (int d = 0; d <= dim(); ++d) n += cell_count(d);
    return n;
}

long long ProdComplex::find_cell(int d, std::span<const std::uint64_t> eta) const {
    if (d < 0 || d > dim()) return -1;
    const auto& flat = cells_[d];
    std::size_t count = flat.size() / tn_;
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        std::span<const std::uint64_t> c{flat.data() + mid * tn_, static_cast<std::size_t>(tn_)};
        if (lex_less(c, eta))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count) {
        std::span<const std::uint64_t> c{flat.data() + lo * tn_, static_cast<std::size_t>(tn_)};
        if (std::equal(c.begin(), c.end(), eta.begin())) return static_cast<long long>(lo);
    }
    return -1;
}

std::pair<int, std::size_t> ProdComplex::from_global(std::size_t id) const {
    for (int d = 0; d <= dim(); ++d)
        if (id < offset_[d] + cell_count(d)) return {d, id - offset_[d]};
    throw lookup_error("global cell id out of range");
}

std::vector<std::uint32_t> ProdComplex::faces(int d, std::size_t i) const {
    std::vector<std::uint32_t> out;
    if (d <= 0) return out;
    auto eta = cell(d, i);
    Eta face(eta.begin(), eta.end());
    int min_size = kind_ == ComplexKind::hom ? 2 : 1;
    for (int x = 0; x < tn_; ++x) {
        if (std::popcount(eta[x]) < min_size) continue;
        std::uint64_t w = eta[x];
        while (w) {
            std::uint64_t bit = w & (~w + 1);
            w &= w - 1;
            face[x] = eta[x] ^ bit;
            if (kind_ == ComplexKind::hom_plus) {
                bool all_empty = true;
                for (auto e : face)
                    if (e) {
                        all_empty = false;
                        break;
                    }
                if (all_empty) {
                    face[x] = eta[x];
                    continue;
                }
            }
            long long j = find_cell(d - 1, face);
            if (j < 0) throw defect_error("complex is not closed under faces");
            out.push_back(static_cast<std::uint32_t>(j));
            face[x] = eta[x];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> ProdComplex::all_proper_faces(int d, std::size_t i) const {
    // every entrywise-contained valid sub-assignment except the cell itself
    auto eta = cell(d, i);
    std::vector<std::size_t> out;
    Eta sub(tn_);
    std::function<void(int)> rec = [&](int x) {
        if (x == tn_) {
            std::span<const std::uint64_t> s{sub.data(), sub.size()};
            if (std::equal(s.begin(), s.end(), eta.begin())) return;
            if (kind_ == ComplexKind::hom_plus) {
                bool all_empty = true;
                for (auto e : sub)
                    if (e) all_empty = false;
                if (all_empty) return;
            }
            int sd = cell_dim(s);
            long long j = find_cell(sd, s);
            if (j < 0) throw defect_error("complex is not closed under faces");
            out.push_back(global_id(sd, static_cast<std::size_t>(j)));
            return;
        }
        // nonempty submasks (and the empty one for hom_plus)
        std::uint64_t m = eta[x];
        std::uint64_t s = m;
        for (;;) {
            if (s != 0 || kind_ == ComplexKind::hom_plus) {
                sub[x] = s;
                rec(x + 1);
            }
            if (s == 0) break;
            s = (s - 1) & m;
        }
        sub[x] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

void ProdComplex::insert_sorted(std::vector<Eta>&& raw) {
    int top = -1;
    for (const auto& e : raw) top = std::max(top, cell_dim({e.data(), e.size()}));
    cells_.assign(top + 1, {});
    std::vector<std::vector<const Eta*>> grouped(top + 1);
    for (const auto& e : raw) grouped[cell_dim({e.data(), e.size()})].push_back(&e);
    for (int d = 0; d <= top; ++d) {
        std::sort(grouped[d].begin(), grouped[d].end(),
                  [](const Eta* a, const Eta* b) { return *a < *b; });
        grouped[d].erase(std::unique(grouped[d].begin(), grouped[d].end(),
                                     [](const Eta* a, const Eta* b) { return *a == *b; }),
                         grouped[d].end());
        cells_[d].reserve(grouped[d].size() * tn_);
        for (const Eta* e : grouped[d]) cells_[d].insert(cells_[d].end(), e->begin(), e->end());
    }
    offset_.assign(top + 1 < 0 ? 0 : top + 1, 0);
    std::size_t acc = 0;
    for (int d = 0; d <= top; ++d) {
        offset_[d] = acc;
        acc += cell_count(d);
    }
}

ProdComplex ProdComplex::from_cells(ComplexKind kind, Graph t, Graph g,
                                    const std::vector<Eta>& cells) {
    ProdComplex x(kind, std::move(t), std::move(g));
    std::vector<Eta> raw = cells;
    for (const auto& e : raw)
        if (static_cast<int>(e.size()) != x.tn_)
            throw shape_error("cell entry count does not match the source graph");
    x.insert_sorted(std::move(raw));
    return x;
}

namespace {

// Shared enumeration for hom / hom_plus: backtrack over positions in index
// order, candidate lists constrained by the already-fixed neighbors.
std::vector<Eta> enumerate_cells(const Graph& t, const Graph& g, bool allow_empty,
                                 std::size_t budget) {
    int tn = t.vertex_count(), gn = g.vertex_count();
    std::uint64_t full = gn == 64 ? ~std::uint64_t(0)
                                  : ((std::uint64_t(1) << gn) - 1);
    std::vector<std::uint64_t> nbr(gn);
    for (int v = 0; v < gn; ++v) nbr[v] = g.neighbors64(v);

    std::vector<Eta> out;
    Eta cur(tn, 0);
    std::function<void(int)> rec = [&](int x) {
        if (x == tn) {
            if (allow_empty) {
                bool all_empty = true;
                for (auto w : cur)
                    if (w) all_empty = false;
                if (all_empty) return;
            }
            if (out.size() >= budget)
                throw budget_error("cell budget exhausted at " + std::to_string(out.size()) +
                                       " cells",
                                   out.size());
            out.push_back(cur);
            return;
        }
        // intersection of neighborhoods imposed by earlier nonempty neighbors
        std::uint64_t allowed = full;
        for (int y = 0; y < x; ++y) {
            if (!t.adjacent(x, y) || cur[y] == 0) continue;
            std::uint64_t w = cur[y];
            while (w) {
                allowed &= nbr[std::countr_zero(w)];
                w &= w - 1;
            }
        }
        bool x_looped = t.adjacent(x, x);
        // submasks of `allowed` in increasing numeric order
        std::vector<std::uint64_t> subs;
        std::uint64_t s = allowed;
        for (;;) {
            if (s != 0 || allow_empty) subs.push_back(s);
            if (s == 0) break;
            s = (s - 1) & allowed;
        }
        std::sort(subs.begin(), subs.end());
        for (std::uint64_t choice : subs) {
            if (x_looped && choice) {
                // the list must span a complete looped clique on itself
                bool ok = true;
                std::uint64_t w = choice;
                while (w && ok) {
                    int v = std::countr_zero(w);
                    w &= w - 1;
                    if ((nbr[v] & choice) != choice) ok = false;
                }
                if (!ok) continue;
            }
            cur[x] = choice;
            rec(x + 1);
        }
        cur[x] = 0;
    };
    rec(0);
    return out;
}

} // namespace

ProdComplex build_hom(const Graph& t, const Graph& g, std::size_t budget) {
    if (budget < 1) throw parameter_error("budget must be >= 1");
    ProdComplex x(ComplexKind::hom, t, g);
    x.insert_sorted(enumerate_cells(t, g, false, budget));
    return x;
}

ProdComplex build_hom_plus(const Graph& t, const Graph& g, std::size_t budget) {
    if (budget < 1) throw parameter_error("budget must be >= 1");
    ProdComplex x(ComplexKind::hom_plus, t, g);
    x.insert_sorted(enumerate_cells(t, g, true, budget));
    return x;
}

std::vector<int> support(const ProdComplex& x, int d, std::size_t i) {
    if (x.kind() != ComplexKind::hom_plus)
        throw shape_error("support is defined for hom_plus cells");
    auto eta = x.cell(d, i);
    std::vector<int> out;
    for (int p = 0; p < x.positions(); ++p)
        if (eta[p]) out.push_back(p);
    return out;
}

bool skeleton_determination_check(const ProdComplex& x) {
    // A minimal missing candidate is the entrywise union of two cells, so
    // checking unions of pairs is complete.
    int tn = x.positions();
    auto low_dim_subcells_present = [&](const Eta& cand) {
        // all sub-assignments of dimension 0 and 1 must be cells of x
        std::vector<int> nonempty;
        for (int p = 0; p < tn; ++p)
            if (cand[p]) nonempty.push_back(p);
        Eta sub(tn, 0);
        if (x.kind() == ComplexKind::hom) {
            // sections and sections-with-one-doubled-entry
            std::function<bool(std::size_t, int)> rec = [&](std::size_t idx, int doubled) -> bool {
                if (idx == nonempty.size()) {
                    int d = doubled >= 0 ? 1 : 0;
                    return x.find_cell(d, {sub.data(), sub.size()}) >= 0;
                }
                int p = nonempty[idx];
                std::uint64_t w = cand[p];
                while (w) {
                    std::uint64_t bit = w & (~w + 1);
                    w &= w - 1;
                    sub[p] = bit;
                    if (!rec(idx + 1, doubled)) return false;
                    if (doubled < 0) {
                        std::uint64_t rest = w;
                        while (rest) {
                            std::uint64_t bit2 = rest & (~rest + 1);
                            rest &= rest - 1;
                            sub[p] = bit | bit2;
                            if (!rec(idx + 1, p)) return false;
                        }
                    }
                }
                sub[p] = 0;
                return true;
            };
            return rec(0, -1);
        }
        // hom_plus: single elements and pairs of elements
        std::vector<std::pair<int, int>> elems; // (position, vertex)
        for (int p : nonempty) {
            std::uint64_t w = cand[p];
            while (w) {
                elems.emplace_back(p, std::countr_zero(w));
                w &= w - 1;
            }
        }
        for (std::size_t a = 0; a < elems.size(); ++a) {
            std::fill(sub.begin(), sub.end(), 0);
            sub[elems[a].first] |= std::uint64_t(1) << elems[a].second;
            if (x.find_cell(0, {sub.data(), sub.size()}) < 0) return false;
            for (std::size_t b = a + 1; b < elems.size(); ++b) {
                Eta pairc = sub;
                pairc[elems[b].first] |= std::uint64_t(1) << elems[b].second;
                if (x.find_cell(1, {pairc.data(), pairc.size()}) < 0) return false;
            }
        }
        return true;
    };

    std::size_t n = x.total_cells();
    for (std::size_t a = 0; a < n; ++a) {
        auto [da, ia] = x.from_global(a);
        auto ca = x.cell(da, ia);
        for (std::size_t b = a + 1; b < n; ++b) {
            auto [db, ib] = x.from_global(b);
            auto cb = x.cell(db, ib);
            Eta uni(tn);
            for (int p = 0; p < tn; ++p) uni[p] = ca[p] | cb[p];
            if (x.kind() == ComplexKind::hom) {
                bool ok = true;
                for (int p = 0; p < tn; ++p)
                    if (!uni[p]) ok = false;
                if (!ok) continue;
            }
            int ud = x.cell_dim({uni.data(), uni.size()});
            if (ud == da || ud == db) continue; // union equals one of the cells
            if (x.find_cell(ud, {uni.data(), uni.size()}) >= 0) continue;
            if (low_dim_subcells_present(uni)) return false;
        }
    }
    return true;
}

} // namespace homtop
