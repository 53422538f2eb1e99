#include "qgrass/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qgrass/detail/linalg.hpp"
#include "qgrass/qcalc.hpp"

namespace qgrass {

namespace {

// Lexicographic k-combinations of {0..n-1}.
template <typename Fn>
void for_each_pattern(int n, int k, Fn&& fn) {
    std::vector<int> p(static_cast<size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    while (true) {
        fn(p);
        int i = k - 1;
        while (i >= 0 && p[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++p[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            p[static_cast<size_t>(j)] = p[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<std::vector<int>> all_patterns(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_pattern(n, k, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

// Free cells of an RREF pattern in row-major order: row i may hold an
// arbitrary value at column j iff j > pivot(i) and j is not a pivot column.
std::vector<std::pair<int, int>> free_cells(int n, const std::vector<int>& piv) {
    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = piv[i] + 1; j < n; ++j)
            if (!is_piv[static_cast<size_t>(j)]) cells.emplace_back(static_cast<int>(i), j);
    return cells;
}

// Runs fn(matrix) for every fill of the free cells, last cell fastest, so
// successive matrices ascend in row-major byte order.
template <typename Fn>
void for_each_fill(int n, int k, int q, const std::vector<int>& piv, Fn&& fn) {
    std::vector<uint8_t> m(static_cast<size_t>(k) * n, 0);
    for (int i = 0; i < k; ++i)
        m[static_cast<size_t>(i) * n + piv[static_cast<size_t>(i)]] = 1;
    auto cells = free_cells(n, piv);
    std::vector<int> vals(cells.size(), 0);
    while (true) {
        fn(m);
        size_t j = cells.size();
        while (j > 0 && vals[j - 1] == q - 1) {
            --j;
            vals[j] = 0;
            m[static_cast<size_t>(cells[j].first) * n + cells[j].second] = 0;
        }
        if (j == 0) break;
        --j;
        ++vals[j];
        m[static_cast<size_t>(cells[j].first) * n + cells[j].second] =
            static_cast<uint8_t>(vals[j]);
    }
}

bool is_rref(const uint8_t* m, int k, int n) {
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        int c = 0;
        while (c < n && m[static_cast<size_t>(i) * n + c] == 0) ++c;
        if (c == n || c <= prev) return false;
        if (m[static_cast<size_t>(i) * n + c] != 1) return false;
        for (int r = 0; r < k; ++r)
            if (r != i && m[static_cast<size_t>(r) * n + c] != 0) return false;
        prev = c;
    }
    return true;
}

void check_budget(const QInt& total, long budget) {
    if (budget > 0 && total > budget) throw BudgetExceeded(to_decimal(total));
}

// v (dim-of-base bytes, coordinates in base's basis) -> ambient row.
std::vector<uint8_t> lift_row(const Subspace& base, const uint8_t* v) {
    const auto& f = base.ambient().field();
    std::vector<uint8_t> out(static_cast<size_t>(base.n()), 0);
    for (int j = 0; j < base.dim(); ++j) {
        if (v[j] == 0) continue;
        const uint8_t* br = base.row(j);
        for (int c = 0; c < base.n(); ++c)
            out[static_cast<size_t>(c)] =
                f.addf(out[static_cast<size_t>(c)], f.mulf(v[j], br[c]));
    }
    return out;
}

std::vector<int> non_pivot_columns(int n, const std::vector<int>& piv) {
    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
        if (!is_piv[static_cast<size_t>(j)]) out.push_back(j);
    return out;
}

} // namespace

void grassmannian_enumerate(const Ambient& amb, long k, const SubspaceSink& sink,
                            long budget) {
    if (k < 0 || k > amb.n) throw DimensionOrder("need 0 <= k <= n");
    check_budget(qbinom(amb.n, k, amb.q), budget);
    if (k == 0) {
        sink(Subspace::zero(amb));
        return;
    }
    const int n = amb.n, kk = static_cast<int>(k);
    for_each_pattern(n, kk, [&](const std::vector<int>& piv) {
        for_each_fill(n, kk, amb.q, piv, [&](const std::vector<uint8_t>& m) {
            sink(Subspace::from_rref(amb, kk, m));
        });
    });
}

void enumerate_containing(const Subspace& e, long k, const SubspaceSink& sink,
                          long budget) {
    const Ambient& amb = e.ambient();
    const int n = amb.n, d = e.dim();
    if (k < d || k > n) throw DimensionOrder("need dim(e) <= k <= n");
    check_budget(qbinom(n - d, k - d, amb.q), budget);
    if (k == d) {
        sink(e);
        return;
    }
    // Each coset of e has a unique representative vanishing on e's pivot
    // columns, so k-supspaces above e correspond to (k-d)-subspaces in the
    // non-pivot coordinates.
    const std::vector<int> coords = non_pivot_columns(n, e.pivots());
    const Ambient quot(amb.q, n - d);
    std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(d) +
                                           static_cast<size_t>(k - d));
    for (int i = 0; i < d; ++i)
        rows[static_cast<size_t>(i)].assign(e.row(i), e.row(i) + n);
    grassmannian_enumerate(quot, k - d, [&](const Subspace& w) {
        for (int r = 0; r < w.dim(); ++r) {
            auto& row = rows[static_cast<size_t>(d + r)];
            row.assign(static_cast<size_t>(n), 0);
            for (int j = 0; j < w.n(); ++j)
                row[static_cast<size_t>(coords[static_cast<size_t>(j)])] = w.entry(r, j);
        }
        sink(span_of(amb, rows));
    });
}

void enumerate_type(const Subspace& l, long m, long h, const SubspaceSink& sink,
                    long budget) {
    const Ambient& amb = l.ambient();
    const auto& f = amb.field();
    const int n = amb.n, dl = l.dim();
    const long e = n - dl;
    if (h < 0 || h > m || h > dl)
        throw HypothesisViolated("0 <= h <= min(m, dim l)");
    if (m - h > e) throw HypothesisViolated("m - h <= n - dim l");
    check_budget(nprime_count(0, 0, m, h, e, dl, amb.q), budget);

    if (dl == 0) { // l is the zero subspace; only h = 0 is feasible
        grassmannian_enumerate(amb, m, sink, 0);
        return;
    }

    // U <-> (A, W, phi): A = U cap l, W = image of U in V/l, phi records the
    // l-component of the chosen lifts modulo A. V/l is realized on the
    // non-pivot columns of l; the complement of A inside l is spanned by the
    // l-basis combinations at A's non-pivot coordinates.
    std::vector<Subspace> inner; // h-subspaces of l, in l-coordinates
    grassmannian_enumerate(Ambient(amb.q, dl), h,
                           [&](const Subspace& a) { inner.push_back(a); }, 0);

    if (m == h) { // U inside l
        for (const Subspace& a : inner) sink(lift_from(a, l));
        return;
    }

    const std::vector<int> qcoords = non_pivot_columns(n, l.pivots());
    std::vector<Subspace> quots; // (m-h)-subspaces of V/l
    grassmannian_enumerate(Ambient(amb.q, static_cast<int>(e)), m - h,
                           [&](const Subspace& w) { quots.push_back(w); }, 0);

    const int mh = static_cast<int>(m - h);
    for (const Subspace& a : inner) {
        std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(h) +
                                               static_cast<size_t>(mh));
        for (int i = 0; i < h; ++i) rows[static_cast<size_t>(i)] = lift_row(l, a.row(i));
        // complement of A in l
        std::vector<std::vector<uint8_t>> comp;
        for (int c : non_pivot_columns(dl, a.pivots())) {
            std::vector<uint8_t> unit(static_cast<size_t>(dl), 0);
            unit[static_cast<size_t>(c)] = 1;
            comp.push_back(lift_row(l, unit.data()));
        }
        const int dc = static_cast<int>(comp.size()); // dl - h

        for (const Subspace& w : quots) {
            std::vector<std::vector<uint8_t>> base(static_cast<size_t>(mh));
            for (int r = 0; r < mh; ++r) {
                base[static_cast<size_t>(r)].assign(static_cast<size_t>(n), 0);
                for (int j = 0; j < w.n(); ++j)
                    base[static_cast<size_t>(r)]
                        [static_cast<size_t>(qcoords[static_cast<size_t>(j)])] =
                            w.entry(r, j);
            }
            // odometer over the (m-h) x dc matrix of complement coefficients
            std::vector<int> phi(static_cast<size_t>(mh) * dc, 0);
            while (true) {
                for (int r = 0; r < mh; ++r) {
                    auto& row = rows[static_cast<size_t>(h + r)];
                    row = base[static_cast<size_t>(r)];
                    for (int c = 0; c < dc; ++c) {
                        uint8_t co = static_cast<uint8_t>(phi[static_cast<size_t>(r) * dc + c]);
                        if (co == 0) continue;
                        const auto& cr = comp[static_cast<size_t>(c)];
                        for (int j = 0; j < n; ++j)
                            row[static_cast<size_t>(j)] = f.addf(
                                row[static_cast<size_t>(j)], f.mulf(co, cr[static_cast<size_t>(j)]));
                    }
                }
                sink(span_of(amb, rows));
                size_t j = phi.size();
                while (j > 0 && phi[j - 1] == amb.q - 1) phi[--j] = 0;
                if (j == 0) break;
                ++phi[j - 1];
            }
        }
    }
}

std::vector<Subspace> all_subspaces(const Ambient& amb, long k, long budget) {
    std::vector<Subspace> out;
    grassmannian_enumerate(amb, k, [&](const Subspace& s) { out.push_back(s); }, budget);
    return out;
}

namespace {

unsigned long count_pattern_fills(const Ambient& amb, int k,
                                       const std::vector<int>& piv) {
    unsigned long c = 0;
    for_each_fill(amb.n, k, amb.q, piv, [&](const std::vector<uint8_t>& m) {
        if (is_rref(m.data(), k, amb.n)) ++c;
    });
    return c;
}

unsigned long count_pattern_type(const Ambient& amb, int m,
                                      const std::vector<int>& piv,
                                      const Subspace& l, int h) {
    const auto& f = amb.field();
    const uint8_t* lrows = l.raw().data();
    unsigned long c = 0;
    for_each_fill(amb.n, m, amb.q, piv, [&](const std::vector<uint8_t>& mat) {
        int rank = detail::stacked_rank(f, amb.n, mat.data(), m, lrows, l.dim());
        if (m + l.dim() - rank == h) ++c;
    });
    return c;
}

} // namespace

QInt grassmannian_count(const Ambient& amb, long k) {
    if (k < 0 || k > amb.n) throw DimensionOrder("need 0 <= k <= n");
    if (k == 0) return 1;
    const auto pats = all_patterns(amb.n, static_cast<int>(k));
    std::vector<unsigned long> per(pats.size(), 0);
    const long np = static_cast<long>(pats.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < np; ++i)
        per[static_cast<size_t>(i)] =
            count_pattern_fills(amb, static_cast<int>(k), pats[static_cast<size_t>(i)]);
    QInt total = 0;
    for (auto c : per) total += c;
    return total;
}

QInt grassmannian_count_serial(const Ambient& amb, long k) {
    if (k < 0 || k > amb.n) throw DimensionOrder("need 0 <= k <= n");
    if (k == 0) return 1;
    QInt total = 0;
    for_each_pattern(amb.n, static_cast<int>(k), [&](const std::vector<int>& piv) {
        total += count_pattern_fills(amb, static_cast<int>(k), piv);
    });
    return total;
}

QInt type_count(const Subspace& l, long m, long h) {
    const Ambient& amb = l.ambient();
    if (m < 0 || m > amb.n) throw DimensionOrder("need 0 <= m <= n");
    if (m == 0) return h == 0 ? 1 : 0;
    const auto pats = all_patterns(amb.n, static_cast<int>(m));
    std::vector<unsigned long> per(pats.size(), 0);
    const long np = static_cast<long>(pats.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < np; ++i)
        per[static_cast<size_t>(i)] = count_pattern_type(
            amb, static_cast<int>(m), pats[static_cast<size_t>(i)], l, static_cast<int>(h));
    QInt total = 0;
    for (auto c : per) total += c;
    return total;
}

QInt type_count_serial(const Subspace& l, long m, long h) {
    const Ambient& amb = l.ambient();
    if (m < 0 || m > amb.n) throw DimensionOrder("need 0 <= m <= n");
    if (m == 0) return h == 0 ? 1 : 0;
    QInt total = 0;
    for_each_pattern(amb.n, static_cast<int>(m), [&](const std::vector<int>& piv) {
        total += count_pattern_type(amb, static_cast<int>(m), piv, l, static_cast<int>(h));
    });
    return total;
}

} // namespace qgrass
