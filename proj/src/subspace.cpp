#include "qgrass/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <ostream>

#include "qgrass/detail/linalg.hpp"

namespace qgrass {

namespace detail {

int rref_bytes(const FieldTable& f, uint8_t* m, int rows, int cols) {
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int sel = -1;
        for (int i = r; i < rows; ++i) {
            if (m[i * cols + col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
        uint8_t piv = m[r * cols + col];
        if (piv != 1) {
            uint8_t s = f.invf(piv);
            for (int j = col; j < cols; ++j) m[r * cols + j] = f.mulf(m[r * cols + j], s);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint8_t c = m[i * cols + col];
            if (c == 0) continue;
            uint8_t nc = f.negf(c);
            for (int j = col; j < cols; ++j)
                m[i * cols + j] = f.addf(m[i * cols + j], f.mulf(nc, m[r * cols + j]));
        }
        ++r;
    }
    return r;
}

int rref_gf2(uint64_t* rows, int nrows) {
    int r = 0;
    for (int i = 0; i < nrows; ++i) {
        uint64_t v = rows[i];
        for (int j = 0; j < r; ++j)
            if (v >> std::countr_zero(rows[j]) & 1u) v ^= rows[j];
        if (v == 0) continue;
        // eliminate the new pivot from earlier rows, keep rows sorted by pivot
        for (int j = 0; j < r; ++j)
            if (rows[j] >> std::countr_zero(v) & 1u) rows[j] ^= v;
        int pos = r;
        while (pos > 0 && std::countr_zero(rows[pos - 1]) > std::countr_zero(v)) {
            rows[pos] = rows[pos - 1];
            --pos;
        }
        rows[pos] = v;
        ++r;
    }
    for (int i = r; i < nrows; ++i) rows[i] = 0;
    return r;
}

int stacked_rank(const FieldTable& f, int n, const uint8_t* a, int ka, const uint8_t* b, int kb) {
    if (f.q == 2) {
        uint64_t rows[64];
        for (int i = 0; i < ka; ++i) rows[i] = pack_gf2(a + i * n, n);
        for (int i = 0; i < kb; ++i) rows[ka + i] = pack_gf2(b + i * n, n);
        return rref_gf2(rows, ka + kb);
    }
    std::vector<uint8_t> m(static_cast<size_t>(ka + kb) * n);
    std::memcpy(m.data(), a, static_cast<size_t>(ka) * n);
    std::memcpy(m.data() + static_cast<size_t>(ka) * n, b, static_cast<size_t>(kb) * n);
    return rref_bytes(f, m.data(), ka + kb, n);
}

} // namespace detail

Subspace Subspace::full(const Ambient& amb) {
    std::vector<uint8_t> rows(static_cast<size_t>(amb.n) * amb.n, 0);
    for (int i = 0; i < amb.n; ++i) rows[static_cast<size_t>(i) * amb.n + i] = 1;
    return Subspace(amb, amb.n, std::move(rows));
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> p(k_);
    for (int i = 0; i < k_; ++i) {
        const uint8_t* r = row(i);
        int j = 0;
        while (r[j] == 0) ++j;
        p[i] = j;
    }
    return p;
}

int compare(const Subspace& a, const Subspace& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    auto pa = a.pivots(), pb = b.pivots();
    if (pa != pb) return pa < pb ? -1 : 1;
    if (a.raw() != b.raw()) return a.raw() < b.raw() ? -1 : 1;
    return 0;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    // FNV-1a over the ambient parameters and the canonical bytes
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint8_t>(s.q()));
    mix(static_cast<uint8_t>(s.n()));
    mix(static_cast<uint8_t>(s.dim()));
    for (uint8_t b : s.raw()) mix(b);
    return static_cast<size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
    os << "<" << s.dim() << "-space/F" << s.q() << "^" << s.n();
    for (int i = 0; i < s.dim(); ++i) {
        os << (i ? ";" : " ");
        for (int j = 0; j < s.n(); ++j) os << int(s.entry(i, j));
    }
    return os << ">";
}

Subspace coordinate_subspace(const Ambient& amb, long d) {
    if (d < 0 || d > amb.n) throw DimensionOrder("need 0 <= d <= n");
    std::vector<uint8_t> rows(static_cast<size_t>(d) * amb.n, 0);
    for (long i = 0; i < d; ++i) rows[static_cast<size_t>(i) * amb.n + i] = 1;
    return Subspace::from_rref(amb, static_cast<int>(d), std::move(rows));
}

Subspace canonicalize(const Ambient& amb, const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<uint8_t>> bytes;
    bytes.reserve(rows.size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != amb.n)
            throw DimensionMismatch("row length " + std::to_string(r.size()) +
                                    " does not match ambient dimension " + std::to_string(amb.n));
        std::vector<uint8_t> br(amb.n);
        for (int j = 0; j < amb.n; ++j) {
            if (r[j] < 0 || r[j] >= amb.q) throw EntryOutOfRange(
                "entry " + std::to_string(r[j]) + " not in 0.." + std::to_string(amb.q - 1));
            br[j] = static_cast<uint8_t>(r[j]);
        }
        bytes.push_back(std::move(br));
    }
    return span_of(amb, bytes);
}

Subspace span_of(const Ambient& amb, const std::vector<std::vector<uint8_t>>& rows) {
    std::vector<uint8_t> m;
    m.reserve(rows.size() * amb.n);
    for (const auto& r : rows) m.insert(m.end(), r.begin(), r.end());
    int rank = detail::rref_bytes(amb.field(), m.data(), static_cast<int>(rows.size()), amb.n);
    m.resize(static_cast<size_t>(rank) * amb.n);
    return Subspace::from_rref(amb, rank, std::move(m));
}

namespace {

void check_ambient(const Subspace& a, const Subspace& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
}

struct SplitBasis {
    int sum_dim = 0;
    std::vector<uint8_t> sum_rows;  // RREF of a+b
    std::vector<uint8_t> meet_rows; // RREF of a cap b
};

// One elimination pays for both the sum and the intersection: reduce
// [A|A; B|0] with left-block column priority; rows whose pivot lands in the
// right block carry a basis of the intersection there, the others carry the
// sum on the left.
SplitBasis zassenhaus(const Subspace& a, const Subspace& b) {
    const int n = a.n();
    const int ka = a.dim(), kb = b.dim();
    SplitBasis out;
    if (a.q() == 2) {
        uint64_t rows[64];
        for (int i = 0; i < ka; ++i) {
            uint64_t m = detail::pack_gf2(a.row(i), n);
            rows[i] = m | m << n;
        }
        for (int i = 0; i < kb; ++i) rows[ka + i] = detail::pack_gf2(b.row(i), n);
        int rank = detail::rref_gf2(rows, ka + kb);
        for (int i = 0; i < rank; ++i) {
            if (std::countr_zero(rows[i]) < n) {
                out.sum_rows.resize(out.sum_rows.size() + n);
                detail::unpack_gf2(rows[i] & ((uint64_t(1) << n) - 1),
                                   out.sum_rows.data() + out.sum_rows.size() - n, n);
                ++out.sum_dim;
            } else {
                out.meet_rows.resize(out.meet_rows.size() + n);
                detail::unpack_gf2(rows[i] >> n, out.meet_rows.data() + out.meet_rows.size() - n,
                                   n);
            }
        }
        return out;
    }
    const FieldTable& f = a.ambient().field();
    const int w = 2 * n;
    std::vector<uint8_t> m(static_cast<size_t>(ka + kb) * w, 0);
    for (int i = 0; i < ka; ++i) {
        std::memcpy(&m[static_cast<size_t>(i) * w], a.row(i), n);
        std::memcpy(&m[static_cast<size_t>(i) * w + n], a.row(i), n);
    }
    for (int i = 0; i < kb; ++i) std::memcpy(&m[static_cast<size_t>(ka + i) * w], b.row(i), n);
    int rank = detail::rref_bytes(f, m.data(), ka + kb, w);
    for (int i = 0; i < rank; ++i) {
        const uint8_t* r = &m[static_cast<size_t>(i) * w];
        bool left = false;
        for (int j = 0; j < n && !left; ++j) left = r[j] != 0;
        if (left) {
            out.sum_rows.insert(out.sum_rows.end(), r, r + n);
            ++out.sum_dim;
        } else {
            out.meet_rows.insert(out.meet_rows.end(), r + n, r + w);
        }
    }
    return out;
}

} // namespace

std::pair<int, Subspace> intersect_dim(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    SplitBasis s = zassenhaus(a, b);
    int meet_dim = static_cast<int>(s.meet_rows.size()) / a.n();
    // modular-law consistency with the sum computed by the same elimination
    if (meet_dim != a.dim() + b.dim() - s.sum_dim)
        throw Error("intersection/sum dimension identity violated (internal)");
    return {meet_dim, Subspace::from_rref(a.ambient(), meet_dim, std::move(s.meet_rows))};
}

Subspace sum_span(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    SplitBasis s = zassenhaus(a, b);
    return Subspace::from_rref(a.ambient(), s.sum_dim, std::move(s.sum_rows));
}

Subspace meet(const Subspace& a, const Subspace& b) { return intersect_dim(a, b).second; }

int intersection_dim(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    int rank = detail::stacked_rank(a.ambient().field(), a.n(), a.raw().data(), a.dim(),
                                    b.raw().data(), b.dim());
    return a.dim() + b.dim() - rank;
}

bool contains(const Subspace& a, const Subspace& b) {
    check_ambient(a, b);
    if (b.dim() > a.dim()) return false;
    const int n = a.n();
    if (a.q() == 2) {
        uint64_t arows[32];
        for (int i = 0; i < a.dim(); ++i) arows[i] = detail::pack_gf2(a.row(i), n);
        for (int i = 0; i < b.dim(); ++i) {
            uint64_t v = detail::pack_gf2(b.row(i), n);
            for (int j = 0; j < a.dim(); ++j)
                if (v >> std::countr_zero(arows[j]) & 1u) v ^= arows[j];
            if (v != 0) return false;
        }
        return true;
    }
    const FieldTable& f = a.ambient().field();
    auto piv = a.pivots();
    std::vector<uint8_t> v(n);
    for (int i = 0; i < b.dim(); ++i) {
        std::memcpy(v.data(), b.row(i), n);
        for (int j = 0; j < a.dim(); ++j) {
            uint8_t c = v[piv[j]];
            if (c == 0) continue;
            uint8_t nc = f.negf(c);
            const uint8_t* ar = a.row(j);
            for (int col = 0; col < n; ++col) v[col] = f.addf(v[col], f.mulf(nc, ar[col]));
        }
        for (int col = 0; col < n; ++col)
            if (v[col] != 0) return false;
    }
    return true;
}

Subspace express_in(const Subspace& s, const Subspace& base) {
    check_ambient(s, base);
    if (!contains(base, s))
        throw NotContained("subspace is not contained in the coordinate base");
    auto piv = base.pivots();
    Ambient inner(base.q(), base.dim() == 0 ? 1 : base.dim());
    if (base.dim() == 0) return Subspace::zero(inner);
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(s.dim());
    for (int i = 0; i < s.dim(); ++i) {
        std::vector<uint8_t> c(base.dim());
        for (int j = 0; j < base.dim(); ++j) c[j] = s.entry(i, piv[j]);
        rows.push_back(std::move(c));
    }
    return span_of(inner, rows);
}

Subspace lift_from(const Subspace& s_coords, const Subspace& base) {
    if (s_coords.q() != base.q() || s_coords.n() != base.dim())
        throw DimensionMismatch("coordinate rows do not match the base dimension");
    const FieldTable& f = base.ambient().field();
    std::vector<std::vector<uint8_t>> rows;
    rows.reserve(s_coords.dim());
    for (int i = 0; i < s_coords.dim(); ++i) {
        std::vector<uint8_t> v(base.n(), 0);
        for (int j = 0; j < base.dim(); ++j) {
            uint8_t c = s_coords.entry(i, j);
            if (c == 0) continue;
            const uint8_t* br = base.row(j);
            for (int col = 0; col < base.n(); ++col)
                v[col] = f.addf(v[col], f.mulf(c, br[col]));
        }
        rows.push_back(std::move(v));
    }
    return span_of(base.ambient(), rows);
}

} // namespace qgrass
