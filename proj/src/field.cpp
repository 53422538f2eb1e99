#include "qgrass/field.hpp"

#include <mutex>
#include <vector>

namespace qgrass {
namespace {

// Internal polynomial form: coefficient vectors over F_p, index = degree.
using Poly = std::vector<int>;

Poly decode(int code, int p) {
    Poly c;
    while (code > 0) {
        c.push_back(code % p);
        code /= p;
    }
    return c;
}

int encode(const Poly& c, int p) {
    int code = 0;
    for (size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

int degree(const Poly& c) {
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// Remainder of a modulo monic m.
Poly mod(Poly a, const Poly& m, int p) {
    int dm = degree(m);
    for (int da = degree(a); da >= dm; da = degree(a)) {
        int lead = a[da];
        for (int i = 0; i <= dm; ++i) {
            int k = da - dm + i;
            a[k] = ((a[k] - lead * m[i]) % p + p) % p;
        }
    }
    return a;
}

bool is_irreducible(const Poly& f, int p) {
    int df = degree(f);
    // trial division by every monic polynomial of degree 1..df/2
    for (int d = 1; 2 * d <= df; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            Poly g = decode(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (degree(mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

FieldTable build(int q) {
    if (q < 2 || q > kMaxFieldOrder) throw OrderOutOfRange(q);
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw NotPrimePower(q);

    FieldTable t;
    t.q = q;
    t.p = p;
    t.e = e;

    Poly reducer;
    if (e > 1) {
        int found = -1;
        for (int m = 0; m < q && found < 0; ++m) {
            Poly f = decode(m, p);
            f.resize(e + 1, 0);
            f[e] = 1;
            if (is_irreducible(f, p)) found = m;
        }
        t.poly = found;
        reducer = decode(found, p);
        reducer.resize(e + 1, 0);
        reducer[e] = 1;
    }

    for (int x = 0; x < q; ++x) {
        Poly px = decode(x, p);
        Poly nx = px;
        for (int& c : nx) c = (p - c) % p;
        t.neg[x] = static_cast<uint8_t>(encode(nx, p));
        for (int y = 0; y < q; ++y) {
            Poly py = decode(y, p);
            Poly sum(std::max(px.size(), py.size()), 0);
            for (size_t i = 0; i < sum.size(); ++i) {
                int a = i < px.size() ? px[i] : 0;
                int b = i < py.size() ? py[i] : 0;
                sum[i] = (a + b) % p;
            }
            t.add[x][y] = static_cast<uint8_t>(encode(sum, p));
            Poly prod = mul(px, py, p);
            if (e > 1) prod = mod(prod, reducer, p);
            t.mul[x][y] = static_cast<uint8_t>(encode(prod, p));
        }
    }
    for (int x = 1; x < q; ++x)
        for (int y = 1; y < q; ++y)
            if (t.mul[x][y] == 1) t.inv[x] = static_cast<uint8_t>(y);

    // Paranoia pass: the whole library leans on these tables, so check the
    // field axioms exhaustively right here (q^3 <= 4096 triples, one-time).
    for (int x = 0; x < q; ++x) {
        if (t.add[x][t.neg[x]] != 0) throw Error("field table: bad negation");
        if (x != 0 && t.mul[x][t.inv[x]] != 1) throw Error("field table: bad inverse");
        for (int y = 0; y < q; ++y) {
            if (t.add[x][y] != t.add[y][x] || t.mul[x][y] != t.mul[y][x])
                throw Error("field table: commutativity failed");
            for (int z = 0; z < q; ++z) {
                if (t.add[t.add[x][y]][z] != t.add[x][t.add[y][z]])
                    throw Error("field table: additive associativity failed");
                if (t.mul[t.mul[x][y]][z] != t.mul[x][t.mul[y][z]])
                    throw Error("field table: multiplicative associativity failed");
                if (t.mul[x][t.add[y][z]] != t.add[t.mul[x][y]][t.mul[x][z]])
                    throw Error("field table: distributivity failed");
            }
        }
    }
    return t;
}

} // namespace

FieldTable build_field_table(int q) { return build(q); }

int field_eval(const FieldTable& t, FieldOp op, int x, std::optional<int> y) {
    if (x < 0 || x >= t.q) throw ElementOutOfRange(x, t.q);
    if (op == FieldOp::add || op == FieldOp::mul) {
        if (!y) throw Error("binary field op needs two operands");
        if (*y < 0 || *y >= t.q) throw ElementOutOfRange(*y, t.q);
        return op == FieldOp::add ? t.add[x][*y] : t.mul[x][*y];
    }
    if (op == FieldOp::neg) return t.neg[x];
    return t.invf(static_cast<uint8_t>(x)); // throws ZeroInverse on x = 0
}

const FieldTable& field_table(int q) {
    static std::mutex mu;
    static std::array<std::optional<FieldTable>, kMaxFieldOrder + 1> cache;
    if (q < 2 || q > kMaxFieldOrder) throw OrderOutOfRange(q);
    std::lock_guard lock(mu);
    if (!cache[q]) cache[q] = build(q);
    return *cache[q];
}

} // namespace qgrass
