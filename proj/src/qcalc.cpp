#include "qgrass/qcalc.hpp"

#include <algorithm>
#include <sstream>

namespace qgrass {

namespace {

QInt qpow(int q, long e) {
    if (e < 0) throw Error("internal: negative power of q");
    return ipow(static_cast<long>(q), static_cast<unsigned long>(e));
}

// One side-by-side comparison of a claim. strict: lhs OP rhs with OP in
// {>, <, ==} depending on dir; non-strict variants share the margin logic.
enum class Cmp { GT, GE, LT, LE, EQ };

struct Comparison {
    QInt lhs, rhs;
    Cmp cmp;

    // holds iff margin() >= min_margin(); margin is also the tie-breaking
    // key when picking the binding comparison of a multi-part claim.
    QInt margin() const {
        switch (cmp) {
        case Cmp::GT:
        case Cmp::GE: return lhs - rhs;
        case Cmp::LT:
        case Cmp::LE: return rhs - lhs;
        case Cmp::EQ: return lhs == rhs ? QInt(0) : QInt(-abs(QInt(lhs - rhs)));
        }
        return 0;
    }
    bool strict() const { return cmp == Cmp::GT || cmp == Cmp::LT; }
    bool holds() const { return strict() ? margin() > 0 : margin() >= 0; }
};

} // namespace

QInt qbinom(long a, long b, int q) {
    if (q < 2) throw HypothesisViolated("q >= 2");
    if (b == 0) return 1;
    if (b < 0 || b > a) return 0;
    QInt num = 1, den = 1;
    for (long i = 0; i < b; ++i) {
        num *= qpow(q, a - i) - 1;
        den *= qpow(q, b - i) - 1;
    }
    QInt res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return res;
}

QInt nprime_count(long m1, long h1, long m, long h, long e, long l, int q) {
    if (h1 < 0) throw HypothesisViolated("h1 >= 0");
    if (h1 > h) throw HypothesisViolated("h1 <= h");
    if (h > l) throw HypothesisViolated("h <= l");
    if (m1 - h1 < 0) throw HypothesisViolated("m1 - h1 >= 0");
    if (m1 - h1 > m - h) throw HypothesisViolated("m1 - h1 <= m - h");
    if (m - h > e) throw HypothesisViolated("m - h <= e");
    return qpow(q, (l - h) * (m - h - m1 + h1)) *
           qbinom(e - (m1 - h1), m - h - (m1 - h1), q) *
           qbinom(l - h1, h - h1, q);
}

namespace {

void require_positive(const ParamPoint& p) {
    if (p.q < 2) throw HypothesisViolated("q >= 2");
    if (p.n < 1) throw HypothesisViolated("n >= 1");
    if (p.k < 1) throw HypothesisViolated("k >= 1");
    if (p.t < 1) throw HypothesisViolated("t >= 1");
    if (p.s < 0) throw HypothesisViolated("s >= 0");
}

QInt f1_at(const ParamPoint& p, long x) {
    const long n = p.n, k = p.k, t = p.t;
    const int q = p.q;
    QInt unit = qbinom(k - t + 1, 1, q);
    QInt geom = 0; // sum_{i=0}^{x-t-1} [k-t+1 1]^i
    QInt pw = 1;
    for (long i = 0; i < x - t; ++i) {
        geom += pw;
        pw *= unit;
    }
    return qbinom(x, t, q) * ipow(unit, static_cast<unsigned long>(x - t)) *
               qbinom(n - x, k - x, q) +
           QInt(p.s) * qbinom(x, t, q) * geom;
}

QInt f2_at(const ParamPoint& p, long x) {
    const long n = p.n, k = p.k, t = p.t;
    const int q = p.q;
    QInt mid = qbinom(k + 1 - x, 1, q);
    return qbinom(x - t, 1, q) * qbinom(n - t - 1, k - t - 1, q) +
           qpow(q, 2 * (x - t)) * mid * mid * qbinom(n - t - 2, k - t - 2, q) +
           QInt(2) * QInt(p.s);
}

QInt f3_at(const ParamPoint& p, long x) {
    const long n = p.n, k = p.k, t = p.t;
    const int q = p.q;
    return qbinom(n - t, k - t, q) +
           qpow(q, x - t + 1) * qbinom(k - t, 1, q) * qbinom(t, 1, q) *
               qbinom(n - x, k - x, q) +
           QInt(p.s);
}

QInt g1_at(const ParamPoint& p) {
    const long n = p.n, k = p.k, t = p.t;
    const int q = p.q;
    QInt first = qbinom(n - t, k - t, q) -
                 qpow(q, (k - t) * (k + 1 - t)) * qbinom(n - k - 1, k - t, q) +
                 QInt(p.s);
    QInt cap = qpow(q, k - t + 1) * qbinom(t, 1, q);
    QInt second = qbinom(n - t, k - t, q) + std::min(QInt(p.s), cap);
    return first * second;
}

QInt g2_at(const ParamPoint& p) {
    const long n = p.n, k = p.k, t = p.t;
    const int q = p.q;
    QInt a = qbinom(n - t - 1, k - t - 1, q);
    return qpow(q, k - t) * qbinom(t + 1, 1, q) * a * qbinom(n - t - 1, k - t, q) +
           a * a;
}

QInt g3_at(const ParamPoint& p) {
    const long n = p.n, k = p.k, t = p.t;
    const int q = p.q;
    return qbinom(k - t + 1, 1, q) * qbinom(n - t + 1, k - t + 1, q) -
           qpow(q, (k - t - 1) * (k - t - 2) + 1) *
               qbinom(n - t - 1, k - t - 2, q) * qbinom(k + 1 - t, 2, q) +
           QInt(p.s);
}

} // namespace

QInt f_eval(FWhich which, const ParamPoint& p) {
    require_positive(p);
    if (!p.x) throw MissingX();
    const long x = *p.x;
    if (x < p.t || x > p.k) throw HypothesisViolated("t <= x <= k");
    switch (which) {
    case FWhich::f1: return f1_at(p, x);
    case FWhich::f2: return f2_at(p, x);
    case FWhich::f3: return f3_at(p, x);
    }
    throw Error("internal: bad FWhich");
}

QInt g_eval(GWhich which, const ParamPoint& p) {
    require_positive(p);
    if (p.k < p.t) throw HypothesisViolated("k >= t");
    switch (which) {
    case GWhich::g1: return g1_at(p);
    case GWhich::g2: return g2_at(p);
    case GWhich::g3: return g3_at(p);
    }
    throw Error("internal: bad GWhich");
}

AltSum alt_sum_identity(long n, long k, long t, int q) {
    if (q < 2) throw HypothesisViolated("q >= 2");
    if (t < 1) throw HypothesisViolated("t >= 1");
    if (k < t) throw HypothesisViolated("k >= t");
    if (n <= k) throw HypothesisViolated("n > k");
    AltSum out;
    out.lhs = qbinom(n - t, k - t, q) -
              qpow(q, (k - t) * (k + 1 - t)) * qbinom(n - k - 1, k - t, q);
    out.rhs = 0;
    for (long i = 1; i <= k - t; ++i) {
        QInt ai = qpow(q, i * (i - 1) / 2) * qbinom(k - t + 1, i, q) *
                  qbinom(n - t - i, k - t - i, q);
        if (i % 2 == 1)
            out.rhs += ai;
        else
            out.rhs -= ai;
        out.terms.push_back(ai);
    }
    out.terms_strictly_decreasing = true;
    for (size_t i = 1; i < out.terms.size(); ++i)
        if (!(out.terms[i] < out.terms[i - 1])) out.terms_strictly_decreasing = false;
    return out;
}

namespace {

// n >= base + log_q(bound)  <=>  n >= base and q^(n-base) >= bound
bool pow_hyp(long n, long base, int q, const QInt& bound) {
    if (n < base) return false;
    return qpow(q, n - base) >= bound;
}

bool hyp_positive(const ParamPoint& p) {
    return p.q >= 2 && p.n >= 1 && p.k >= 1 && p.t >= 1 && p.s >= 1;
}

// shared hypothesis of the f1 lemmas: q^{n-(2k+2t+1)} >= 7sl
bool hyp_7sl(const ParamPoint& p) {
    long l = p.l.value_or(1);
    return hyp_positive(p) && l >= 1 && p.k >= p.t + 1 &&
           pow_hyp(p.n, 2 * p.k + 2 * p.t + 1, p.q, QInt(7) * p.s * l);
}

// shared hypothesis of the g1/f2/f3 lemmas: q^{n-(3k+3t+1)} >= 13s
bool hyp_13s(const ParamPoint& p) {
    return hyp_positive(p) && p.k >= p.t + 2 &&
           pow_hyp(p.n, 3 * p.k + 3 * p.t + 1, p.q, QInt(13) * p.s);
}

using Claim = std::vector<Comparison>;

Claim claim_basic_i(const ParamPoint& p) {
    return {{qbinom(p.k, 1, p.q), QInt(2) * qpow(p.q, p.k - 1), Cmp::LE}};
}

Claim claim_basic_ii(const ParamPoint& p) {
    QInt lo = qpow(p.q, p.n - p.k) * (qpow(p.q, p.k) - 1);
    QInt mid = qpow(p.q, p.n) - 1;
    QInt hi = qpow(p.q, p.n - p.k + 1) * (qpow(p.q, p.k) - 1);
    return {{lo, mid, Cmp::LT}, {mid, hi, Cmp::LT}};
}

Claim claim_basic_iii(const ParamPoint& p) {
    QInt mid = qbinom(p.n, p.k, p.q);
    return {{qpow(p.q, p.k * (p.n - p.k)), mid, Cmp::LT},
            {mid, qpow(p.q, p.k * (p.n - p.k + 1)), Cmp::LT}};
}

Claim claim_basic_iv(const ParamPoint& p) {
    return {{qbinom(p.n, p.k, p.q),
             qbinom(p.n - 1, p.k - 1, p.q) +
                 qpow(p.q, p.k) * qbinom(p.n - 1, p.k, p.q),
             Cmp::EQ}};
}

Claim claim_basic_v(const ParamPoint& p) {
    Claim c;
    QInt unit = qbinom(p.k - p.t + 1, 1, p.q);
    for (long i = 1; i <= p.k; ++i)
        for (long j = i; j <= p.k; ++j)
            c.push_back({ipow(unit, static_cast<unsigned long>(j - i)) *
                             qbinom(p.n - j, p.k - j, p.q),
                         qbinom(p.n - i, p.k - i, p.q), Cmp::LE});
    return c;
}

Claim claim_7_2(const ParamPoint& p) {
    return {{QInt(2) * qbinom(p.n, p.k, p.q),
             QInt(7) * qpow(p.q, p.k * (p.n - p.k)), Cmp::LE}};
}

Claim claim_eq1_identity(const ParamPoint& p) {
    AltSum a = alt_sum_identity(p.n, p.k, p.t, p.q);
    return {{a.lhs, a.rhs, Cmp::EQ}};
}

Claim claim_eq1_terms(const ParamPoint& p) {
    AltSum a = alt_sum_identity(p.n, p.k, p.t, p.q);
    Claim c;
    for (size_t i = 1; i < a.terms.size(); ++i)
        c.push_back({a.terms[i], a.terms[i - 1], Cmp::LT});
    return c;
}

Claim claim_f1_decreasing(const ParamPoint& p) {
    Claim c;
    for (long x = p.t; x <= p.k - 1; ++x)
        c.push_back({f1_at(p, x), f1_at(p, x + 1), Cmp::GT});
    return c;
}

Claim claim_f1_floor(const ParamPoint& p) {
    long l = p.l.value_or(1);
    QInt rhs = QInt(7) * l * p.s * qbinom(p.k, p.t, p.q) *
               binom(2 * p.k - 2 * p.t + 2, p.k - p.t + 1);
    return {{QInt(6) * f1_at(p, p.k - 1), rhs, Cmp::GT}};
}

Claim claim_g1_25_26(const ParamPoint& p) {
    QInt rhs = QInt(25) * qbinom(p.k - p.t + 1, 1, p.q) *
               qbinom(p.n - p.t - 1, p.k - p.t - 1, p.q) *
               qbinom(p.n - p.t, p.k - p.t, p.q);
    return {{QInt(26) * g1_at(p), rhs, Cmp::GT}};
}

Claim claim_g1_squared_sum(const ParamPoint& p) {
    QInt base = qbinom(p.k - p.t + 1, 1, p.q) *
                    qbinom(p.n - p.t - 1, p.k - p.t - 1, p.q) +
                QInt(p.s);
    return {{g1_at(p), base * base, Cmp::GT}};
}

Claim claim_f3_decreasing(const ParamPoint& p) {
    Claim c;
    for (long x = p.t + 1; x <= p.k - 1; ++x)
        c.push_back({f3_at(p, x), f3_at(p, x + 1), Cmp::GT});
    return c;
}

Claim claim_f2_increasing(const ParamPoint& p) {
    Claim c;
    for (long x = p.t + 1; x <= p.k - 1; ++x)
        c.push_back({f2_at(p, x + 1), f2_at(p, x), Cmp::GT});
    return c;
}

Claim claim_f2_product(const ParamPoint& p) {
    QInt other = qbinom(p.n - p.t, p.k - p.t, p.q) +
                 qpow(p.q, 2) * qbinom(p.k - p.t, 1, p.q) * qbinom(p.t, 1, p.q) *
                     qbinom(p.n - p.t - 1, p.k - p.t - 1, p.q) +
                 QInt(p.s);
    return {{f2_at(p, p.k) * other, g1_at(p), Cmp::LT}};
}

Claim claim_g1_lower_65i(const ParamPoint& p) {
    QInt lhs_no_s = qbinom(p.n - p.t, p.k - p.t, p.q) -
                    qpow(p.q, (p.k - p.t) * (p.k + 1 - p.t)) *
                        qbinom(p.n - p.k - 1, p.k - p.t, p.q);
    QInt second = qbinom(p.n - p.t, p.k - p.t, p.q) +
                  qpow(p.q, p.k - p.t + 1) * qbinom(p.t, 1, p.q);
    return {{g1_at(p), lhs_no_s * second, Cmp::GT}};
}

Claim claim_g1_lt_g2(const ParamPoint& p) {
    return {{g1_at(p), g2_at(p), Cmp::LT}};
}

struct LemmaDef {
    const char* id;
    bool (*hyp)(const ParamPoint&);
    Claim (*claim)(const ParamPoint&);
};

bool hyp_basic(const ParamPoint& p) {
    return p.q >= 2 && p.k >= 1 && p.n > p.k;
}
bool hyp_basic_v(const ParamPoint& p) {
    return p.q >= 2 && p.t >= 1 && p.k >= p.t && p.n >= 2 * p.k - p.t + 1;
}
bool hyp_7_2(const ParamPoint& p) {
    return p.q >= 2 && p.k >= 0 && p.n >= p.k;
}
bool hyp_eq1(const ParamPoint& p) {
    return p.q >= 2 && p.t >= 1 && p.k >= p.t && p.n > p.k;
}
bool hyp_g1_lt_g2(const ParamPoint& p) {
    return hyp_13s(p) && p.k <= 2 * p.t && p.t != 2;
}

const LemmaDef kLemmas[] = {
    {"basic-bounds.i", hyp_basic, claim_basic_i},
    {"basic-bounds.ii", hyp_basic, claim_basic_ii},
    {"basic-bounds.iii", hyp_basic, claim_basic_iii},
    {"basic-bounds.iv", hyp_basic, claim_basic_iv},
    {"basic-bounds.v", hyp_basic_v, claim_basic_v},
    {"qbinom-7-2", hyp_7_2, claim_7_2},
    {"eq1-identity", hyp_eq1, claim_eq1_identity},
    {"eq1-terms-decreasing", hyp_13s, claim_eq1_terms},
    {"f1-decreasing", hyp_7sl, claim_f1_decreasing},
    {"f1-floor", hyp_7sl, claim_f1_floor},
    {"g1-25-26", hyp_13s, claim_g1_25_26},
    {"g1-squared-sum", hyp_13s, claim_g1_squared_sum},
    {"f3-decreasing", hyp_13s, claim_f3_decreasing},
    {"f2-increasing", hyp_13s, claim_f2_increasing},
    {"f2-difference-positive", hyp_13s, claim_f2_increasing},
    {"f2-product-lt-g1", hyp_13s, claim_f2_product},
    {"g1-lower-65i", hyp_13s, claim_g1_lower_65i},
    {"g1-lt-g2", hyp_g1_lt_g2, claim_g1_lt_g2},
};

// hypothesis-only entries; their claims live in the families module
bool hyp_cover_bound(const ParamPoint& p) {
    return p.q >= 2 && p.t >= 1 && p.s >= 0 && p.k >= p.t + 1 && p.n >= 2 * p.k;
}
bool hyp_cross_covers(const ParamPoint& p) {
    return hyp_positive(p) && p.k >= p.t + 1 && p.n >= 2 * p.k + p.s - 1;
}

const LemmaDef* find_lemma(const std::string& id) {
    for (const auto& d : kLemmas)
        if (id == d.id) return &d;
    return nullptr;
}

LemmaVerdict check_one(const LemmaDef& def, const ParamPoint& p) {
    LemmaVerdict v;
    v.lemma_id = def.id;
    v.point = p;
    v.hypothesis_met = def.hyp(p);
    if (!v.hypothesis_met) return v;
    Claim comps = def.claim(p);
    if (comps.empty()) { // vacuous range
        v.claim_holds = true;
        return v;
    }
    size_t binding = 0;
    QInt best = comps[0].margin();
    bool all = comps[0].holds();
    for (size_t i = 1; i < comps.size(); ++i) {
        QInt m = comps[i].margin();
        if (!comps[i].holds()) all = false;
        if (m < best) {
            best = m;
            binding = i;
        }
    }
    v.claim_holds = all;
    v.lhs = comps[binding].lhs;
    v.rhs = comps[binding].rhs;
    return v;
}

} // namespace

bool hypothesis_check(const std::string& lemma_id, const ParamPoint& p) {
    if (lemma_id == "cover-bound") return hyp_cover_bound(p);
    if (lemma_id == "cross-covers") return hyp_cross_covers(p);
    const LemmaDef* def = find_lemma(lemma_id);
    if (!def) throw UnknownLemma(lemma_id);
    return def->hyp(p);
}

std::vector<LemmaVerdict> lemma_grid_check(const std::string& lemma_id,
                                           const std::vector<ParamPoint>& grid,
                                           bool parallel) {
    const LemmaDef* def = find_lemma(lemma_id);
    if (!def) throw UnknownLemma(lemma_id);
    std::vector<LemmaVerdict> out(grid.size());
    const long sz = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < sz; ++i) out[i] = check_one(*def, grid[i]);
    return out;
}

std::vector<std::string> known_lemmas() {
    std::vector<std::string> out;
    for (const auto& d : kLemmas) out.push_back(d.id);
    return out;
}

std::vector<ParamPoint> default_grid(const std::string& lemma_id) {
    if (!find_lemma(lemma_id)) throw UnknownLemma(lemma_id);
    std::vector<ParamPoint> grid;
    auto min_n = [](long base, int q, const QInt& bound) {
        long e = 0;
        QInt v = 1;
        while (v < bound) {
            v *= q;
            ++e;
        }
        return base + e;
    };

    if (lemma_id == "f1-decreasing" || lemma_id == "f1-floor") {
        for (long t : {1, 2, 3})
            for (long k : {t + 1, t + 2})
                for (int q : {2, 3})
                    for (long s : {1, 2})
                        for (long l : {1, 2}) {
                            ParamPoint p;
                            p.t = t;
                            p.k = k;
                            p.q = q;
                            p.s = s;
                            p.l = l;
                            p.n = min_n(2 * k + 2 * t + 1, q, QInt(7) * s * l);
                            grid.push_back(p);
                        }
        return grid;
    }
    if (lemma_id == "g1-lt-g2") {
        for (long k : {5, 6})
            for (int q : {2, 3})
                for (long s : {1, 2}) {
                    long base = min_n(3 * k + 10, q, QInt(13) * s);
                    for (long dn : {0, 1, 2}) {
                        ParamPoint p;
                        p.t = 3;
                        p.k = k;
                        p.q = q;
                        p.s = s;
                        p.n = base + dn;
                        grid.push_back(p);
                    }
                }
        return grid;
    }
    if (lemma_id == "eq1-terms-decreasing" || lemma_id == "g1-25-26" ||
        lemma_id == "g1-squared-sum" || lemma_id == "f3-decreasing" ||
        lemma_id == "f2-increasing" || lemma_id == "f2-difference-positive" ||
        lemma_id == "f2-product-lt-g1" || lemma_id == "g1-lower-65i") {
        for (long t : {1, 2, 3})
            for (long k : {t + 2, t + 3})
                for (int q : {2, 3})
                    for (long s : {1, 2}) {
                        ParamPoint p;
                        p.t = t;
                        p.k = k;
                        p.q = q;
                        p.s = s;
                        p.n = min_n(3 * k + 3 * t + 1, q, QInt(13) * s);
                        grid.push_back(p);
                    }
        return grid;
    }
    if (lemma_id == "eq1-identity") {
        for (int q : {2, 3})
            for (long t : {1, 2, 3})
                for (long k = t; k <= t + 5; ++k)
                    for (long n = k + 1; n <= 20; ++n) {
                        ParamPoint p;
                        p.t = t;
                        p.k = k;
                        p.q = q;
                        p.n = n;
                        grid.push_back(p);
                    }
        return grid;
    }
    if (lemma_id == "basic-bounds.v") {
        for (int q : {2, 3, 4, 5})
            for (long t : {1, 2})
                for (long k = t; k <= t + 3; ++k)
                    for (long n : {2 * k - t + 1, 2 * k - t + 3}) {
                        ParamPoint p;
                        p.t = t;
                        p.k = k;
                        p.q = q;
                        p.n = n;
                        grid.push_back(p);
                    }
        return grid;
    }
    if (lemma_id == "qbinom-7-2") {
        for (int q : {2, 3, 4, 5})
            for (long n : {0L, 1L, 2L, 3L, 5L, 8L, 13L, 21L, 34L, 40L})
                for (long k = 0; k <= std::min(n, 5L); ++k) {
                    ParamPoint p;
                    p.n = n;
                    p.k = k;
                    p.q = q;
                    grid.push_back(p);
                }
        return grid;
    }
    // basic-bounds.i-.iv
    for (int q : {2, 3, 4, 5})
        for (long n : {2L, 3L, 4L, 6L, 10L, 20L, 40L})
            for (long k = 1; k <= std::min(n - 1, 6L); ++k) {
                ParamPoint p;
                p.n = n;
                p.k = k;
                p.q = q;
                grid.push_back(p);
            }
    return grid;
}

std::vector<std::string> lemma_notes(const std::string& lemma_id) {
    if (lemma_id == "f2-increasing" || lemma_id == "f2-difference-positive" ||
        lemma_id == "f3-decreasing")
        return {"the monotonicity claim is stated for f3 but the supporting "
                "argument bounds f2(x+1)-f2(x); ids f3-decreasing and "
                "f2-difference-positive check the two readings separately"};
    if (lemma_id == "f1-floor")
        return {"the multiplier l carries no explicit range where the bound "
                "is stated; l >= 1 is enforced here (defaulting to 1)"};
    if (!std::any_of(std::begin(kLemmas), std::end(kLemmas),
                     [&](const LemmaDef& d) { return d.id == lemma_id; }))
        throw UnknownLemma(lemma_id);
    return {};
}

std::string verdicts_to_csv(const std::vector<LemmaVerdict>& verdicts) {
    std::ostringstream os;
    os << "lemma_id,n,k,t,s,q,x,hypothesis_met,claim_holds,lhs,rhs\n";
    for (const auto& v : verdicts) {
        os << v.lemma_id << ',' << v.point.n << ',' << v.point.k << ','
           << v.point.t << ',' << v.point.s << ',' << v.point.q << ',';
        if (v.point.x) os << *v.point.x;
        os << ',' << (v.hypothesis_met ? "true" : "false") << ','
           << (v.claim_holds ? "true" : "false") << ',';
        if (v.hypothesis_met) os << to_decimal(v.lhs) << ',' << to_decimal(v.rhs);
        else os << ',';
        os << '\n';
    }
    return os.str();
}

} // namespace qgrass
