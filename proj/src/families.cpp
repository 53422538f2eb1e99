#include "qgrass/families.hpp"

#include <algorithm>
#include <unordered_set>

namespace qgrass {

Family::Family(const Ambient& amb, long k, std::vector<Subspace> members)
    : amb_(amb), k_(k), members_(std::move(members)) {
    for (const Subspace& s : members_) {
        if (!(s.ambient() == amb_)) throw AmbientMismatch();
        if (s.dim() != k_)
            throw DimensionMismatch("family member has dimension " +
                                    std::to_string(s.dim()) + ", expected " +
                                    std::to_string(k_));
    }
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains_member(const Subspace& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_less);
    return it != members_.end() && *it == s;
}

bool Family::add(const Subspace& s) {
    if (!(s.ambient() == amb_)) throw AmbientMismatch();
    if (s.dim() != k_) throw DimensionMismatch("added member has wrong dimension");
    auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_less);
    if (it != members_.end() && *it == s) return false;
    members_.insert(it, s);
    return true;
}

Family family_union(const Family& a, const Family& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
    if (a.k() != b.k()) throw DimensionMismatch("union of families of different k");
    std::vector<Subspace> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                   b.members().end(), std::back_inserter(out), canonical_less);
    return Family(a.ambient(), a.k(), std::move(out));
}

Family family_difference(const Family& a, const Family& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch();
    if (a.k() != b.k()) throw DimensionMismatch("difference of families of different k");
    std::vector<Subspace> out;
    std::set_difference(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out), canonical_less);
    return Family(a.ambient(), a.k(), std::move(out));
}

Family disjoint_set(const Family& g, const Subspace& f, long t) {
    if (!(g.ambient() == f.ambient())) throw AmbientMismatch();
    const long sz = g.size();
    std::vector<char> keep(static_cast<size_t>(sz), 0);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < sz; ++i)
        keep[static_cast<size_t>(i)] = intersection_dim(g[i], f) < t ? 1 : 0;
    std::vector<Subspace> out;
    for (long i = 0; i < sz; ++i)
        if (keep[static_cast<size_t>(i)]) out.push_back(g[i]);
    return Family(g.ambient(), g.k(), std::move(out));
}

namespace {

// max over members of `from` of |{other member meeting it in dim < t}|
long max_disjoint_count(const Family& from, const Family& other, long t, bool parallel) {
    const long nf = from.size(), ng = other.size();
    std::vector<long> cnt(static_cast<size_t>(nf), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < nf; ++i) {
        long c = 0;
        for (long j = 0; j < ng; ++j)
            if (intersection_dim(from[i], other[j]) < t) ++c;
        cnt[static_cast<size_t>(i)] = c;
    }
    long m = 0;
    for (long c : cnt) m = std::max(m, c);
    return m;
}

PairStats pair_stats_impl(const Family& f, const Family& g, long t, long s,
                          bool parallel) {
    if (!(f.ambient() == g.ambient())) throw AmbientMismatch();
    if (f.k() != g.k()) throw DimensionMismatch("pair predicate needs equal k");
    PairStats st;
    long mf = max_disjoint_count(f, g, t, parallel);
    long mg = max_disjoint_count(g, f, t, parallel);
    st.max_violations = std::max(mf, mg);
    st.cross_t = st.max_violations == 0;
    st.s_almost = st.max_violations <= s;
    return st;
}

} // namespace

PairStats pair_predicate(const Family& fam_f, const Family& fam_g, long t, long s) {
    return pair_stats_impl(fam_f, fam_g, t, s, true);
}

PairStats pair_predicate_serial(const Family& fam_f, const Family& fam_g, long t, long s) {
    return pair_stats_impl(fam_f, fam_g, t, s, false);
}

CoverResult tau_and_covers(const Family& fam, long t, long budget) {
    if (fam.empty()) throw EmptyFamily();
    if (t < 0) throw HypothesisViolated("t >= 0");
    if (t > fam.k()) throw HypothesisViolated("t <= k (members cannot carry a t-cover)");
    const Ambient& amb = fam.ambient();
    for (long d = t; d <= amb.n; ++d) {
        std::vector<Subspace> cands = all_subspaces(amb, d, budget);
        const long nc = static_cast<long>(cands.size());
        std::vector<char> ok(static_cast<size_t>(nc), 0);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nc; ++i) {
            bool covers = true;
            for (long j = 0; covers && j < fam.size(); ++j)
                covers = intersection_dim(cands[static_cast<size_t>(i)], fam[j]) >= t;
            ok[static_cast<size_t>(i)] = covers ? 1 : 0;
        }
        CoverResult res;
        res.t = t;
        res.tau = d;
        for (long i = 0; i < nc; ++i)
            if (ok[static_cast<size_t>(i)])
                res.minimal_covers.push_back(cands[static_cast<size_t>(i)]);
        if (!res.minimal_covers.empty()) return res;
    }
    throw Error("internal: no t-cover found up to dimension n");
}

Family build_h1(const Subspace& x, const Subspace& e, long k, long budget) {
    if (!(x.ambient() == e.ambient())) throw AmbientMismatch();
    if (!contains(x, e)) throw NotContained("e is not a subspace of x");
    if (k < e.dim() || k > x.dim()) throw DimensionOrder("need dim(e) <= k <= dim(x)");
    std::vector<Subspace> out;
    if (x.dim() == x.n()) {
        enumerate_containing(e, k, [&](const Subspace& s) { out.push_back(s); }, budget);
    } else {
        Subspace ec = express_in(e, x);
        enumerate_containing(
            ec, k, [&](const Subspace& s) { out.push_back(lift_from(s, x)); }, budget);
    }
    return Family(x.ambient(), k, std::move(out));
}

Family build_h2(const Subspace& x, const Subspace& e, long k, long budget) {
    if (!(x.ambient() == e.ambient())) throw AmbientMismatch();
    if (!contains(x, e)) throw NotContained("e is not a subspace of x");
    if (k < e.dim()) return Family(x.ambient(), k);
    std::vector<Subspace> out;
    enumerate_containing(
        e, k,
        [&](const Subspace& s) {
            if (intersection_dim(s, x) == e.dim()) out.push_back(s);
        },
        budget);
    return Family(x.ambient(), k, std::move(out));
}

Family build_m(const Subspace& l, long k, long t, long budget) {
    const Ambient& amb = l.ambient();
    std::vector<Subspace> out;
    for (long h = std::max(t, 0L); h <= std::min(k, static_cast<long>(l.dim())); ++h) {
        if (k - h > amb.n - l.dim()) continue; // no k-space meets l that sparsely
        enumerate_type(l, k, h, [&](const Subspace& s) { out.push_back(s); }, budget);
    }
    return Family(amb, k, std::move(out));
}

namespace {

std::vector<Subspace> pick_by_indices(const std::vector<Subspace>& pool,
                                      const std::vector<long>& idx, long want,
                                      const char* what) {
    if (static_cast<long>(idx.size()) != want)
        throw ChoiceOutOfRange(std::string(what) + ": need exactly " +
                               std::to_string(want) + " indices, got " +
                               std::to_string(idx.size()));
    std::vector<long> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ChoiceOutOfRange(std::string(what) + ": duplicate index");
    std::vector<Subspace> out;
    for (long i : idx) {
        if (i < 0 || i >= static_cast<long>(pool.size()))
            throw ChoiceOutOfRange(std::string(what) + ": index " + std::to_string(i) +
                                   " outside 0.." + std::to_string(pool.size() - 1));
        out.push_back(pool[static_cast<size_t>(i)]);
    }
    return out;
}

std::pair<Family, Family> example_almost(const ParamPoint& p,
                                         const ExampleChoices& choices, long budget) {
    if (p.t < 1 || p.k < p.t || p.s < 1)
        throw HypothesisViolated("need 1 <= t <= k and s >= 1");
    if (p.n < p.k + 1) throw HypothesisViolated("need n >= k+1 for the (k+1)-space X");
    const Ambient amb(p.q, static_cast<int>(p.n));
    const Subspace x = choices.x ? *choices.x : coordinate_subspace(amb, p.k + 1);
    if (!(x.ambient() == amb) || x.dim() != p.k + 1)
        throw HypothesisViolated("X must be a (k+1)-subspace of F_q^n");
    const Subspace e = choices.e
                           ? *choices.e
                           : build_h1(x, Subspace::zero(amb), p.t, budget)[0];
    if (!(e.ambient() == amb) || e.dim() != p.t || !contains(x, e))
        throw HypothesisViolated("E must be a t-subspace of X");

    QInt h2_size =
        ipow(static_cast<long>(p.q),
             static_cast<unsigned long>((p.k - p.t) * (p.k - p.t + 1))) *
        qbinom(p.n - p.k - 1, p.k - p.t, p.q);
    if (!(h2_size > p.s))
        throw HypothesisViolated("q^{(k-t)(k-t+1)} [n-k-1 k-t] > s");

    Family h1_v = build_h1(Subspace::full(amb), e, p.k, budget);
    Family h2 = build_h2(x, e, p.k, budget);
    if (QInt(h2.size()) != h2_size)
        throw Error("internal: H2 size disagrees with its closed form");

    const long size_a = h2.size() - p.s;
    std::vector<Subspace> a_members =
        choices.a_indices
            ? pick_by_indices(h2.members(), *choices.a_indices, size_a, "A")
            : std::vector<Subspace>(h2.members().begin(), h2.members().begin() + size_a);

    Family x_all = build_h1(x, Subspace::zero(amb), p.k, budget);
    Family x_with_e = build_h1(x, e, p.k, budget);
    Family b_pool = family_difference(x_all, x_with_e);
    QInt cap = ipow(static_cast<long>(p.q),
                    static_cast<unsigned long>(p.k - p.t + 1)) *
               qbinom(p.t, 1, p.q);
    const long size_b = QInt(p.s) <= cap ? p.s : static_cast<long>(cap.get_si());
    std::vector<Subspace> b_members =
        choices.b_indices
            ? pick_by_indices(b_pool.members(), *choices.b_indices, size_b, "B")
            : std::vector<Subspace>(b_pool.members().begin(),
                                    b_pool.members().begin() + size_b);

    Family f = family_difference(h1_v, Family(amb, p.k, a_members));
    Family g = family_union(h1_v, Family(amb, p.k, b_members));
    return {std::move(f), std::move(g)};
}

std::pair<Family, Family> example_cover(const ParamPoint& p,
                                        const ExampleChoices& choices, long budget) {
    if (p.t < 1 || p.k < p.t + 1)
        throw HypothesisViolated("need k+1 >= t+2, i.e. k >= t+1");
    if (p.n < p.k + 1) throw HypothesisViolated("need n >= k+1");
    const Ambient amb(p.q, static_cast<int>(p.n));
    const Subspace l = choices.l ? *choices.l : coordinate_subspace(amb, p.t + 1);
    if (!(l.ambient() == amb) || l.dim() != p.t + 1)
        throw HypothesisViolated("L must be a (t+1)-subspace of F_q^n");
    Family f = build_h1(Subspace::full(amb), l, p.k, budget);
    Family g = build_m(l, p.k, p.t, budget);
    return {std::move(f), std::move(g)};
}

} // namespace

std::pair<Family, Family> build_example_pair(ExampleKind which, const ParamPoint& p,
                                             const ExampleChoices& choices, long budget) {
    if (which == ExampleKind::almost) return example_almost(p, choices, budget);
    return example_cover(p, choices, budget);
}

std::pair<Family, Family> maximal_closure(const Family& fam_f, const Family& fam_g,
                                          long t, long s, long budget) {
    if (!(fam_f.ambient() == fam_g.ambient())) throw AmbientMismatch();
    if (fam_f.k() != fam_g.k()) throw DimensionMismatch("closure needs equal k");
    if (!pair_predicate(fam_f, fam_g, t, s).s_almost)
        throw HypothesisViolated("pair must already be s-almost cross-t-intersecting");

    const Ambient& amb = fam_f.ambient();
    const long k = fam_f.k();
    const std::vector<Subspace> cands = all_subspaces(amb, k, budget);

    std::vector<Subspace> fm = fam_f.members(), gm = fam_g.members();
    std::unordered_set<Subspace, SubspaceHash> fset(fm.begin(), fm.end());
    std::unordered_set<Subspace, SubspaceHash> gset(gm.begin(), gm.end());
    auto count_disjoint = [&](const Subspace& c, const std::vector<Subspace>& other,
                              std::vector<long>& hits) {
        hits.clear();
        for (size_t j = 0; j < other.size(); ++j)
            if (intersection_dim(c, other[j]) < t) hits.push_back(static_cast<long>(j));
    };
    // violation counts per current member
    std::vector<long> vf(fm.size()), vg(gm.size());
    std::vector<long> hits;
    for (size_t i = 0; i < fm.size(); ++i) {
        count_disjoint(fm[i], gm, hits);
        vf[i] = static_cast<long>(hits.size());
    }
    for (size_t j = 0; j < gm.size(); ++j) {
        count_disjoint(gm[j], fm, hits);
        vg[j] = static_cast<long>(hits.size());
    }

    // Adding to one side only tightens future additions, so "no admissible
    // candidate" is permanent per side.
    auto try_add = [&](std::vector<Subspace>& mine,
                       std::unordered_set<Subspace, SubspaceHash>& mineset,
                       std::vector<long>& vmine, const std::vector<Subspace>& other,
                       std::vector<long>& vother) {
        for (const Subspace& c : cands) {
            if (mineset.count(c)) continue;
            count_disjoint(c, other, hits);
            if (static_cast<long>(hits.size()) > s) continue;
            bool ok = true;
            for (long j : hits)
                if (vother[static_cast<size_t>(j)] + 1 > s) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (long j : hits) ++vother[static_cast<size_t>(j)];
            mine.push_back(c);
            mineset.insert(c);
            vmine.push_back(static_cast<long>(hits.size()));
            return true;
        }
        return false;
    };

    bool f_open = true, g_open = true, f_turn = true;
    while (f_open || g_open) {
        if (f_turn && f_open) f_open = try_add(fm, fset, vf, gm, vg);
        else if (!f_turn && g_open) g_open = try_add(gm, gset, vg, fm, vf);
        f_turn = !f_turn;
    }
    return {Family(amb, k, std::move(fm)), Family(amb, k, std::move(gm))};
}

SequenceTrace disjointness_sequence(const Family& fam_f, const Family& fam_g, long t) {
    if (!(fam_f.ambient() == fam_g.ambient())) throw AmbientMismatch();
    if (fam_f.k() != fam_g.k()) throw DimensionMismatch("sequence needs equal k");
    SequenceTrace tr;
    std::vector<Subspace> vi = fam_f.members(); // canonical order, least first
    tr.survivors.push_back(static_cast<long>(vi.size()));
    while (!vi.empty()) {
        const Subspace fi = vi.front();
        Family d = disjoint_set(fam_g, fi, t);
        if (d.empty()) {
            tr.cover_witness = fi;
            break;
        }
        const Subspace gi = d[0];
        std::erase_if(vi, [&](const Subspace& f2) { return intersection_dim(f2, gi) < t; });
        tr.f_seq.push_back(fi);
        tr.g_seq.push_back(gi);
        tr.survivors.push_back(static_cast<long>(vi.size()));
    }
    tr.m = static_cast<long>(tr.f_seq.size());
    if (!sequence_trace_valid(tr, fam_f, fam_g, t))
        throw Error("internal: constructed sequence trace fails its own validator");
    return tr;
}

bool sequence_trace_valid(const SequenceTrace& trace, const Family& fam_f,
                          const Family& fam_g, long t) {
    if (trace.f_seq.size() != trace.g_seq.size()) return false;
    if (trace.m != static_cast<long>(trace.f_seq.size())) return false;
    for (const Subspace& fi : trace.f_seq)
        if (!fam_f.contains_member(fi)) return false;
    for (const Subspace& gi : trace.g_seq)
        if (!fam_g.contains_member(gi)) return false;
    for (size_t i = 0; i < trace.f_seq.size(); ++i) {
        if (intersection_dim(trace.f_seq[i], trace.g_seq[i]) >= t) return false; // (i)
        for (size_t j = 0; j < i; ++j)                                           // (ii)
            if (intersection_dim(trace.f_seq[i], trace.g_seq[j]) < t) return false;
    }
    if (trace.cover_witness) {
        if (!fam_f.contains_member(*trace.cover_witness)) return false;
        for (long j = 0; j < fam_g.size(); ++j)
            if (intersection_dim(*trace.cover_witness, fam_g[j]) < t) return false;
        return true;
    }
    for (long i = 0; i < fam_f.size(); ++i) { // (iii)
        bool covered = false;
        for (const Subspace& gj : trace.g_seq)
            if (intersection_dim(fam_f[i], gj) < t) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

LemmaVerdict cover_bound_check(const Family& fam_f, const Family& fam_g,
                               const Subspace& h, long t, long s, long budget) {
    if (!(fam_f.ambient() == fam_g.ambient()) || !(h.ambient() == fam_f.ambient()))
        throw AmbientMismatch();
    const Ambient& amb = fam_f.ambient();
    LemmaVerdict v;
    v.lemma_id = "cover-bound";
    v.point.n = amb.n;
    v.point.k = fam_f.k();
    v.point.t = t;
    v.point.s = s;
    v.point.q = amb.q;

    if (!hypothesis_check("cover-bound", v.point)) return v;
    if (fam_g.empty() || fam_f.k() != fam_g.k()) return v;
    if (!pair_predicate(fam_f, fam_g, t, s).s_almost) return v;
    const long tau = tau_and_covers(fam_g, t, budget).tau;
    if (h.dim() < 1 || h.dim() > tau || tau > fam_f.k()) return v;
    v.hypothesis_met = true;

    long fh = 0;
    for (long i = 0; i < fam_f.size(); ++i)
        if (contains(fam_f[i], h)) ++fh;

    const long k = fam_f.k(), dh = h.dim();
    QInt unit = qbinom(k - t + 1, 1, amb.q);
    QInt geom = 0, pw = 1;
    for (long i = 0; i < tau - dh; ++i) {
        geom += pw;
        pw *= unit;
    }
    v.lhs = fh;
    v.rhs = ipow(unit, static_cast<unsigned long>(tau - dh)) *
                qbinom(amb.n - tau, k - tau, amb.q) +
            QInt(s) * geom;
    v.claim_holds = v.lhs <= v.rhs;
    return v;
}

} // namespace qgrass
