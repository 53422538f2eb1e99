#pragma once

// Families of k-subspaces and the machinery built on them: the D(F;t)
// disjointness sets, the s-almost cross-t-intersecting pair predicate,
// t-covering number tau with all minimal covers, the named constructions
// (H1, H2, M and the two example pairs), greedy maximality closure, and
// the disjointness-sequence procedure with its validator.
//
// Every free "choose an element" step is resolved by the canonical
// subspace order, so all outputs are reproducible.

#include <optional>
#include <utility>
#include <vector>

#include "qgrass/enumerate.hpp"
#include "qgrass/qcalc.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

class Family {
  public:
    Family(const Ambient& amb, long k) : amb_(amb), k_(k) {}
    // Validates dimensions/ambients, sorts canonically, removes duplicates.
    Family(const Ambient& amb, long k, std::vector<Subspace> members);

    const Ambient& ambient() const { return amb_; }
    long k() const { return k_; }
    long size() const { return static_cast<long>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<Subspace>& members() const { return members_; }
    const Subspace& operator[](long i) const { return members_[static_cast<size_t>(i)]; }

    bool contains_member(const Subspace& s) const; // binary search
    bool add(const Subspace& s);                   // false if already present

  private:
    Ambient amb_;
    long k_ = 0;
    std::vector<Subspace> members_;
};

Family family_union(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);

// { G in g : dim(G cap f) < t }; f may have any dimension.
Family disjoint_set(const Family& g, const Subspace& f, long t);

struct PairStats {
    bool cross_t = false;    // every cross pair meets in dim >= t
    bool s_almost = false;   // both directional max disjointness counts <= s
    long max_violations = 0; // the larger of the two maxima
};
PairStats pair_predicate(const Family& fam_f, const Family& fam_g, long t, long s);
PairStats pair_predicate_serial(const Family& fam_f, const Family& fam_g, long t, long s);

struct CoverResult {
    long tau = 0;                        // least dimension of a t-cover
    std::vector<Subspace> minimal_covers; // all covers of dimension tau
    long t = 0;
};
// Ascending exhaustive search from d = t; a cover exists at d = n whenever
// t <= k, so the search terminates.
CoverResult tau_and_covers(const Family& fam, long t, long budget = kDefaultBudget);

// H1(X,E;k): k-subspaces of x containing e.
Family build_h1(const Subspace& x, const Subspace& e, long k,
                long budget = kDefaultBudget);
// H2(X,E;k): k-subspaces F of the full ambient with F cap x = e exactly.
Family build_h2(const Subspace& x, const Subspace& e, long k,
                long budget = kDefaultBudget);
// M(L;k,t): k-subspaces meeting l in dimension >= t.
Family build_m(const Subspace& l, long k, long t, long budget = kDefaultBudget);

enum class ExampleKind {
    almost, // F = H1(V,E;k) minus A,  G = H1(V,E;k) plus B
    cover,  // (H1(V,L;k), M(L;k,t))
};

// Optional overrides for the construction's free choices; whatever is left
// unset falls back to "first in canonical order". Index lists select from
// the canonically ordered candidate pools.
struct ExampleChoices {
    std::optional<Subspace> x; // (k+1)-space (almost)
    std::optional<Subspace> e; // t-space inside x (almost)
    std::optional<Subspace> l; // (t+1)-space (cover)
    std::optional<std::vector<long>> a_indices; // into H2(X,E;k)
    std::optional<std::vector<long>> b_indices; // into [X k] minus H1(X,E;k)
};

std::pair<Family, Family> build_example_pair(ExampleKind which, const ParamPoint& p,
                                             const ExampleChoices& choices = {},
                                             long budget = kDefaultBudget);

// Greedy completion: alternating sides starting with F, repeatedly add the
// first absent k-subspace (canonical order) whose addition keeps the pair
// s-almost cross-t-intersecting. The result is maximal as a pair.
std::pair<Family, Family> maximal_closure(const Family& fam_f, const Family& fam_g,
                                          long t, long s, long budget = kDefaultBudget);

struct SequenceTrace {
    long m = 0;
    std::vector<Subspace> f_seq, g_seq;
    std::vector<long> survivors; // |V_1|, |V_2|, ..., final remainder size
    // set when some surviving F meets every G in dim >= t (a t-cover of G);
    // the procedure stops there instead of extending the sequence
    std::optional<Subspace> cover_witness;
};

// Alternating selection with deterministic least-member picks:
// F_i = least survivor, G_i = least of D_G(F_i;t), then survivors lose
// D_F(G_i;t).
SequenceTrace disjointness_sequence(const Family& fam_f, const Family& fam_g, long t);

// Re-checks the trace from scratch: (i) dim(F_i cap G_i) < t,
// (ii) dim(F_i cap G_j) >= t for j < i, and either the cover-witness
// property or (iii) every member of fam_f is disjointness-covered by some G_i.
bool sequence_trace_valid(const SequenceTrace& trace, const Family& fam_f,
                          const Family& fam_g, long t);

// |{F in fam_f : h subseteq F}|  vs  the tau-based upper bound
// [k-t+1 1]^(tau - dim h) [n-tau k-tau] + s * sum_{i<tau-dim h} [k-t+1 1]^i
// with tau = tau_t(fam_g). Unmet preconditions surface as
// hypothesis_met = false, not exceptions.
LemmaVerdict cover_bound_check(const Family& fam_f, const Family& fam_g,
                               const Subspace& h, long t, long s,
                               long budget = kDefaultBudget);

} // namespace qgrass
