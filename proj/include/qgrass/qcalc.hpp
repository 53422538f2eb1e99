#pragma once

// Gaussian binomial calculus: exact closed-form counts, the f/g bound
// functions, the alternating-sum identity, and per-lemma inequality
// checkers over parameter grids. Everything is exact QInt arithmetic;
// hypotheses stated with log_q terms are transcribed as integer power
// comparisons (n >= A + log_q B  <=>  n >= A and q^(n-A) >= B), and
// fractional bounds are cross-multiplied (e.g. 26*g1 > 25*rhs).

#include <optional>
#include <string>
#include <vector>

#include "qgrass/bigint.hpp"
#include "qgrass/errors.hpp"

namespace qgrass {

// [a b]_q. Total by convention: 1 if b = 0, 0 if b < 0 or b > a.
QInt qbinom(long a, long b, int q);

struct ParamPoint {
    long n = 1, k = 1, t = 1, s = 1;
    int q = 2;
    std::optional<long> x; // free variable of f1/f2/f3
    std::optional<long> l; // multiplier inside the f1 lemma hypothesis
};

// N'(m1,h1; m,h; e+l, e): number of type-(m,h) subspaces above a fixed
// type-(m1,h1) subspace, reference subspace of dimension l inside an
// (e+l)-dimensional space. Throws HypothesisViolated naming the failed
// nonvanishing inequality.
QInt nprime_count(long m1, long h1, long m, long h, long e, long l, int q);

enum class FWhich { f1, f2, f3 };
enum class GWhich { g1, g2, g3 };

QInt f_eval(FWhich which, const ParamPoint& p); // needs p.x (MissingX)
QInt g_eval(GWhich which, const ParamPoint& p);

struct AltSum {
    QInt lhs;                // [n-t k-t] - q^{(k-t)(k+1-t)} [n-k-1 k-t]
    QInt rhs;                // alternating sum of the terms
    std::vector<QInt> terms; // a_i, i = 1..k-t
    bool terms_strictly_decreasing = true;
};
AltSum alt_sum_identity(long n, long k, long t, int q);

bool hypothesis_check(const std::string& lemma_id, const ParamPoint& p);

struct LemmaVerdict {
    std::string lemma_id;
    ParamPoint point;
    bool hypothesis_met = false;
    bool claim_holds = false;
    // The two exact sides of the binding comparison (for multi-part claims,
    // the one with the smallest margin; on failure, the violating one).
    QInt lhs = 0, rhs = 0;
};

// Checks one lemma over a parameter grid. Points are independent and run
// under OpenMP when parallel is set; output order always equals grid order.
std::vector<LemmaVerdict> lemma_grid_check(const std::string& lemma_id,
                                           const std::vector<ParamPoint>& grid,
                                           bool parallel = true);

// Grid-checkable lemma identifiers (hypothesis-only identifiers such as
// "cover-bound" are accepted by hypothesis_check but not listed here).
std::vector<std::string> known_lemmas();

// Built-in default grid for a lemma (the one the inequality suites run).
std::vector<ParamPoint> default_grid(const std::string& lemma_id);

// Interpretation caveats attached to a lemma id (statement/argument
// mismatches, unstated parameter ranges); empty for most ids. Reports carry
// these so readers see them without consulting the code.
std::vector<std::string> lemma_notes(const std::string& lemma_id);

// CSV with header: lemma_id,n,k,t,s,q,x,hypothesis_met,claim_holds,lhs,rhs
std::string verdicts_to_csv(const std::vector<LemmaVerdict>& verdicts);

} // namespace qgrass
