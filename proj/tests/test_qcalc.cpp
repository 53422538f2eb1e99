#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "qgrass/enumerate.hpp"
#include "qgrass/qcalc.hpp"

using namespace qgrass;

TEST_SUITE("qcalc") {

TEST_CASE("gaussian binomial base values") {
    CHECK(qbinom(4, 2, 2) == 35);
    CHECK(qbinom(5, 2, 2) == 155);
    CHECK(qbinom(5, 3, 2) == 155);
    CHECK(qbinom(4, 2, 3) == 130);
    CHECK(qbinom(3, 1, 3) == 13);
    CHECK(qbinom(2, 1, 2) == 3);
    CHECK(qbinom(1, 1, 5) == 1);
}

TEST_CASE("conventions at the boundary") {
    for (int q : {2, 3, 4, 5}) {
        CHECK(qbinom(0, 0, q) == 1);
        CHECK(qbinom(7, 0, q) == 1);
        CHECK(qbinom(3, -1, q) == 0);
        CHECK(qbinom(3, 4, q) == 0);
        CHECK(qbinom(-2, 1, q) == 0);
        CHECK(qbinom(6, 6, q) == 1);
    }
}

TEST_CASE("pascal analog and symmetry across the full desk range") {
    for (int q : {2, 3, 4, 5})
        for (long n = 1; n <= 40; ++n)
            for (long k = 0; k <= n; ++k) {
                CHECK(qbinom(n, k, q) == qbinom(n, n - k, q));
                if (k >= 1)
                    CHECK(qbinom(n, k, q) ==
                          ipow(static_cast<long>(q), static_cast<unsigned long>(k)) *
                                  qbinom(n - 1, k, q) +
                              qbinom(n - 1, k - 1, q));
            }
}

TEST_CASE("counting-lemma value against the enumeration kernels") {
    // spot values frozen from the type enumeration in F_2^5
    CHECK(nprime_count(0, 0, 2, 1, 3, 2, 2) == 42);
    CHECK(nprime_count(0, 0, 2, 0, 3, 2, 2) == 112);
    CHECK(nprime_count(0, 0, 5, 2, 3, 2, 2) == 1);
    // full sweep against the rank-filter kernel
    for (int q : {2, 3}) {
        Ambient amb(q, 5);
        for (int dl = 1; dl <= 4; ++dl) {
            Subspace l = coordinate_subspace(amb, dl);
            for (long m = 0; m <= 5; ++m)
                for (long h = std::max(0L, m - (5 - dl));
                     h <= std::min(m, static_cast<long>(dl)); ++h)
                    CHECK(nprime_count(0, 0, m, h, 5 - dl, dl, q) == type_count(l, m, h));
        }
    }
}

TEST_CASE("counting-lemma hypotheses are named when violated") {
    auto msg_of = [](auto fn) {
        try {
            fn();
        } catch (const HypothesisViolated& e) {
            return std::string(e.what());
        }
        return std::string("(no throw)");
    };
    CHECK(msg_of([] { nprime_count(1, -1, 2, 1, 3, 2, 2); }).find("h1") != std::string::npos);
    CHECK(msg_of([] { nprime_count(1, 2, 2, 1, 3, 2, 2); }) != "(no throw)");
    CHECK(msg_of([] { nprime_count(0, 0, 2, 3, 3, 2, 2); }) != "(no throw)");
    CHECK(msg_of([] { nprime_count(2, 1, 2, 2, 3, 2, 2); }) != "(no throw)");
    CHECK(msg_of([] { nprime_count(0, 0, 6, 1, 3, 2, 2); }) != "(no throw)");
}

TEST_CASE("f evaluation boundaries") {
    ParamPoint p;
    p.n = 9;
    p.k = 3;
    p.t = 1;
    p.s = 1;
    p.q = 2;
    CHECK_THROWS_AS(f_eval(FWhich::f1, p), MissingX); // x unset
    p.x = 0;
    CHECK_THROWS_AS(f_eval(FWhich::f1, p), HypothesisViolated); // x < t
    p.x = 4;
    CHECK_THROWS_AS(f_eval(FWhich::f1, p), HypothesisViolated); // x > k
    // x = t collapses f1 to the plain count of k-spaces over a t-space
    p.x = 1;
    CHECK(f_eval(FWhich::f1, p) == qbinom(8, 2, 2));
}

TEST_CASE("g evaluation frozen values") {
    ParamPoint p;
    p.q = 2;
    p.n = 6;
    p.k = 2;
    p.t = 1;
    p.s = 1;
    CHECK(g_eval(GWhich::g1, p) == 128);
    p.n = 5;
    p.s = 0;
    CHECK(g_eval(GWhich::g2, p) == 43);
    ParamPoint bad = p;
    bad.t = 0;
    CHECK_THROWS_AS(g_eval(GWhich::g1, bad), HypothesisViolated);
    bad = p;
    bad.s = -1;
    CHECK_THROWS_AS(g_eval(GWhich::g1, bad), HypothesisViolated);
}

TEST_CASE("alternating-sum identity on a wide grid") {
    for (int q : {2, 3})
        for (long t = 1; t <= 3; ++t)
            for (long k = t; k <= t + 5; ++k)
                for (long n = k + 1; n <= 20; ++n) {
                    AltSum a = alt_sum_identity(n, k, t, q);
                    CHECK(a.lhs == a.rhs);
                    CHECK(static_cast<long>(a.terms.size()) == k - t);
                }
}

TEST_CASE("hypothesis transcription for the power-of-q thresholds") {
    ParamPoint p;
    p.q = 2;
    p.k = 2;
    p.t = 1;
    p.s = 1;
    p.l = 1;
    p.n = 2 * p.k + 2 * p.t + 1; // q^0 = 1 < 7sl
    CHECK(!hypothesis_check("f1-decreasing", p));
    p.n += 3; // q^3 = 8 >= 7
    CHECK(hypothesis_check("f1-decreasing", p));
    p.k = 3;  // 13s family: k >= t+2
    p.n = 3 * p.k + 3 * p.t + 1;
    CHECK(!hypothesis_check("f3-decreasing", p)); // q^0 = 1 < 13
    p.n += 4; // q^4 = 16 >= 13
    CHECK(hypothesis_check("f3-decreasing", p));
    p.k = 2; // k < t+2
    p.n = 40;
    CHECK(!hypothesis_check("f3-decreasing", p));
    CHECK_THROWS_AS(hypothesis_check("no-such-lemma", p), UnknownLemma);
}

TEST_CASE("every default grid point of every lemma passes") {
    for (const std::string& id : known_lemmas()) {
        auto grid = default_grid(id);
        CHECK(!grid.empty());
        for (const LemmaVerdict& v : lemma_grid_check(id, grid)) {
            if (!v.hypothesis_met) continue;
            INFO(id, " at n=", v.point.n, " k=", v.point.k, " t=", v.point.t,
                 " s=", v.point.s, " q=", v.point.q);
            CHECK(v.claim_holds);
        }
    }
}

TEST_CASE("acceptance-grade grids have at least 20 live points") {
    for (const char* id :
         {"f1-decreasing", "f3-decreasing", "f2-difference-positive", "g1-25-26",
          "g1-squared-sum", "f2-product-lt-g1", "g1-lt-g2"}) {
        long live = 0;
        for (const auto& p : default_grid(id))
            if (hypothesis_check(id, p)) ++live;
        INFO(id);
        CHECK(live >= 20);
    }
}

TEST_CASE("the two readings of the monotonicity lemma agree") {
    auto grid = default_grid("f2-difference-positive");
    auto a = lemma_grid_check("f2-increasing", grid);
    auto b = lemma_grid_check("f2-difference-positive", grid);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].hypothesis_met == b[i].hypothesis_met);
        CHECK(a[i].claim_holds == b[i].claim_holds);
    }
    CHECK(!lemma_notes("f2-increasing").empty());
    CHECK(lemma_notes("basic-bounds.i").empty());
    CHECK_THROWS_AS(lemma_notes("no-such-lemma"), UnknownLemma);
}

TEST_CASE("unknown lemma ids are rejected up front") {
    CHECK_THROWS_AS(lemma_grid_check("nope", {}), UnknownLemma);
    auto ids = known_lemmas();
    CHECK(std::find(ids.begin(), ids.end(), "f1-decreasing") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "g1-lt-g2") != ids.end());
    CHECK(ids.size() >= 18);
}

TEST_CASE("csv layout is frozen") {
    ParamPoint p;
    p.n = 9;
    p.k = 2;
    p.t = 1;
    p.s = 1;
    p.q = 2;
    p.x = 2;
    LemmaVerdict met;
    met.lemma_id = "demo";
    met.point = p;
    met.hypothesis_met = true;
    met.claim_holds = true;
    met.lhs = 10;
    met.rhs = 3;
    LemmaVerdict unmet;
    unmet.lemma_id = "demo";
    unmet.point = p;
    unmet.point.x.reset();
    std::string csv = verdicts_to_csv({met, unmet});
    CHECK(csv ==
          "lemma_id,n,k,t,s,q,x,hypothesis_met,claim_holds,lhs,rhs\n"
          "demo,9,2,1,1,2,2,true,true,10,3\n"
          "demo,9,2,1,1,2,,false,false,,\n");
}

TEST_CASE("grid check runs identically with and without threads") {
    auto grid = default_grid("basic-bounds.v");
    auto par = lemma_grid_check("basic-bounds.v", grid, true);
    auto ser = lemma_grid_check("basic-bounds.v", grid, false);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].hypothesis_met == ser[i].hypothesis_met);
        CHECK(par[i].claim_holds == ser[i].claim_holds);
        CHECK(par[i].lhs == ser[i].lhs);
        CHECK(par[i].rhs == ser[i].rhs);
    }
}

} // TEST_SUITE
