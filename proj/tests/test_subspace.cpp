#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "qgrass/enumerate.hpp"
#include "qgrass/subspace.hpp"

using namespace qgrass;

namespace {

std::mt19937 rng(0x5eed5u);

std::vector<std::vector<int>> random_rows(const Ambient& amb, int nrows) {
    std::uniform_int_distribution<int> d(0, amb.q - 1);
    std::vector<std::vector<int>> rows(nrows, std::vector<int>(amb.n));
    for (auto& r : rows)
        for (auto& c : r) c = d(rng);
    return rows;
}

Subspace random_subspace(const Ambient& amb, int nrows) {
    return canonicalize(amb, random_rows(amb, nrows));
}

} // namespace

TEST_SUITE("subspace") {

TEST_CASE("ambient validates order and dimension") {
    CHECK_THROWS_AS(Ambient(6, 4), NotPrimePower);
    CHECK_THROWS_AS(Ambient(2, 0), DimensionMismatch);
    CHECK_THROWS_AS(Ambient(2, 32), DimensionMismatch);
    CHECK(Ambient(2, 31).n == 31);
}

TEST_CASE("canonicalize is a fixpoint on its own output") {
    for (int q : {2, 3, 4, 5}) {
        Ambient amb(q, 5);
        for (int trial = 0; trial < 40; ++trial) {
            Subspace s = random_subspace(amb, 1 + trial % 4);
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < s.dim(); ++i) {
                std::vector<int> r;
                for (int j = 0; j < amb.n; ++j) r.push_back(s.entry(i, j));
                rows.push_back(r);
            }
            CHECK(canonicalize(amb, rows) == s);
        }
    }
}

TEST_CASE("canonical form is invariant under row operations") {
    for (int q : {2, 3, 4}) {
        Ambient amb(q, 5);
        const FieldTable& f = amb.field();
        std::uniform_int_distribution<int> coef(0, q - 1);
        for (int trial = 0; trial < 60; ++trial) {
            auto rows = random_rows(amb, 3);
            Subspace before = canonicalize(amb, rows);
            // swap two rows, then add a multiple of one row to another
            std::swap(rows[0], rows[2]);
            int c = coef(rng);
            for (int j = 0; j < amb.n; ++j)
                rows[1][j] = f.addf(static_cast<uint8_t>(rows[1][j]),
                                    f.mulf(static_cast<uint8_t>(c),
                                           static_cast<uint8_t>(rows[0][j])));
            CHECK(canonicalize(amb, rows) == before);
        }
    }
}

TEST_CASE("canonicalize validates input") {
    Ambient amb(3, 4);
    CHECK_THROWS_AS(canonicalize(amb, {{1, 0, 0}}), DimensionMismatch);
    CHECK_THROWS_AS(canonicalize(amb, {{0, 0, 3, 0}}), EntryOutOfRange);
    CHECK_THROWS_AS(canonicalize(amb, {{0, 0, -1, 0}}), EntryOutOfRange);
    CHECK(canonicalize(amb, {}).dim() == 0);
}

TEST_CASE("pivots are strictly increasing and lead with 1") {
    Ambient amb(4, 6);
    for (int trial = 0; trial < 50; ++trial) {
        Subspace s = random_subspace(amb, 3);
        auto piv = s.pivots();
        REQUIRE(static_cast<int>(piv.size()) == s.dim());
        for (size_t i = 0; i + 1 < piv.size(); ++i) CHECK(piv[i] < piv[i + 1]);
        for (int i = 0; i < s.dim(); ++i) {
            CHECK(s.entry(i, piv[i]) == 1);
            for (int r = 0; r < s.dim(); ++r)
                if (r != i) CHECK(s.entry(r, piv[i]) == 0);
        }
    }
}

TEST_CASE("canonical order: dimension first, then pivots, then bytes") {
    Ambient amb(2, 4);
    Subspace z = Subspace::zero(amb);
    Subspace full = Subspace::full(amb);
    Subspace line = canonicalize(amb, {{1, 0, 0, 0}});
    CHECK(compare(z, line) < 0);
    CHECK(compare(line, full) < 0);
    CHECK(compare(line, line) == 0);
    CHECK(compare(full, z) > 0);
    // comparator is a strict weak order on a whole grassmannian
    auto all = all_subspaces(amb, 2);
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(compare(all[i], all[i + 1]) < 0);
}

TEST_CASE("coordinate_subspace is the canonical minimum of its dimension") {
    Ambient amb(3, 4);
    for (long d = 0; d <= 4; ++d) {
        Subspace c = coordinate_subspace(amb, d);
        CHECK(c.dim() == d);
        for (const Subspace& s : all_subspaces(amb, d)) CHECK(compare(c, s) <= 0);
    }
    CHECK_THROWS_AS(coordinate_subspace(amb, 5), DimensionOrder);
    CHECK_THROWS_AS(coordinate_subspace(amb, -1), DimensionOrder);
}

TEST_CASE("dimension formula dim(a cap b) + dim(a+b) = dim a + dim b") {
    for (int q : {2, 3, 4}) {
        Ambient amb(q, 6);
        for (int trial = 0; trial < 80; ++trial) {
            Subspace a = random_subspace(amb, 1 + trial % 4);
            Subspace b = random_subspace(amb, 1 + (trial / 2) % 4);
            auto [d, cap] = intersect_dim(a, b);
            Subspace sum = sum_span(a, b);
            CHECK(d == cap.dim());
            CHECK(d + sum.dim() == a.dim() + b.dim());
            CHECK(d == intersection_dim(a, b));
            CHECK(meet(a, b) == cap);
            CHECK(contains(a, cap));
            CHECK(contains(b, cap));
            CHECK(contains(sum, a));
            CHECK(contains(sum, b));
        }
    }
}

TEST_CASE("meet against enumeration filter") {
    Ambient amb(2, 4);
    Subspace a = canonicalize(amb, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    Subspace b = canonicalize(amb, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    Subspace cap = meet(a, b);
    CHECK(cap == canonicalize(amb, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
}

TEST_CASE("mixed ambients are rejected") {
    Ambient a2(2, 4), a3(3, 4), a2n5(2, 5);
    Subspace x = coordinate_subspace(a2, 2);
    Subspace y = coordinate_subspace(a3, 2);
    Subspace z = coordinate_subspace(a2n5, 2);
    CHECK_THROWS_AS(meet(x, y), AmbientMismatch);
    CHECK_THROWS_AS(sum_span(x, z), AmbientMismatch);
    CHECK_THROWS_AS((void)intersection_dim(x, y), AmbientMismatch);
    CHECK_THROWS_AS((void)compare(x, z), AmbientMismatch);
}

TEST_CASE("express_in / lift_from are mutually inverse") {
    for (int q : {2, 3}) {
        Ambient amb(q, 6);
        for (int trial = 0; trial < 60; ++trial) {
            Subspace base = random_subspace(amb, 4);
            if (base.dim() == 0) continue;
            Ambient inner(q, base.dim());
            Subspace coords = random_subspace(inner, 1 + trial % base.dim());
            Subspace lifted = lift_from(coords, base);
            CHECK(lifted.dim() == coords.dim());
            CHECK(contains(base, lifted));
            CHECK(express_in(lifted, base) == coords);
            CHECK(lift_from(express_in(lifted, base), base) == lifted);
        }
    }
}

TEST_CASE("express_in demands containment") {
    Ambient amb(2, 4);
    Subspace base = canonicalize(amb, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Subspace outside = canonicalize(amb, {{0, 0, 1, 0}});
    CHECK_THROWS_AS(express_in(outside, base), NotContained);
}

TEST_CASE("hashing separates a full grassmannian") {
    Ambient amb(2, 4);
    auto all = all_subspaces(amb, 2);
    std::unordered_set<size_t> seen;
    SubspaceHash hash;
    for (const auto& s : all) seen.insert(hash(s));
    CHECK(seen.size() == all.size()); // FNV-1a collision here would be news
    CHECK(hash(all[0]) == hash(all[0]));
}

TEST_CASE("streaming gives a non-empty readable form") {
    Ambient amb(2, 4);
    std::ostringstream os;
    os << canonicalize(amb, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(!os.str().empty());
    std::ostringstream oz;
    oz << Subspace::zero(amb);
    CHECK(!oz.str().empty());
}

} // TEST_SUITE
