#pragma once

// Canonical subspaces of F_q^n. A Subspace is its reduced row-echelon basis
// (pivot columns strictly increasing, pivots 1, zeros above and below),
// stored row-major as bytes. Canonical form makes equality and hashing
// byte-level operations, and gives a deterministic total order:
//
//   compare by dimension, then by the pivot-column tuple, then by the
//   remaining (free) entries in row-major order.
//
// That is exactly the order in which the pivot-pattern enumerators emit, so
// "first subspace such that ..." picks are reproducible everywhere.

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qgrass/errors.hpp"
#include "qgrass/field.hpp"

namespace qgrass {

struct Ambient {
    int q = 0;
    int n = 0;

    Ambient() = default;
    Ambient(int q_, int n_) : q(q_), n(n_) {
        field_table(q); // validates q
        if (n < 1 || n > 31) throw DimensionMismatch("ambient dimension must be in 1..31");
    }
    const FieldTable& field() const { return field_table(q); }
    friend bool operator==(const Ambient& a, const Ambient& b) = default;
};

class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(const Ambient& amb) { return Subspace(amb, 0, {}); }
    static Subspace full(const Ambient& amb);

    // Trusted constructor: rows must already be a k x n RREF basis.
    static Subspace from_rref(const Ambient& amb, int k, std::vector<uint8_t> rows) {
        return Subspace(amb, k, std::move(rows));
    }

    const Ambient& ambient() const { return amb_; }
    int q() const { return amb_.q; }
    int n() const { return amb_.n; }
    int dim() const { return k_; }

    uint8_t entry(int i, int j) const { return rows_[static_cast<size_t>(i) * amb_.n + j]; }
    const uint8_t* row(int i) const { return rows_.data() + static_cast<size_t>(i) * amb_.n; }
    const std::vector<uint8_t>& raw() const { return rows_; }

    // Pivot column of each basis row (strictly increasing).
    std::vector<int> pivots() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.amb_ == b.amb_ && a.k_ == b.k_ && a.rows_ == b.rows_;
    }

  private:
    Subspace(const Ambient& amb, int k, std::vector<uint8_t> rows)
        : amb_(amb), k_(k), rows_(std::move(rows)) {}

    Ambient amb_{};
    int k_ = 0;
    std::vector<uint8_t> rows_; // k*n bytes, row-major RREF
};

// Three-way canonical comparison (see header comment for the order).
// Requires the same ambient.
int compare(const Subspace& a, const Subspace& b);
inline bool canonical_less(const Subspace& a, const Subspace& b) { return compare(a, b) < 0; }
inline bool operator<(const Subspace& a, const Subspace& b) { return canonical_less(a, b); }

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

// span{e_1..e_d}: the canonical-order minimum among d-subspaces, the
// default wherever a construction needs "some" subspace of dimension d.
Subspace coordinate_subspace(const Ambient& amb, long d);

// Row reduction entry point: spans arbitrary generating rows. Validates row
// length (DimensionMismatch) and entry range (EntryOutOfRange).
Subspace canonicalize(const Ambient& amb, const std::vector<std::vector<int>>& rows);
// Same, for byte rows already known to be in range.
Subspace span_of(const Ambient& amb, const std::vector<std::vector<uint8_t>>& rows);

// Lattice operations. All throw AmbientMismatch on mixed ambients.
std::pair<int, Subspace> intersect_dim(const Subspace& a, const Subspace& b);
Subspace sum_span(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Subspace& b); // b subseteq a
Subspace meet(const Subspace& a, const Subspace& b);

// dim(a cap b) without materializing the meet; the workhorse of the pair
// predicates (rank of the stacked bases, bit-packed when q = 2).
int intersection_dim(const Subspace& a, const Subspace& b);

// Change of coordinates for working inside a subspace: express s (s must be
// contained in base) in base's basis coordinates, yielding a subspace of
// F_q^{dim base}; lift_from inverts that.
Subspace express_in(const Subspace& s, const Subspace& base);
Subspace lift_from(const Subspace& s_coords, const Subspace& base);

} // namespace qgrass
