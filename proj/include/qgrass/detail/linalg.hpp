#pragma once

// Row-reduction kernels shared by the subspace ops and the enumerators.
// Two flavors behind the same facade: GF(2) rows live in single machine
// words (column j = bit j), everything else works on byte rows through the
// field tables. Callers pick the flavor once per operation, not per entry.

#include <cstdint>

#include "qgrass/field.hpp"

namespace qgrass::detail {

// In-place RREF of a rows x cols byte matrix. Returns the rank; the first
// `rank` rows end up as the canonical RREF, the rest are zero.
int rref_bytes(const FieldTable& f, uint8_t* m, int rows, int cols);

// In-place RREF of bitmask rows. Returns rank; nonzero rows first, sorted
// by pivot. Works for any width up to 63 (used at width 2n for the
// intersection kernel).
int rref_gf2(uint64_t* rows, int nrows);

inline uint64_t pack_gf2(const uint8_t* row, int n) {
    uint64_t m = 0;
    for (int j = 0; j < n; ++j) m |= static_cast<uint64_t>(row[j] & 1u) << j;
    return m;
}

inline void unpack_gf2(uint64_t m, uint8_t* row, int n) {
    for (int j = 0; j < n; ++j) row[j] = static_cast<uint8_t>((m >> j) & 1u);
}

// Rank of the two bases stacked, inputs untouched.
int stacked_rank(const FieldTable& f, int n, const uint8_t* a, int ka, const uint8_t* b, int kb);

} // namespace qgrass::detail
