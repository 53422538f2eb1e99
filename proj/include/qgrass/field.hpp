#pragma once

// GF(q) arithmetic for prime powers 2 <= q <= 16, as dense lookup tables.
// Elements are integer codes 0..q-1: for prime q the residues themselves,
// for q = p^e the base-p digit encoding of polynomials over F_p (code
// sum c_i p^i stands for sum c_i X^i), so 0 is zero and 1 is one in every
// field. Higher layers treat codes as opaque and go through the tables.

#include <array>
#include <cstdint>
#include <optional>

#include "qgrass/errors.hpp"

namespace qgrass {

inline constexpr int kMaxFieldOrder = 16;

struct FieldTable {
    int q = 0;    // order
    int p = 0;    // characteristic
    int e = 0;    // extension degree, q = p^e
    int poly = 0; // non-leading coefficients of the chosen monic irreducible,
                  // encoded base p (poly(X) = X^e + sum digit_i X^i); 0 for e = 1
    std::array<std::array<uint8_t, kMaxFieldOrder>, kMaxFieldOrder> add{};
    std::array<std::array<uint8_t, kMaxFieldOrder>, kMaxFieldOrder> mul{};
    std::array<uint8_t, kMaxFieldOrder> neg{};
    std::array<uint8_t, kMaxFieldOrder> inv{}; // inv[0] unused

    uint8_t addf(uint8_t x, uint8_t y) const { return add[x][y]; }
    uint8_t mulf(uint8_t x, uint8_t y) const { return mul[x][y]; }
    uint8_t negf(uint8_t x) const { return neg[x]; }
    uint8_t invf(uint8_t x) const {
        if (x == 0) throw ZeroInverse();
        return inv[x];
    }
    uint8_t subf(uint8_t x, uint8_t y) const { return add[x][neg[y]]; }
};

// Deterministic construction: the reducing polynomial for GF(p^e) is the
// first irreducible X^e + c in the scan c = 0,1,2,... (base-p digits of c,
// high-degree digit most significant), i.e. the lexicographically smallest
// monic irreducible.
FieldTable build_field_table(int q);

enum class FieldOp { add, mul, neg, inv };

int field_eval(const FieldTable& t, FieldOp op, int x, std::optional<int> y = std::nullopt);

// Shared immutable table per order, built once on first use. Safe for
// concurrent readers.
const FieldTable& field_table(int q);

} // namespace qgrass
