#pragma once

// Subspace enumeration. Generators build RREF bases directly from pivot
// patterns and free-entry fills (output-sensitive; nothing is filtered out
// of a larger set), so grassmannian_enumerate emits in the canonical order
// of subspace.hpp. The restricted enumerators (containing / fixed
// intersection type) work in quotient coordinates and lift.
//
// The *_count kernels are deliberately redundant with the closed-form
// counts: grassmannian_count re-validates every generated basis, and
// type_count counts by rank filtering instead of direct generation. They
// exist so tests can cross-check three independent routes. Each has an
// OpenMP version (parallel over pivot patterns) and a serial reference.

#include <functional>
#include <vector>

#include "qgrass/bigint.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

using SubspaceSink = std::function<void(const Subspace&)>;

// Refuse to emit more than this many subspaces unless the caller raises it.
inline constexpr long kDefaultBudget = 10'000'000;

// All k-subspaces of the ambient, ascending canonical order.
void grassmannian_enumerate(const Ambient& amb, long k, const SubspaceSink& sink,
                            long budget = kDefaultBudget);

// All k-subspaces containing e; count is qbinom(n - dim e, k - dim e, q).
void enumerate_containing(const Subspace& e, long k, const SubspaceSink& sink,
                          long budget = kDefaultBudget);

// All m-subspaces U with dim(U cap l) = h; count is
// nprime_count(0, 0, m, h, n - dim l, dim l, q).
void enumerate_type(const Subspace& l, long m, long h, const SubspaceSink& sink,
                    long budget = kDefaultBudget);

std::vector<Subspace> all_subspaces(const Ambient& amb, long k,
                                    long budget = kDefaultBudget);

// Counts every RREF basis by pattern + fill, validating each generated
// matrix really is RREF. Parallel over patterns.
QInt grassmannian_count(const Ambient& amb, long k);
QInt grassmannian_count_serial(const Ambient& amb, long k);

// Counts m-subspaces with dim(U cap l) = h by generating all m-subspaces
// and rank-filtering (independent of enumerate_type's construction).
QInt type_count(const Subspace& l, long m, long h);
QInt type_count_serial(const Subspace& l, long m, long h);

} // namespace qgrass
