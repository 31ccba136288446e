#pragma once

#include <optional>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

// Plain GF(2) row reduction helpers on byte vectors.  No column permutations
// here; these back rank/span/solve queries, not the standard-form machinery.

void xor_into(Bits& dst, const Bits& src);

// Reduces rows in place to row echelon form; returns pivot column per kept
// row.  Zero rows are dropped.
std::vector<int> gf2_rref(std::vector<Bits>& rows);

int gf2_rank(std::vector<Bits> rows);

// Solve sum_i c_i * basis[i] = target over GF(2).  basis need not be reduced.
// Returns the coefficient vector, or nullopt if target is outside the span.
std::optional<Bits> gf2_solve(const std::vector<Bits>& basis, const Bits& target);

bool gf2_in_span(const std::vector<Bits>& basis, const Bits& target);

bool gf2_same_span(const std::vector<Bits>& a, const std::vector<Bits>& b);

// Particular solution u of A u = rhs over GF(2) (free variables set to 0), or
// nullopt when the system is inconsistent.
std::optional<Bits> gf2_solve_system(const std::vector<Bits>& a_rows, const Bits& rhs);

}  // namespace qec
