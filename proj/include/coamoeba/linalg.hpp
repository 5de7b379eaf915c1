#pragma once

#include <optional>

#include "coamoeba/rational.hpp"

namespace coamoeba {

// Exact rational linear algebra on dense row-major matrices. Everything here
// is deterministic: pivots are chosen by position, never by magnitude.

// Reduced row echelon form in place. Zero rows are removed. Returns the pivot
// column of each remaining row.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// One solution of A x = b, if the system is consistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

// Canonical basis of the right kernel of A (RREF back-substitution with unit
// free variables, then RREF of the resulting rows).
RatMat kernel_basis(const RatMat& a, int ncols);

RatVec mat_vec(const RatMat& a, const RatVec& x);

Rat det(RatMat m);

}  // namespace coamoeba
