#pragma once

#include "qforms/arith.hpp"

#include <vector>

namespace qf {

/// Row-major rectangular integer matrix; all helpers below use exact
/// big-integer arithmetic throughout.
using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

Int det_bareiss(IntMat m);

/// Leading principal minors all positive (symmetric input assumed).
bool positive_definite(const IntMat& m);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);

/// Row-style Hermite normal form of the row lattice; returns the nonzero
/// rows (a basis, pivots positive, entries above pivots reduced).
IntMat row_hnf(IntMat m);

/// Z-basis (as rows) of { x in Z^cols : m x^T = 0 }.  The result is
/// saturated by construction.  An empty matrix (no constraints) yields the
/// identity.
IntMat integer_kernel(const IntMat& m, int cols);

/// Basis of (Q-span of the rows of y) intersected with Z^cols.
IntMat saturate_rows(const IntMat& y, int cols);

/// Rank over Q.
int rank_rational(IntMat m);

long long checked_ll(const Int& v);

}  // namespace qf
