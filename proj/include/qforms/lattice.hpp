#pragma once

#include "qforms/arith.hpp"
#include "qforms/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qf {

/// Positive definite non-classic integral lattice of rank k, stored through
/// its doubled Gram matrix M = (2B(x_i,x_j)): symmetric, even diagonal,
/// positive definite.  The attached quadratic form is
///   f(x) = sum_{i<=j} a_ij x_i x_j,  a_ii = M[i][i]/2, a_ij = M[i][j] (i<j),
/// and the discriminant is dL = det(M).
///
/// Primitive by default (norm ideal Z); relaxed construction admits
/// imprimitive sublattices where an operation produces them.
class QuadLattice {
public:
    static QuadLattice from_gram2(const std::vector<std::vector<long long>>& gram2,
                                  bool relaxed = false);

    /// coeffs[{i,j}] = a_ij with 0 <= i <= j < rank (missing entries are 0).
    static QuadLattice from_coefficients(int rank,
                                         const std::map<std::pair<int, int>, long long>& coeffs);

    /// Binary form a x^2 + b xy + c y^2.
    static QuadLattice binary(long long a, long long b, long long c);

    /// Diagonal form sum a_i x_i^2.
    static QuadLattice diagonal(const std::vector<long long>& a);

    int rank() const { return rank_; }
    long long gram2(int i, int j) const { return gram_[static_cast<size_t>(i) * rank_ + j]; }
    const std::vector<long long>& gram2_flat() const { return gram_; }
    std::vector<std::vector<long long>> gram2_rows() const;

    /// Form coefficient a_ij (i <= j).
    long long coeff(int i, int j) const;

    Int discriminant() const;

    /// Q(x) = x M x^T / 2, exact.
    Int norm_of(const std::vector<long long>& x) const;

    bool operator==(const QuadLattice&) const = default;

private:
    QuadLattice() = default;
    int rank_ = 0;
    std::vector<long long> gram_;
};

struct ReductionData {
    /// Rows express the reduced basis in the original coordinates.
    std::vector<std::vector<long long>> basis;
    /// Gram2 of the reduced basis.
    QuadLattice reduced;
    /// Outer-diagonal coefficients of the Lagrange expansion of the reduced
    /// form: f = sum h_i (x_i + ...)^2, with prod 2 h_i = dL.
    std::vector<Rat> h;
    /// Exact successive minima mu_1 <= ... <= mu_k.
    std::vector<long long> minima;
};

/// Minkowski reduction for rank <= 4 (greedy shortest extendable vector,
/// lexicographic tie-break); LLL (delta = 0.99) with exact minima for ranks
/// 5..8.  Throws for rank > 8.
ReductionData reduce(const QuadLattice& L);

std::vector<long long> successive_minima(const QuadLattice& L);

/// Minima witnesses: y_i independent with Q(y_i) = mu_i, each the
/// lexicographically smallest sign-normalized choice.
std::vector<std::vector<long long>> minima_witnesses(const QuadLattice& L);

/// L(j) = (Q y_1 + ... + Q y_j) intersect L, the saturation of the span of
/// the first j minima witnesses.  May be imprimitive (relaxed validation).
/// Returned in its own basis; second member carries that basis as rows.
struct SublatticeData {
    QuadLattice lattice;
    std::vector<std::vector<long long>> basis;
};
SublatticeData minima_sublattice(const QuadLattice& L, int j);

/// Integral isometry test by backtracking over short-vector images after
/// comparing discriminants and theta prefixes.
bool isometric(const QuadLattice& a, const QuadLattice& b);

/// LLL on the Gram matrix with exact rational Gram-Schmidt.  Returns the
/// transform rows U (new basis in old coordinates) and the reduced Gram.
struct LLLResult {
    IntMat transform;
    IntMat gram;
};
LLLResult lll_reduce_gram(const IntMat& gram, const Rat& delta = Rat(99, 100));

/// Lagrange/Cholesky pivots of the form attached to a Gram2 matrix:
/// d_i and c_ij with f = sum d_i (x_i + sum_{j>i} c_ij x_j)^2.
struct Cholesky {
    std::vector<Rat> d;
    RatMat c;
};
Cholesky cholesky_form(const IntMat& gram2);

}  // namespace qf
