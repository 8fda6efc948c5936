#pragma once

#include "qforms/lattice.hpp"

#include <functional>
#include <optional>

namespace qf {

/// Visit every nonzero vector with Q(x) <= bound, one representative per
/// +-pair, coordinates in the original basis of L.  The tree walk runs over
/// an LLL-reduced basis with floating-point interval pruning (one unit of
/// safety margin); every emitted vector and norm is re-verified in exact
/// integer arithmetic, so counts are bit-exact.
void sweep_vectors(const QuadLattice& L, long long bound,
                   const std::function<void(const std::vector<long long>&, long long)>& visit);

/// r(n, L) = |{x : Q(x) = n}|.  n = 0 gives 1.
Int count_representations(const QuadLattice& L, const Int& n);

struct CountResult {
    Int count;
    /// All vectors of norm n (both signs), sorted; empty unless requested.
    std::vector<std::vector<long long>> witnesses;
};
CountResult count_representations_witnessed(const QuadLattice& L, const Int& n);

/// Coefficients r(0..N, L) from a single sweep.
std::vector<Int> theta_series(const QuadLattice& L, long long N);

/// m_s(L): least n <= bound with r(n^2, L) > 0, or nullopt.
std::optional<long long> min_square(const QuadLattice& L, long long bound);

/// Hermite constant gamma_k, known exactly for k <= 8.
double hermite_gamma(int k);

/// Conservative reduction constant C_5(k) = k! (4/3)^{k(k-1)/2}.
double reduction_c5(int k);

/// t_i(k) = 2^k binom(k-1, i) C_5(k)^{(k-1-i)/2}.
double t_coefficient(int i, int k);

/// Elementary upper estimate for r(n, L), rank 2..8:
///   (2^{(3k-1)/2} gamma_k^{1/2} / dL^{(k-1)/2k}) n^{(k-1)/2}
///     + sum_{i=1}^{k-1} t_i(k) n^{(k-1-i)/2}.
double representation_upper_bound(const QuadLattice& L, const Int& n);

}  // namespace qf
