#pragma once

#include "qforms/lattice.hpp"

#include <vector>

namespace qf {

/// Character attached to a rank-k discriminant at a good odd prime p.
/// Even k: kronecker((-1)^{k/2} dL, p).  Odd k: the symbol is evaluated on
/// the half-discriminant unit class, kronecker((-1)^{(k-1)/2} 2^k dL, p);
/// the literal doubled discriminant would contradict the rank-3 closed
/// formulas (see the h_factor tests, which pin this normalization).
int character_chi(int k, const Int& dL, const Int& p);

/// Local multiplier at a good prime:
///   even k:  sum_{t=0}^{2 mu} (chi p^{(k-2)/2})^t
///   odd  k:  sum_{t<=mu} p^{(k-2)t} - p^{(k-3)/2} chi sum_{t<mu} p^{(k-2)t}
Int h_factor(int k, const Int& dL, const Int& p, unsigned mu);

/// Good-prime local density, exact rational.
/// Even k, square_mode=false: density at `target`,
///   (sum_{t=0}^{mu} chi^t p^{(k-2)(t-mu)/2}) (1 - (-dL|p)/p), mu = ord_p(target).
/// square_mode=true: the target is supplied via its square root.
/// Odd k (square_mode required):
///   (1-p^{-1})(1-p^{-(k-2)mu}) / (p^{k-2}-1) + chi p^{-(k-2)mu-(k-1)/2} + 1.
Rat alpha_good(int k, const Int& dL, const Int& p, const Int& target, bool square_mode);

/// prod_{p | n2} h_factor(k, dL, p, ord_p(n2)); n2 must be odd and coprime
/// to dL and n1.
Int genus_ratio(const QuadLattice& L, const Int& n1, const Int& n2);

struct JordanComponent {
    unsigned scale = 0;        // ord_p of the diagonal entry
    bool unit_is_square = true;  // residue class of the unit part
};

/// Jordan splitting of L over Z_p for odd p, one entry per diagonal slot,
/// sorted by scale.
std::vector<JordanComponent> jordan_odd(const QuadLattice& L, const Int& p);

struct SpaceInvariants {
    Int disc_class;  // squarefree representative of d(V)
    int hasse = 1;   // S_p(V), product over i <= j of (a_i, a_j)_p
};

/// Invariants of V = L tensor Q at a place, from a rational diagonalization.
SpaceInvariants space_invariants(const QuadLattice& L, const Place& v);

/// Whether gen(L) represents at least one nonzero square.  Always true for
/// rank >= 4; decided from (d(V_p), S_p(V)) at p | 2 dL and infinity below.
bool genus_represents_square(const QuadLattice& L);

/// n represented by L over Z_p: residue enumeration modulo p^e with
/// e = ord_p(n) + ord_p(4 dL) + 3, accepting any solution whose value
/// valuation exceeds twice its gradient valuation (which then lifts).
bool local_represents(const QuadLattice& L, const Int& p, const Int& n);

/// n > 0 represented by gen(L): conjunction of local_represents over
/// p | 2 dL n (the real place is automatic for definite L).
bool genus_represents(const QuadLattice& L, const Int& n);

struct LocalProfile {
    Int p;
    bool dyadic = false;
    std::vector<JordanComponent> jordan;  // empty for p = 2
    Int disc_class;
    int hasse = 1;
};

LocalProfile local_profile(const QuadLattice& L, const Int& p);

}  // namespace qf
