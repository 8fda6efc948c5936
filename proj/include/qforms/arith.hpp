#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace qf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct FactorEntry {
    Int prime;
    unsigned exponent = 0;
};

/// Exact factorization of a positive integer; primes strictly increasing,
/// value 1 has an empty factor list.
struct Factorization {
    Int value;
    std::vector<FactorEntry> factors;

    /// Recompose the product of prime powers.
    Int recompose() const;
};

/// Trial division up to 2^16, then Pollard rho with a deterministic
/// Miller-Rabin base set (valid below 3.3e24).  Throws on n < 1.
Factorization factorize(const Int& n);

/// Largest e with p^e | n.  n must be nonzero; the sign of n is ignored.
unsigned ord_p(Int n, const Int& p);

/// Full Kronecker symbol (a|n); equals the Legendre symbol for odd prime n.
int kronecker(Int a, Int n);

bool is_prime(const Int& n);

/// Smallest prime >= n.
Int next_prime_geq(Int n);

/// Ordered stream of the primes >= start.
class PrimeStream {
public:
    explicit PrimeStream(Int start);
    Int next();

private:
    Int cursor_;
};

/// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    Int prime = 0;

    static Place infinity() { return Place{true, 0}; }
    static Place at(Int p) { return Place{false, std::move(p)}; }

    bool operator==(const Place&) const = default;
};

/// Hilbert symbol (a,b)_v in {-1,1}.  1 iff a x^2 + b y^2 = z^2 has a
/// nontrivial solution over the completion at v.  a, b must be nonzero;
/// only their square classes matter.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Whether a nonzero rational is a square in the completion at v.
bool is_square_at(const Rat& a, const Place& v);

}  // namespace qf
