#include "qforms/arith.hpp"

#include <algorithm>
#include <array>

namespace qf {

namespace {

Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

Int powmod(Int base, Int exp, const Int& m) {
    Int result = 1;
    base %= m;
    while (exp > 0) {
        if (bit_test(exp, 0)) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Deterministic below 3.317e24 with this base set.
bool miller_rabin(const Int& n) {
    static const std::array<int, 13> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    Int d = n - 1;
    unsigned s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    for (int a : bases) {
        if (n == a) return true;
        Int x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    if (!bit_test(n, 0)) return 2;
    // Brent's cycle variant; retries with a different increment on failure.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int q = 1;
        int count = 0;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mulmod(q, diff, n);
            if (++count % 32 == 0) {
                d = gcd(q, n);
                q = 1;
            }
        }
        if (d == 1) d = gcd(q, n);
        if (d != 1 && d != n) return d;
    }
}

void factor_into(Int n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Int Factorization::recompose() const {
    Int r = 1;
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.exponent; ++i) r *= f.prime;
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return miller_rabin(n);
}

Factorization factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be a positive integer");
    Factorization result;
    result.value = n;
    Int rest = n;
    std::vector<Int> primes;
    for (long long p = 2; p <= 65536 && (Int)(p) * p <= rest; p = (p == 2 ? 3 : p + 2)) {
        while (rest % p == 0) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    if (rest > 1) {
        if (rest <= Int(65537) * 65537)
            primes.push_back(rest);  // below trial bound squared, necessarily prime
        else
            factor_into(rest, primes);
    }
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        result.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return result;
}

unsigned ord_p(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("ord_p: argument must be nonzero");
    if (p < 2) throw std::invalid_argument("ord_p: p must be prime");
    if (n < 0) n = -n;
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

int kronecker(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (!bit_test(n, 0)) {
        if (!bit_test(a, 0)) return 0;
        unsigned e = 0;
        while (!bit_test(n, 0)) {
            n >>= 1;
            ++e;
        }
        if (e & 1u) {
            long long a8 = static_cast<long long>(a % 8);
            if (a8 < 0) a8 += 8;
            if (a8 == 3 || a8 == 5) result = -result;
        }
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (!bit_test(a, 0)) {
            a >>= 1;
            long long n8 = static_cast<long long>(n % 8);
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Int next_prime_geq(Int n) {
    if (n <= 2) return 2;
    if (!bit_test(n, 0)) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

PrimeStream::PrimeStream(Int start) : cursor_(std::max(start, Int(2))) {}

Int PrimeStream::next() {
    Int p = next_prime_geq(cursor_);
    cursor_ = p + 1;
    return p;
}

namespace {

// Square-class representative: a nonzero rational maps to num*den with all
// square factors retained (only the class matters to callers below).
Int square_class_int(const Rat& a) {
    if (a == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    return numerator(a) * denominator(a);
}

// valuation/unit split at p
std::pair<unsigned, Int> split_at(Int a, const Int& p) {
    unsigned v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return {v, a};
}

int eps2(const Int& u) { return static_cast<int>(((u - 1) / 2) % 2 ? 1 : 0); }

int omega2(const Int& u) {
    long long u8 = static_cast<long long>(u % 8);
    if (u8 < 0) u8 += 8;
    return (u8 == 1 || u8 == 7) ? 0 : 1;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    Int ai = square_class_int(a);
    Int bi = square_class_int(b);
    if (v.infinite) return (ai < 0 && bi < 0) ? -1 : 1;
    const Int& p = v.prime;
    if (!is_prime(p)) throw std::invalid_argument("hilbert_symbol: place must be prime or infinity");
    auto [alpha, u] = split_at(ai, p);
    auto [beta, w] = split_at(bi, p);
    int result = 1;
    if (p == 2) {
        int e = eps2(u) * eps2(w) + static_cast<int>(alpha % 2) * omega2(w) +
                static_cast<int>(beta % 2) * omega2(u);
        return (e % 2) ? -1 : 1;
    }
    if ((alpha & 1u) && (beta & 1u) && p % 4 == 3) result = -result;
    if (beta & 1u) result *= kronecker(u, p);
    if (alpha & 1u) result *= kronecker(w, p);
    return result;
}

bool is_square_at(const Rat& a, const Place& v) {
    if (a == 0) throw std::invalid_argument("is_square_at: argument must be nonzero");
    if (v.infinite) return a > 0;
    auto [val, unit] = split_at(square_class_int(a), v.prime);
    if (val % 2) return false;
    if (v.prime == 2) {
        long long u8 = static_cast<long long>(unit % 8);
        if (u8 < 0) u8 += 8;
        return u8 == 1;
    }
    return kronecker(unit, v.prime) == 1;
}

}  // namespace qf
