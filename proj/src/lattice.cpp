#include "qforms/lattice.hpp"

#include "qforms/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qf {

namespace {

IntMat to_intmat(const std::vector<std::vector<long long>>& m) {
    IntMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return r;
}

std::vector<std::vector<long long>> to_llmat(const IntMat& m) {
    std::vector<std::vector<long long>> r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) r[i][j] = checked_ll(m[i][j]);
    }
    return r;
}

// sign-normalize: first nonzero coordinate positive
void normalize_sign(std::vector<long long>& v) {
    for (long long x : v) {
        if (x > 0) return;
        if (x < 0) {
            for (auto& y : v) y = -y;
            return;
        }
    }
}

}  // namespace

std::vector<std::vector<long long>> QuadLattice::gram2_rows() const {
    std::vector<std::vector<long long>> rows(rank_);
    for (int i = 0; i < rank_; ++i) {
        rows[i].resize(rank_);
        for (int j = 0; j < rank_; ++j) rows[i][j] = gram2(i, j);
    }
    return rows;
}

long long QuadLattice::coeff(int i, int j) const {
    if (i == j) return gram2(i, i) / 2;
    return gram2(std::min(i, j), std::max(i, j));
}

Int QuadLattice::discriminant() const { return det_bareiss(to_intmat(gram2_rows())); }

Int QuadLattice::norm_of(const std::vector<long long>& x) const {
    Int twice = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) twice += Int(gram2(i, j)) * x[i] * x[j];
    }
    return twice / 2;
}

QuadLattice QuadLattice::from_gram2(const std::vector<std::vector<long long>>& gram2,
                                    bool relaxed) {
    const int k = static_cast<int>(gram2.size());
    if (k < 1) throw std::invalid_argument("lattice: rank must be at least 1");
    QuadLattice L;
    L.rank_ = k;
    L.gram_.resize(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(gram2[i].size()) != k)
            throw std::invalid_argument("lattice: Gram matrix must be square");
        for (int j = 0; j < k; ++j) L.gram_[static_cast<size_t>(i) * k + j] = gram2[i][j];
    }
    for (int i = 0; i < k; ++i) {
        if (L.gram2(i, i) % 2 != 0)
            throw std::invalid_argument("lattice: Gram diagonal must be even");
        for (int j = 0; j < i; ++j)
            if (L.gram2(i, j) != L.gram2(j, i))
                throw std::invalid_argument("lattice: Gram matrix must be symmetric");
    }
    if (!positive_definite(to_intmat(gram2)))
        throw std::invalid_argument("lattice: form is not positive definite");
    if (!relaxed) {
        long long g = 0;
        for (int i = 0; i < k; ++i) {
            g = std::gcd(g, L.gram2(i, i) / 2);
            for (int j = i + 1; j < k; ++j) g = std::gcd(g, L.gram2(i, j));
        }
        if (g != 1)
            throw std::invalid_argument("lattice: form is imprimitive (norm ideal is not Z)");
    }
    return L;
}

QuadLattice QuadLattice::from_coefficients(
    int rank, const std::map<std::pair<int, int>, long long>& coeffs) {
    std::vector<std::vector<long long>> g(rank, std::vector<long long>(rank, 0));
    for (const auto& [ij, a] : coeffs) {
        auto [i, j] = ij;
        if (i < 0 || j < i || j >= rank)
            throw std::invalid_argument("lattice: coefficient index out of range");
        if (i == j)
            g[i][i] = 2 * a;
        else
            g[i][j] = g[j][i] = a;
    }
    return from_gram2(g);
}

QuadLattice QuadLattice::binary(long long a, long long b, long long c) {
    return from_gram2({{2 * a, b}, {b, 2 * c}});
}

QuadLattice QuadLattice::diagonal(const std::vector<long long>& a) {
    std::vector<std::vector<long long>> g(a.size(), std::vector<long long>(a.size(), 0));
    for (size_t i = 0; i < a.size(); ++i) g[i][i] = 2 * a[i];
    return from_gram2(g);
}

Cholesky cholesky_form(const IntMat& gram2) {
    const size_t k = gram2.size();
    Cholesky ch;
    ch.d.resize(k);
    ch.c.assign(k, std::vector<Rat>(k, 0));
    RatMat b(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) b[i][j] = Rat(gram2[i][j], 2);
    for (size_t i = 0; i < k; ++i) {
        Rat d = b[i][i];
        for (size_t l = 0; l < i; ++l) d -= ch.d[l] * ch.c[l][i] * ch.c[l][i];
        ch.d[i] = d;
        for (size_t j = i + 1; j < k; ++j) {
            Rat v = b[i][j];
            for (size_t l = 0; l < i; ++l) v -= ch.d[l] * ch.c[l][i] * ch.c[l][j];
            ch.c[i][j] = v / d;
        }
    }
    return ch;
}

LLLResult lll_reduce_gram(const IntMat& gram, const Rat& delta) {
    const int k = static_cast<int>(gram.size());
    IntMat g = gram;
    IntMat u(k, std::vector<Int>(k, 0));
    for (int i = 0; i < k; ++i) u[i][i] = 1;

    // exact Gram-Schmidt data, recomputed from g on demand
    std::vector<Rat> bstar(k);
    RatMat mu(k, std::vector<Rat>(k, 0));
    auto gso = [&]() {
        for (int i = 0; i < k; ++i) {
            Rat b = g[i][i];
            for (int l = 0; l < i; ++l) b -= mu[i][l] * mu[i][l] * bstar[l];
            bstar[i] = b;
            for (int j = i + 1; j < k; ++j) {
                Rat v = g[j][i];
                for (int l = 0; l < i; ++l) v -= mu[j][l] * mu[i][l] * bstar[l];
                mu[j][i] = v / bstar[i];
            }
        }
    };
    // Ranks here are tiny; recompute g = U G U^T after each transform update.
    auto recompute_gram = [&]() { g = mat_mul(mat_mul(u, gram), transpose(u)); };

    gso();
    int i = 1;
    while (i < k) {
        // size reduction
        for (int j = i - 1; j >= 0; --j) {
            Rat m = mu[i][j];
            Int q = numerator(m) >= 0 ? (2 * numerator(m) + denominator(m)) / (2 * denominator(m))
                                      : -((-2 * numerator(m) + denominator(m)) / (2 * denominator(m)));
            if (q != 0) {
                for (int l = 0; l < k; ++l) u[i][l] -= q * u[j][l];
                recompute_gram();
                gso();
            }
        }
        if (i >= 1 && bstar[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * bstar[i - 1]) {
            std::swap(u[i], u[i - 1]);
            recompute_gram();
            gso();
            i = std::max(1, i - 1);
        } else {
            ++i;
        }
    }
    return {u, g};
}

namespace {

// All distinct sign-normalized vectors with Q(x) <= bound, sorted by
// (norm, lexicographic coordinates).
std::vector<std::pair<long long, std::vector<long long>>> short_vectors_sorted(
    const QuadLattice& L, long long bound) {
    std::vector<std::pair<long long, std::vector<long long>>> cands;
    sweep_vectors(L, bound, [&](const std::vector<long long>& x, long long q) {
        auto v = x;
        normalize_sign(v);
        cands.emplace_back(q, std::move(v));
    });
    std::sort(cands.begin(), cands.end());
    return cands;
}

long long max_form_diagonal(const QuadLattice& L) {
    long long m = 0;
    for (int i = 0; i < L.rank(); ++i) m = std::max(m, L.gram2(i, i) / 2);
    return m;
}

// gcd of all i x i minors equals 1 <=> rows extend to a basis of Z^k
bool extendable(const IntMat& rows) {
    const size_t r = rows.size(), k = rows[0].size();
    Int g = 0;
    // iterate over r-subsets of columns
    std::vector<size_t> comb(r);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        IntMat sub(r, std::vector<Int>(r));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) sub[i][j] = rows[i][comb[j]];
        g = gcd(g, det_bareiss(std::move(sub)));
        if (g == 1) return true;
        // next combination
        size_t pos = r;
        while (pos > 0) {
            --pos;
            if (comb[pos] != k - r + pos) break;
        }
        if (comb[pos] == k - r + pos) break;
        ++comb[pos];
        for (size_t j = pos + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
    return g == 1;
}

struct MinimaData {
    std::vector<long long> minima;
    std::vector<std::vector<long long>> witnesses;
};

MinimaData minima_with_witnesses(const QuadLattice& L) {
    const int k = L.rank();
    auto cands = short_vectors_sorted(L, max_form_diagonal(L));
    MinimaData md;
    IntMat chosen;
    for (const auto& [q, v] : cands) {
        if (static_cast<int>(chosen.size()) == k) break;
        IntMat trial = chosen;
        trial.emplace_back(v.begin(), v.end());
        if (rank_rational(trial) == static_cast<int>(trial.size())) {
            chosen = std::move(trial);
            md.minima.push_back(q);
            md.witnesses.push_back(v);
        }
    }
    return md;
}

}  // namespace

std::vector<long long> successive_minima(const QuadLattice& L) {
    return minima_with_witnesses(L).minima;
}

std::vector<std::vector<long long>> minima_witnesses(const QuadLattice& L) {
    return minima_with_witnesses(L).witnesses;
}

ReductionData reduce(const QuadLattice& L) {
    const int k = L.rank();
    if (k > 8) throw std::invalid_argument("reduce: rank > 8 unsupported");
    ReductionData rd;
    if (k <= 4) {
        // Minkowski: greedy shortest basis-extendable vector, lex tie-break.
        auto cands = short_vectors_sorted(L, max_form_diagonal(L));
        IntMat chosen;
        for (int step = 0; step < k; ++step) {
            bool found = false;
            for (const auto& [q, v] : cands) {
                IntMat trial = chosen;
                trial.emplace_back(v.begin(), v.end());
                if (rank_rational(trial) != static_cast<int>(trial.size())) continue;
                if (!extendable(trial)) continue;
                chosen = std::move(trial);
                found = true;
                break;
            }
            if (!found) throw std::logic_error("reduce: no extendable vector found");
        }
        rd.basis = to_llmat(chosen);
    } else {
        auto lll = lll_reduce_gram(to_intmat(L.gram2_rows()));
        rd.basis = to_llmat(lll.transform);
    }
    IntMat g = mat_mul(mat_mul(to_intmat(rd.basis), to_intmat(L.gram2_rows())),
                       transpose(to_intmat(rd.basis)));
    rd.reduced = QuadLattice::from_gram2(to_llmat(g), /*relaxed=*/true);
    rd.h = cholesky_form(g).d;
    rd.minima = successive_minima(L);
    return rd;
}

SublatticeData minima_sublattice(const QuadLattice& L, int j) {
    const int k = L.rank();
    if (j < 1 || j > k) throw std::invalid_argument("minima_sublattice: index out of range");
    auto wit = minima_witnesses(L);
    IntMat y;
    for (int i = 0; i < j; ++i) y.emplace_back(wit[i].begin(), wit[i].end());
    IntMat s = saturate_rows(y, k);
    IntMat g = mat_mul(mat_mul(s, to_intmat(L.gram2_rows())), transpose(s));
    SublatticeData sd;
    sd.basis = to_llmat(s);
    sd.lattice = QuadLattice::from_gram2(to_llmat(g), /*relaxed=*/true);
    return sd;
}

bool isometric(const QuadLattice& a, const QuadLattice& b) {
    if (a.rank() != b.rank()) return false;
    if (a.discriminant() != b.discriminant()) return false;
    const int k = a.rank();
    auto ra = reduce(a);
    if (ra.minima != successive_minima(b)) return false;

    // quick theta-prefix comparison
    long long prefix = max_form_diagonal(ra.reduced);
    auto ta = theta_series(a, prefix);
    auto tb = theta_series(b, prefix);
    if (ta != tb) return false;

    // candidates in b at each target norm, both signs
    const auto ga = ra.reduced.gram2_rows();
    std::vector<long long> targets(k);
    for (int i = 0; i < k; ++i) targets[i] = ga[i][i] / 2;
    long long maxt = *std::max_element(targets.begin(), targets.end());
    std::vector<std::vector<std::vector<long long>>> by_norm(maxt + 1);
    sweep_vectors(b, maxt, [&](const std::vector<long long>& x, long long q) {
        by_norm[q].push_back(x);
        auto neg = x;
        for (auto& c : neg) c = -c;
        by_norm[q].push_back(std::move(neg));
    });

    std::vector<std::vector<long long>> image(k);
    auto inner_b = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
        long long s = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += b.gram2(i, j) * x[i] * y[j];
        return s;  // = 2 B(x,y)
    };
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k) return true;
        for (const auto& cand : by_norm[targets[i]]) {
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if (inner_b(cand, image[j]) != ga[i][j]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[i] = cand;
            if (place(i + 1)) return true;
        }
        return false;
    };
    return place(0);
}

}  // namespace qf
