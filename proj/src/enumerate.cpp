#include "qforms/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace qf {

namespace {

struct SweepPlan {
    int k = 0;
    std::vector<std::vector<long long>> basis;  // reduced basis rows, original coords
    std::vector<std::vector<long long>> gram;   // reduced gram2
    std::vector<double> h;                      // Cholesky pivots of gram/2
    std::vector<std::vector<double>> c;         // c[i][j], j > i
};

SweepPlan make_plan(const QuadLattice& L) {
    SweepPlan plan;
    plan.k = L.rank();
    IntMat gram(plan.k, std::vector<Int>(plan.k));
    auto rows = L.gram2_rows();
    for (int i = 0; i < plan.k; ++i)
        for (int j = 0; j < plan.k; ++j) gram[i][j] = rows[i][j];
    auto lll = lll_reduce_gram(gram);
    plan.basis.assign(plan.k, std::vector<long long>(plan.k));
    plan.gram.assign(plan.k, std::vector<long long>(plan.k));
    for (int i = 0; i < plan.k; ++i)
        for (int j = 0; j < plan.k; ++j) {
            plan.basis[i][j] = checked_ll(lll.transform[i][j]);
            plan.gram[i][j] = checked_ll(lll.gram[i][j]);
        }
    auto ch = cholesky_form(lll.gram);
    plan.h.resize(plan.k);
    plan.c.assign(plan.k, std::vector<double>(plan.k, 0.0));
    for (int i = 0; i < plan.k; ++i) {
        plan.h[i] = static_cast<double>(ch.d[i]);
        for (int j = i + 1; j < plan.k; ++j) plan.c[i][j] = static_cast<double>(ch.c[i][j]);
    }
    return plan;
}

void overflow_guard(const SweepPlan& plan, long long bound) {
    double hmin = plan.h[0];
    long long gmax = 1;
    for (int i = 0; i < plan.k; ++i) {
        hmin = std::min(hmin, plan.h[i]);
        for (int j = 0; j < plan.k; ++j) gmax = std::max(gmax, std::llabs(plan.gram[i][j]));
    }
    double xmax = std::sqrt(static_cast<double>(bound) / hmin) + 2.0;
    double worst = static_cast<double>(gmax) * (xmax + 1) * (xmax + 1) *
                   (plan.k + 1) * (plan.k + 1);
    if (worst > 4.0e18) throw std::overflow_error("enumeration bound too large for 64-bit core");
}

}  // namespace

void sweep_vectors(const QuadLattice& L, long long bound,
                   const std::function<void(const std::vector<long long>&, long long)>& visit) {
    if (bound < 0) return;
    const SweepPlan plan = make_plan(L);
    const int k = plan.k;
    overflow_guard(plan, bound);

    std::vector<long long> x(k, 0);
    std::vector<long long> orig(k, 0);

    // levels k-1 .. 0; x[j] fixed for j > level on entry
    std::function<void(int, long long, double, bool)> descend =
        [&](int level, long long suffix, double rem, bool zero_above) {
            // exact linear coefficient and float offset at this level
            long long t = 0;
            double u = 0.0;
            for (int j = level + 1; j < k; ++j) {
                if (x[j] == 0) continue;
                t += plan.gram[level][j] * x[j];
                u += plan.c[level][j] * x[j];
            }
            const long long a = plan.gram[level][level] / 2;
            double r = rem > 0 ? std::sqrt(rem / plan.h[level]) : 0.0;
            long long lo = static_cast<long long>(std::floor(-r - u)) - 1;
            long long hi = static_cast<long long>(std::ceil(r - u)) + 1;
            if (zero_above && lo < 0) lo = 0;  // canonical half
            for (long long v = lo; v <= hi; ++v) {
                long long val = a * v * v + t * v + suffix;
                if (val > bound) continue;
                x[level] = v;
                bool zero_here = zero_above && v == 0;
                if (level == 0) {
                    if (zero_here) continue;
                    for (int i = 0; i < k; ++i) {
                        long long s = 0;
                        for (int j = 0; j < k; ++j) s += x[j] * plan.basis[j][i];
                        orig[i] = s;
                    }
                    visit(orig, val);
                } else {
                    double du = v + u;
                    descend(level - 1, val, rem - plan.h[level] * du * du, zero_here);
                }
            }
            x[level] = 0;
        };
    descend(k - 1, 0, static_cast<double>(bound), true);
}

Int count_representations(const QuadLattice& L, const Int& n) {
    if (n < 0) throw std::invalid_argument("count_representations: n must be nonnegative");
    if (n == 0) return 1;
    long long target = checked_ll(n);
    Int count = 0;
    sweep_vectors(L, target, [&](const std::vector<long long>&, long long q) {
        if (q == target) count += 2;
    });
    return count;
}

CountResult count_representations_witnessed(const QuadLattice& L, const Int& n) {
    CountResult res;
    res.count = 0;
    if (n == 0) {
        res.count = 1;
        res.witnesses.emplace_back(L.rank(), 0);
        return res;
    }
    long long target = checked_ll(n);
    sweep_vectors(L, target, [&](const std::vector<long long>& x, long long q) {
        if (q != target) return;
        res.count += 2;
        res.witnesses.push_back(x);
        auto neg = x;
        for (auto& c : neg) c = -c;
        res.witnesses.push_back(std::move(neg));
    });
    std::sort(res.witnesses.begin(), res.witnesses.end());
    return res;
}

std::vector<Int> theta_series(const QuadLattice& L, long long N) {
    if (N < 0) throw std::invalid_argument("theta_series: bound must be nonnegative");
    std::vector<Int> coeff(static_cast<size_t>(N) + 1, 0);
    coeff[0] = 1;
    sweep_vectors(L, N, [&](const std::vector<long long>&, long long q) { coeff[q] += 2; });
    return coeff;
}

std::optional<long long> min_square(const QuadLattice& L, long long bound) {
    if (bound < 1) throw std::invalid_argument("min_square: bound must be positive");
    // One sweep over the whole square range when it is small, else per-n counts.
    if (bound <= 2048) {
        std::optional<long long> best;
        sweep_vectors(L, bound * bound, [&](const std::vector<long long>&, long long q) {
            if (q == 0) return;
            auto r = static_cast<long long>(std::sqrt(static_cast<double>(q)));
            while (r * r > q) --r;
            while ((r + 1) * (r + 1) <= q) ++r;
            if (r * r == q && (!best || r < *best)) best = r;
        });
        return best;
    }
    for (long long n = 1; n <= bound; ++n)
        if (count_representations(L, Int(n) * n) != 0) return n;
    return std::nullopt;
}

double hermite_gamma(int k) {
    switch (k) {
        case 1: return 1.0;
        case 2: return 2.0 / std::sqrt(3.0);
        case 3: return std::pow(2.0, 1.0 / 3.0);
        case 4: return std::sqrt(2.0);
        case 5: return std::pow(8.0, 1.0 / 5.0);
        case 6: return std::pow(64.0 / 3.0, 1.0 / 6.0);
        case 7: return std::pow(64.0, 1.0 / 7.0);
        case 8: return 2.0;
        default: throw std::invalid_argument("hermite_gamma: only ranks 1..8 are tabulated");
    }
}

double reduction_c5(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * std::pow(4.0 / 3.0, k * (k - 1) / 2.0);
}

double t_coefficient(int i, int k) {
    if (i < 1 || i > k - 1) throw std::invalid_argument("t_coefficient: index out of range");
    double binom = 1.0;
    for (int j = 0; j < i; ++j) binom = binom * (k - 1 - j) / (j + 1);
    return std::pow(2.0, k) * binom * std::pow(reduction_c5(k), (k - 1.0 - i) / 2.0);
}

double representation_upper_bound(const QuadLattice& L, const Int& n) {
    const int k = L.rank();
    if (k < 2 || k > 8)
        throw std::invalid_argument("representation_upper_bound: rank must be in 2..8");
    const double nd = static_cast<double>(n);
    const double dl = static_cast<double>(L.discriminant());
    double main = std::pow(2.0, (3.0 * k - 1.0) / 2.0) * std::sqrt(hermite_gamma(k)) /
                  std::pow(dl, (k - 1.0) / (2.0 * k)) * std::pow(nd, (k - 1.0) / 2.0);
    double tail = 0.0;
    for (int i = 1; i <= k - 1; ++i)
        tail += t_coefficient(i, k) * std::pow(nd, (k - 1.0 - i) / 2.0);
    return main + tail;
}

}  // namespace qf
