#include "qforms/linalg.hpp"

#include <limits>

namespace qf {

Int det_bareiss(IntMat m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i) {
            for (size_t j = c + 1; j < n; ++j) {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool positive_definite(const IntMat& m) {
    const size_t n = m.size();
    for (size_t d = 1; d <= n; ++d) {
        IntMat sub(d, std::vector<Int>(d));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) sub[i][j] = m[i][j];
        if (det_bareiss(std::move(sub)) <= 0) return false;
    }
    return true;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
    IntMat c(n, std::vector<Int>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntMat transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), std::vector<Int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat row_hnf(IntMat m) {
    if (m.empty()) return m;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // gcd elimination in column c over rows r..end
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                if (best == rows || abs(m[i][c]) < abs(m[best][c])) best = i;
            }
            if (best == rows) break;
            std::swap(m[best], m[r]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (size_t i = 0; i < r; ++i) {
            // floor division keeps entries above the pivot in [0, pivot)
            Int q = m[i][c] / m[r][c];
            if (m[i][c] - q * m[r][c] < 0) q -= 1;
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

IntMat integer_kernel(const IntMat& m, int cols) {
    const size_t rows = m.size();
    if (rows == 0) {
        IntMat id(cols, std::vector<Int>(cols, 0));
        for (int i = 0; i < cols; ++i) id[i][i] = 1;
        return id;
    }
    // HNF of [m^T | I]; rows whose m^T-block vanishes give kernel vectors.
    IntMat work(cols, std::vector<Int>(rows + cols, 0));
    for (int j = 0; j < cols; ++j) {
        for (size_t i = 0; i < rows; ++i) work[j][i] = m[i][j];
        work[j][rows + j] = 1;
    }
    work = row_hnf(std::move(work));
    IntMat kernel;
    for (const auto& row : work) {
        bool zero = true;
        for (size_t i = 0; i < rows; ++i)
            if (row[i] != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        kernel.emplace_back(row.begin() + rows, row.end());
    }
    return kernel;
}

IntMat saturate_rows(const IntMat& y, int cols) {
    return integer_kernel(integer_kernel(y, cols), cols);
}

int rank_rational(IntMat m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            // fraction-free elimination
            Int a = m[r][c], b = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

long long checked_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer too large for 64-bit narrowing");
    return static_cast<long long>(v);
}

}  // namespace qf
