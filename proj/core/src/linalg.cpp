#include "wspin/linalg.hpp"

#include "wspin/error.hpp"

namespace wspin {

namespace {

// Row echelon with partial pivoting by first nonzero entry; returns pivot
// columns. Operates in place.
std::vector<std::size_t> echelon(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rational_rank(RationalMatrix m) { return echelon(m).size(); }

Rational rational_det(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidParameter("determinant of non-square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m[pr][c] == 0) ++pr;
        if (pr == n) return Rational(0);
        if (pr != c) {
            std::swap(m[pr], m[c]);
            det = -det;
        }
        det *= m[c][c];
        const Rational inv = Rational(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> rational_solve(RationalMatrix a,
                                                    std::vector<Rational> b,
                                                    bool& unique) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw InvalidParameter("rational_solve: size mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<std::size_t> pivots = echelon(a);

    // Inconsistent iff some pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    unique = pivots.size() == cols;

    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

RationalMatrix rational_inverse(const RationalMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw InvalidParameter("inverse of non-square matrix");
        aug[i] = m[i];
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    std::vector<std::size_t> pivots = echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw RankDeficient("matrix is singular");
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
    std::vector<std::size_t> chosen;
    RationalMatrix acc;
    for (std::size_t i = 0; i < m.size(); ++i) {
        RationalMatrix trial = acc;
        trial.push_back(m[i]);
        if (rational_rank(trial) > acc.size()) {
            acc.push_back(m[i]);
            chosen.push_back(i);
        }
    }
    return chosen;
}

}  // namespace wspin
