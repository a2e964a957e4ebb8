#ifndef CREMFOL_LINALG_HPP
#define CREMFOL_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cremfol {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && is_zero(m[pivot][col])) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

/// Row spaces coincide iff each rank equals the rank of the stacked matrix.
inline bool same_row_space(const QMatrix& a, const QMatrix& b) {
    std::size_t ra = a.empty() ? 0 : rank(a);
    std::size_t rb = b.empty() ? 0 : rank(b);
    if (ra != rb) return false;
    QMatrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return (stacked.empty() ? 0 : rank(stacked)) == ra;
}

/// Basis of the nullspace of m (viewed as equations m*x = 0 on `cols`
/// unknowns).
inline std::vector<QVector> nullspace(QMatrix m, std::size_t cols) {
    for (auto& r : m) r.resize(cols, Rational(0));
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVector v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (i < m.size()) v[pivots[i]] = -m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational det3(const QMatrix& m) {
    if (m.size() != 3 || m[0].size() != 3) throw std::invalid_argument("det3: expected 3x3");
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline QMatrix inverse3(const QMatrix& m) {
    Rational d = det3(m);
    if (is_zero(d)) throw std::domain_error("singular matrix");
    QMatrix adj(3, QVector(3));
    auto minor2 = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) -> Rational {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    adj[0][0] = minor2(1, 2, 1, 2);
    adj[0][1] = -minor2(0, 2, 1, 2);
    adj[0][2] = minor2(0, 1, 1, 2);
    adj[1][0] = -minor2(1, 2, 0, 2);
    adj[1][1] = minor2(0, 2, 0, 2);
    adj[1][2] = -minor2(0, 1, 0, 2);
    adj[2][0] = minor2(1, 2, 0, 1);
    adj[2][1] = -minor2(0, 2, 0, 1);
    adj[2][2] = minor2(0, 1, 0, 1);
    for (auto& row : adj)
        for (auto& e : row) e /= d;
    return adj;
}

}  // namespace cremfol

#endif
