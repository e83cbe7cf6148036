#include "jtpoly/linalg.hpp"

namespace jtpoly {

std::vector<int> rref(ExactMatrix<Rational>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (m.at(i, col) != 0) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspaceBasis(const ExactMatrix<Rational>& m) {
    ExactMatrix<Rational> r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> isPivot(m.cols(), false);
    for (int c : pivots) isPivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int freeCol = 0; freeCol < m.cols(); ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[freeCol] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -r.at(static_cast<int>(pr), freeCol);
        // First nonzero entry normalized to 1.
        for (auto& x : v) {
            if (x != 0) {
                Rational inv = Rational(1) / x;
                for (auto& y : v) y *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinearSolution> solveLinear(const ExactMatrix<Rational>& a,
                                          const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw ConfigError("solveLinear: size mismatch");
    ExactMatrix<Rational> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == a.cols()) return std::nullopt;  // row [0 ... 0 | 1]

    LinearSolution sol;
    sol.particular.assign(a.cols(), Rational(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        sol.particular[pivots[pr]] = aug.at(static_cast<int>(pr), a.cols());

    std::vector<bool> isPivot(a.cols(), false);
    for (int c : pivots) isPivot[c] = true;
    for (int freeCol = 0; freeCol < a.cols(); ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[freeCol] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -aug.at(static_cast<int>(pr), freeCol);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

} // namespace jtpoly
