#ifndef JTPOLY_LINALG_HPP
#define JTPOLY_LINALG_HPP

#include <optional>
#include <vector>

#include "jtpoly/errors.hpp"
#include "jtpoly/rational.hpp"

namespace jtpoly {

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline bool isZeroValue(const Rational& r) { return r == 0; }

// Dense rectangular matrix over one exact entry type (Rational, SymValue,
// EpsFrac, ...). Entry type homogeneity is by construction.
template <class T>
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

// Fraction-free (Bareiss) determinant. Works over any integral domain with
// an exact_div(a, b) that performs the (exact) interior divisions: fields
// divide outright, Q[u,v] divides term by term. Row pivoting tracks the sign.
template <class T>
T detFractionFree(ExactMatrix<T> m) {
    if (m.rows() != m.cols()) throw ConfigError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return T(Rational(1));
    int sign = 1;
    T prev{Rational(1)};
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (!isZeroValue(m.at(i, k))) { pivot = i; break; }
        }
        if (pivot < 0) return T(Rational(0));
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            }
            m.at(i, k) = T(Rational(0));
        }
        prev = m.at(k, k);
    }
    T det = m.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

// Reduced row echelon form in place (least-index pivoting); returns the
// pivot column of every pivot row in order.
std::vector<int> rref(ExactMatrix<Rational>& m);

// Basis of the right kernel {x : Mx = 0}, each vector scaled so its first
// nonzero entry is 1; empty when the kernel is trivial.
std::vector<std::vector<Rational>> nullspaceBasis(const ExactMatrix<Rational>& m);

struct LinearSolution {
    std::vector<Rational> particular;               // one solution, free vars zeroed
    std::vector<std::vector<Rational>> kernel;      // homogeneous solution basis
};

// Exact solve of Ax = b; nullopt when inconsistent.
std::optional<LinearSolution> solveLinear(const ExactMatrix<Rational>& a,
                                          const std::vector<Rational>& b);

} // namespace jtpoly

#endif
