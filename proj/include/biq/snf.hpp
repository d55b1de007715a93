#pragma once

// Exact integer linear algebra over unbounded integers (gmpxx): Smith normal
// form with transform matrices, integer kernels, and linear solving, used for
// abelianization, cohomology and coboundary detection.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace biq {

using Int = mpz_class;

// Dense matrix of unbounded integers, row-major.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}

    Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix mul(const IntMatrix& o) const {
        if (cols != o.rows) throw std::runtime_error("matrix: dimension mismatch");
        IntMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// D = U * M * V with U, V unimodular, D diagonal, nonnegative, d_i | d_{i+1};
// Uinv, Vinv are the exact inverses of U, V.
struct SmithForm {
    IntMatrix U, D, V, Uinv, Vinv;
    int rank = 0;  // number of nonzero diagonal entries
};

// Alternating Hermite-style row and column passes with balanced quotients
// and immediate mod-pivot reduction of already-processed lines; this keeps
// intermediate entries near minor-sized instead of the exponential growth a
// naive two-sided elimination exhibits.
inline SmithForm smith_normal_form(const IntMatrix& M) {
    SmithForm s;
    s.D = M;
    s.U = IntMatrix::identity(M.rows);
    s.V = IntMatrix::identity(M.cols);
    s.Uinv = IntMatrix::identity(M.rows);
    s.Vinv = IntMatrix::identity(M.cols);
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;
    IntMatrix& Ui = s.Uinv;
    IntMatrix& Vi = s.Vinv;
    const int r = M.rows, c = M.cols;

    auto row_addmul = [&](int dst, int src, const Int& k) {
        for (int j = 0; j < c; ++j) D.at(dst, j) += k * D.at(src, j);
        for (int j = 0; j < r; ++j) U.at(dst, j) += k * U.at(src, j);
        for (int i = 0; i < r; ++i) Ui.at(i, src) -= k * Ui.at(i, dst);
    };
    auto col_addmul = [&](int dst, int src, const Int& k) {
        for (int i = 0; i < r; ++i) D.at(i, dst) += k * D.at(i, src);
        for (int i = 0; i < c; ++i) V.at(i, dst) += k * V.at(i, src);
        for (int j = 0; j < c; ++j) Vi.at(src, j) -= k * Vi.at(dst, j);
    };
    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c; ++k) std::swap(D.at(i, k), D.at(j, k));
        for (int k = 0; k < r; ++k) std::swap(U.at(i, k), U.at(j, k));
        for (int k = 0; k < r; ++k) std::swap(Ui.at(k, i), Ui.at(k, j));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r; ++k) std::swap(D.at(k, i), D.at(k, j));
        for (int k = 0; k < c; ++k) std::swap(V.at(k, i), V.at(k, j));
        for (int k = 0; k < c; ++k) std::swap(Vi.at(i, k), Vi.at(j, k));
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < c; ++k) D.at(i, k) = -D.at(i, k);
        for (int k = 0; k < r; ++k) U.at(i, k) = -U.at(i, k);
        for (int k = 0; k < r; ++k) Ui.at(k, i) = -Ui.at(k, i);
    };
    auto col_negate = [&](int j) {
        for (int k = 0; k < r; ++k) D.at(k, j) = -D.at(k, j);
        for (int k = 0; k < c; ++k) V.at(k, j) = -V.at(k, j);
        for (int k = 0; k < c; ++k) Vi.at(j, k) = -Vi.at(j, k);
    };
    // quotient rounded to nearest, so remainders shrink by at least half
    auto balanced_q = [](const Int& a, const Int& b) {
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int rem = a - q * b;
        if (abs(2 * rem) > abs(b)) q += ((rem > 0) == (b > 0)) ? 1 : -1;
        return q;
    };

    // One Hermite pass with row operations: echelon with pivots compacted
    // onto the diagonal, rows above each pivot reduced modulo it.
    auto row_pass = [&]() {
        int t = 0;
        for (int j = 0; j < c && t < r; ++j) {
            while (true) {
                int p = -1;
                Int best = 0;
                for (int i = t; i < r; ++i)
                    if (D.at(i, j) != 0) {
                        Int w = abs(D.at(i, j));
                        if (p < 0 || w < best) { best = w; p = i; }
                    }
                if (p < 0) break;
                row_swap(t, p);
                bool any = false;
                for (int i = t + 1; i < r; ++i)
                    if (D.at(i, j) != 0) {
                        row_addmul(i, t, -balanced_q(D.at(i, j), D.at(t, j)));
                        if (D.at(i, j) != 0) any = true;
                    }
                if (!any) break;
            }
            if (D.at(t, j) == 0) continue;
            if (D.at(t, j) < 0) row_negate(t);
            for (int i = 0; i < t; ++i)
                if (D.at(i, j) != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), D.at(i, j).get_mpz_t(), D.at(t, j).get_mpz_t());
                    if (q != 0) row_addmul(i, t, -q);
                }
            if (j != t) col_swap(t, j);
            ++t;
        }
    };
    // Mirror image with column operations.
    auto col_pass = [&]() {
        int t = 0;
        for (int i = 0; i < r && t < c; ++i) {
            while (true) {
                int p = -1;
                Int best = 0;
                for (int j = t; j < c; ++j)
                    if (D.at(i, j) != 0) {
                        Int w = abs(D.at(i, j));
                        if (p < 0 || w < best) { best = w; p = j; }
                    }
                if (p < 0) break;
                col_swap(t, p);
                bool any = false;
                for (int j = t + 1; j < c; ++j)
                    if (D.at(i, j) != 0) {
                        col_addmul(j, t, -balanced_q(D.at(i, j), D.at(i, t)));
                        if (D.at(i, j) != 0) any = true;
                    }
                if (!any) break;
            }
            if (D.at(i, t) == 0) continue;
            if (D.at(i, t) < 0) col_negate(t);
            for (int j = 0; j < t; ++j)
                if (D.at(i, j) != 0) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), D.at(i, j).get_mpz_t(), D.at(i, t).get_mpz_t());
                    if (q != 0) col_addmul(j, t, -q);
                }
            if (i != t) row_swap(t, i);
            ++t;
        }
    };
    auto diagonal = [&]() {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j && D.at(i, j) != 0) return false;
        return true;
    };

    const int lim = std::min(r, c);
    for (int guard = 0;; ++guard) {
        if (guard > 1000 + 64 * lim)
            throw std::runtime_error("smith_normal_form: did not converge (internal)");
        while (!diagonal()) {
            row_pass();
            if (diagonal()) break;
            col_pass();
        }
        // compact nonzero diagonal entries to the front, make them positive
        int t = 0;
        for (int i = 0; i < lim; ++i)
            if (D.at(i, i) != 0) {
                if (i != t) { row_swap(t, i); col_swap(t, i); }
                if (D.at(t, t) < 0) row_negate(t);
                ++t;
            }
        s.rank = t;
        // repair the first divisibility violation, then re-diagonalize
        int bad = -1;
        for (int i = 0; i + 1 < t && bad < 0; ++i)
            if (D.at(i + 1, i + 1) % D.at(i, i) != 0) bad = i;
        if (bad < 0) break;
        col_addmul(bad, bad + 1, 1);  // puts d_{bad+1} into the 2x2 corner
    }
    return s;
}

// Unique integer kernel basis: columns of V at zero diagonal positions.
// The columns form a basis of the (saturated) kernel lattice.
inline IntMatrix integer_kernel(const IntMatrix& M) {
    SmithForm s = smith_normal_form(M);
    int k = M.cols - s.rank;
    IntMatrix K(M.cols, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < M.cols; ++i) K.at(i, j) = s.V.at(i, s.rank + j);
    return K;
}

// Repeated-rhs integer solver for M x = b, factoring M once.
class LinearSolver {
public:
    explicit LinearSolver(const IntMatrix& M)
        : rows_(M.rows), cols_(M.cols), s_(smith_normal_form(M)) {}

    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw std::runtime_error("solve: bad rhs size");
        // D y = U b, x = V y
        std::vector<Int> ub(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < rows_; ++j) ub[i] += s_.U.at(i, j) * b[j];
        std::vector<Int> y(cols_, 0);
        for (int i = 0; i < rows_; ++i) {
            Int d = (i < std::min(rows_, cols_)) ? s_.D.at(i, i) : Int(0);
            if (d == 0) {
                if (ub[i] != 0) return std::nullopt;
            } else {
                if (ub[i] % d != 0) return std::nullopt;
                y[i] = ub[i] / d;
            }
        }
        std::vector<Int> x(cols_, 0);
        for (int i = 0; i < cols_; ++i)
            for (int j = 0; j < cols_; ++j) x[i] += s_.V.at(i, j) * y[j];
        return x;
    }

private:
    int rows_, cols_;
    SmithForm s_;
};

// One integer solution of M x = b, if any.
inline std::optional<std::vector<Int>> integer_solve(const IntMatrix& M,
                                                     const std::vector<Int>& b) {
    return LinearSolver(M).solve(b);
}

inline Int determinant(const IntMatrix& M) {
    if (M.rows != M.cols) throw std::runtime_error("determinant: not square");
    // fraction-free Gaussian elimination (Bareiss)
    IntMatrix A = M;
    int n = M.rows;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
            }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

}  // namespace biq
