#pragma once

// Chain complex of a biquandle: boundary maps d_n on the free complex with
// basis X^n, the degenerate subcomplex, the nondegenerate quotient, and its
// cohomology over Z and Z_m via Smith normal form.  Also 2-cocycles: validity,
// the arrow-compatibility condition, coboundaries.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "biquandle.hpp"
#include "snf.hpp"

namespace biq {

namespace detail {

// Tuples over {1..N} of length n, lexicographic; index 0 = (1,...,1).
inline long long tuple_count(int N, int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c *= N;
    return c;
}

inline std::vector<int> tuple_at(int N, int n, long long idx) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % N) + 1;
        idx /= N;
    }
    return t;
}

inline long long tuple_index(int N, const std::vector<int>& t) {
    long long idx = 0;
    for (int v : t) idx = idx * N + (v - 1);
    return idx;
}

inline bool is_degenerate_tuple(const std::vector<int>& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

}  // namespace detail

// d_n : C_n -> C_{n-1}; column at (x_1..x_n) is
//   sum_i (-1)^i [ (drop x_i) - (x_1*x_i,..,x_{i-1}*x_i, x_{i+1}ox_i,..,x_nox_i) ].
// d_n = 0 for n <= 1.  Supported envelope n <= 4.
inline IntMatrix boundary_matrix(const FiniteBiquandle& B, int n) {
    if (n < 1 || n > 4) throw std::runtime_error("boundary_matrix: degree out of envelope");
    const int N = B.n();
    IntMatrix M(static_cast<int>(detail::tuple_count(N, n - 1)),
                static_cast<int>(detail::tuple_count(N, n)));
    if (n <= 1) return M;
    for (long long col = 0; col < M.cols; ++col) {
        auto t = detail::tuple_at(N, n, col);
        for (int i = 1; i <= n; ++i) {
            int sgn = (i % 2 == 0) ? 1 : -1;
            std::vector<int> drop, op;
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                drop.push_back(t[j - 1]);
                op.push_back(j < i ? B.star(t[j - 1], t[i - 1]) : B.circ(t[j - 1], t[i - 1]));
            }
            M.at(static_cast<int>(detail::tuple_index(N, drop)), static_cast<int>(col)) += sgn;
            M.at(static_cast<int>(detail::tuple_index(N, op)), static_cast<int>(col)) -= sgn;
        }
    }
    return M;
}

// Basis indices of the degenerate subspace (adjacent repeated entry).
inline std::vector<long long> degenerate_indices(const FiniteBiquandle& B, int n) {
    std::vector<long long> out;
    if (n <= 1) return out;
    const int N = B.n();
    for (long long i = 0; i < detail::tuple_count(N, n); ++i)
        if (detail::is_degenerate_tuple(detail::tuple_at(N, n, i))) out.push_back(i);
    return out;
}

// d_n on the quotient by the degenerate subcomplex; basis = nondegenerate
// tuples in lexicographic order.  Verifies that d maps degenerate chains into
// degenerate chains (an implementation bug otherwise).
inline IntMatrix quotient_boundary(const FiniteBiquandle& B, int n) {
    IntMatrix full = boundary_matrix(B, n);
    const int N = B.n();
    auto nondeg = [&](int deg) {
        std::vector<long long> idx;
        for (long long i = 0; i < detail::tuple_count(N, deg); ++i)
            if (!detail::is_degenerate_tuple(detail::tuple_at(N, deg, i))) idx.push_back(i);
        return idx;
    };
    auto rows = nondeg(n - 1), cols = nondeg(n);
    // closure check: degenerate columns have no support on nondegenerate rows
    std::vector<bool> row_nondeg(full.rows, false);
    for (long long i : rows) row_nondeg[i] = true;
    for (long long c = 0; c < full.cols; ++c) {
        if (!detail::is_degenerate_tuple(detail::tuple_at(N, n, c))) continue;
        for (int r = 0; r < full.rows; ++r)
            if (row_nondeg[r] && full.at(r, static_cast<int>(c)) != 0)
                throw std::runtime_error(
                    "quotient_boundary: degenerate subcomplex not closed (internal error)");
    }
    IntMatrix Q(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < rows.size(); ++i)
            Q.at(static_cast<int>(i), static_cast<int>(j)) =
                full.at(static_cast<int>(rows[i]), static_cast<int>(cols[j]));
    return Q;
}

// H^n of the nondegenerate complex with coefficients Z (modulus = 0) or Z_m.
// Envelope: n in {1,2,3}, |X| <= 6.
inline AbelianGroup cohomology(const FiniteBiquandle& B, int n, long long modulus = 0) {
    if (n < 1 || n > 3) throw std::runtime_error("cohomology: degree out of envelope");
    if (B.n() > 6) throw std::runtime_error("cohomology: |X| out of envelope");
    if (modulus < 0) modulus = -modulus;
    IntMatrix dn = quotient_boundary(B, n + 1).transpose();   // C^n -> C^{n+1}
    IntMatrix dprev = quotient_boundary(B, n).transpose();    // C^{n-1} -> C^n
    const int Nn = dn.cols;
    if (modulus == 0) {
        IntMatrix K = integer_kernel(dn);  // Nn x k, saturated
        LinearSolver ks(K);
        IntMatrix C(K.cols, dprev.cols);
        for (int j = 0; j < dprev.cols; ++j) {
            std::vector<Int> b(Nn);
            for (int i = 0; i < Nn; ++i) b[i] = dprev.at(i, j);
            auto y = ks.solve(b);
            if (!y) throw std::runtime_error("cohomology: image not in kernel (internal error)");
            for (int i = 0; i < K.cols; ++i) C.at(i, j) = (*y)[i];
        }
        return quotient_by_columns(C).group;
    }
    // Z_m by lattices: L = {x : dn x = 0 mod m} = projection of ker[dn | mI];
    // H = L / (im dprev + m Z^Nn).
    IntMatrix A(dn.rows, dn.cols + dn.rows);
    for (int i = 0; i < dn.rows; ++i) {
        for (int j = 0; j < dn.cols; ++j) A.at(i, j) = dn.at(i, j);
        A.at(i, dn.cols + i) = Int(static_cast<long>(modulus));
    }
    IntMatrix ker = integer_kernel(A);
    IntMatrix G(Nn, ker.cols);  // generators of L
    for (int i = 0; i < Nn; ++i)
        for (int j = 0; j < ker.cols; ++j) G.at(i, j) = ker.at(i, j);
    SmithForm gs = smith_normal_form(G);
    if (gs.rank != Nn) throw std::runtime_error("cohomology: lattice rank defect (internal)");
    // basis of L: b_i = d_i * (Uinv column i); coordinates of v in this basis
    // are (U v)_i / d_i.
    auto coords = [&](const std::vector<Int>& v) {
        std::vector<Int> y(Nn);
        for (int i = 0; i < Nn; ++i) {
            Int uv = 0;
            for (int j = 0; j < Nn; ++j) uv += gs.U.at(i, j) * v[j];
            if (uv % gs.D.at(i, i) != 0)
                throw std::runtime_error("cohomology: sublattice escape (internal)");
            y[i] = uv / gs.D.at(i, i);
        }
        return y;
    };
    IntMatrix C(Nn, dprev.cols + Nn);
    for (int j = 0; j < dprev.cols; ++j) {
        std::vector<Int> b(Nn);
        for (int i = 0; i < Nn; ++i) b[i] = dprev.at(i, j);
        auto y = coords(b);
        for (int i = 0; i < Nn; ++i) C.at(i, j) = y[i];
    }
    for (int j = 0; j < Nn; ++j) {
        std::vector<Int> b(Nn, 0);
        b[j] = Int(static_cast<long>(modulus));
        auto y = coords(b);
        for (int i = 0; i < Nn; ++i) C.at(i, dprev.cols + j) = y[i];
    }
    return quotient_by_columns(C).group;
}

// A 2-cochain phi : X x X -> A, written additively.
struct Cocycle2 {
    AbelianGroup target;
    std::vector<GroupElement> table;  // n*n entries, (x,y) at (x-1)*n + (y-1)

    const GroupElement& at(int x, int y) const {
        return table[size_t(x - 1) * n_ + (y - 1)];
    }
    int n() const { return n_; }

    Cocycle2() = default;
    Cocycle2(AbelianGroup tgt, int n, std::vector<GroupElement> tab)
        : target(std::move(tgt)), table(std::move(tab)), n_(n) {
        if (table.size() != size_t(n_) * n_)
            throw std::runtime_error("cocycle: wrong table size");
        for (auto& g : table) g = reduce_element(target, g);
    }

    static Cocycle2 zero(AbelianGroup tgt, int n) {
        std::vector<GroupElement> tab(size_t(n) * n, GroupElement(tgt.dims(), 0));
        return Cocycle2(std::move(tgt), n, std::move(tab));
    }

    // Header "rank r; torsion d1 d2 ...", then n*n bracketed vectors row by
    // row (row x lists phi(x,1..n)).
    static Cocycle2 parse(const std::string& text, int n) {
        std::istringstream is(text);
        std::string header;
        if (!std::getline(is, header)) throw std::runtime_error("cocycle: missing header");
        AbelianGroup G;
        {
            auto semi = header.find(';');
            if (semi == std::string::npos)
                throw std::runtime_error("cocycle: header must be 'rank r; torsion ...'");
            std::istringstream h1(header.substr(0, semi)), h2(header.substr(semi + 1));
            std::string kw;
            if (!(h1 >> kw) || kw != "rank" || !(h1 >> G.rank) || G.rank < 0)
                throw std::runtime_error("cocycle: bad rank in header");
            if (!(h2 >> kw) || kw != "torsion")
                throw std::runtime_error("cocycle: bad torsion keyword in header");
            long long d;
            while (h2 >> d) {
                if (d < 2) throw std::runtime_error("cocycle: torsion modulus must be >= 2");
                G.torsion.push_back(d);
            }
        }
        std::string rest((std::istreambuf_iterator<char>(is)),
                         std::istreambuf_iterator<char>());
        std::vector<GroupElement> tab;
        size_t p = 0;
        while (true) {
            while (p < rest.size() && isspace(static_cast<unsigned char>(rest[p]))) ++p;
            if (p >= rest.size()) break;
            if (rest[p] != '[') throw std::runtime_error("cocycle: expected '['");
            auto q = rest.find(']', p);
            if (q == std::string::npos) throw std::runtime_error("cocycle: unclosed '['");
            tab.push_back(parse_element(G, rest.substr(p, q - p + 1)));
            p = q + 1;
        }
        if (tab.size() != size_t(n) * n)
            throw std::runtime_error("cocycle: expected " + std::to_string(n * n) +
                                     " entries, got " + std::to_string(tab.size()));
        return Cocycle2(std::move(G), n, std::move(tab));
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "rank " << target.rank << "; torsion";
        for (long long d : target.torsion) os << " " << d;
        os << "\n";
        for (int x = 1; x <= n_; ++x) {
            for (int y = 1; y <= n_; ++y) os << (y > 1 ? " " : "") << serialize_element(at(x, y));
            os << "\n";
        }
        return os.str();
    }

private:
    int n_ = 0;
};

// Conditions of the state-sum theorem: phi(x,x) = 0 and the hexagon
//   phi(x,y) + phi(y,z) + phi(x*y, zoy) = phi(x*z, y*z) + phi(yox, zox) + phi(x,z).
inline bool is_cocycle2(const FiniteBiquandle& B, const Cocycle2& phi) {
    if (phi.n() != B.n()) throw std::runtime_error("cocycle: size mismatch");
    const auto& G = phi.target;
    auto zero = zero_element(G);
    for (int x = 1; x <= B.n(); ++x)
        if (phi.at(x, x) != zero) return false;
    for (int x = 1; x <= B.n(); ++x)
        for (int y = 1; y <= B.n(); ++y)
            for (int z = 1; z <= B.n(); ++z) {
                GroupElement lhs = add_elements(
                    G, add_elements(G, phi.at(x, y), phi.at(y, z)),
                    phi.at(B.star(x, y), B.circ(z, y)));
                GroupElement rhs = add_elements(
                    G, add_elements(G, phi.at(B.star(x, z), B.star(y, z)),
                                    phi.at(B.circ(y, x), B.circ(z, x))),
                    phi.at(x, z));
                if (lhs != rhs) return false;
            }
    return true;
}

// Arrow-slide compatibility: phi(x,y) + phi(y, f^{-1}(x)) = 0 for all pairs.
inline bool omega5_compatible(const FiniteBiquandle& B, const Permutation& f,
                              const Cocycle2& phi) {
    if (phi.n() != B.n()) throw std::runtime_error("cocycle: size mismatch");
    Permutation finv = f.inverse();
    auto zero = zero_element(phi.target);
    for (int x = 1; x <= B.n(); ++x)
        for (int y = 1; y <= B.n(); ++y)
            if (add_elements(phi.target, phi.at(x, y), phi.at(y, finv(x))) != zero)
                return false;
    return true;
}

// delta_1 psi (x,y) = -psi(y) + psi(yox) + psi(x) - psi(x*y).
inline Cocycle2 delta1(const FiniteBiquandle& B, const AbelianGroup& G,
                       const std::vector<GroupElement>& psi) {
    if (psi.size() != size_t(B.n())) throw std::runtime_error("delta1: psi size mismatch");
    const int n = B.n();
    std::vector<GroupElement> tab(size_t(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            GroupElement v = psi[x - 1];
            v = add_elements(G, v, scale_element(G, -1, psi[B.star(x, y) - 1]));
            v = add_elements(G, v, psi[B.circ(y, x) - 1]);
            v = add_elements(G, v, scale_element(G, -1, psi[y - 1]));
            tab[size_t(x - 1) * n + (y - 1)] = v;
        }
    return Cocycle2(G, n, std::move(tab));
}

// Witness psi with delta1(psi) = phi, for cyclic coefficients (Z or Z_m);
// std::nullopt if phi is not a coboundary.
inline std::optional<std::vector<long long>> is_coboundary(const FiniteBiquandle& B,
                                                           const Cocycle2& phi) {
    if (phi.n() != B.n()) throw std::runtime_error("cocycle: size mismatch");
    const auto& G = phi.target;
    long long m = 0;
    if (G.rank == 1 && G.torsion.empty()) m = 0;
    else if (G.rank == 0 && G.torsion.size() == 1) m = G.torsion[0];
    else throw std::runtime_error("is_coboundary: coefficients must be Z or Z_m");
    const int n = B.n();
    IntMatrix E(n * n, n);
    std::vector<Int> rhs(size_t(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            int r = (x - 1) * n + (y - 1);
            E.at(r, x - 1) += 1;
            E.at(r, B.star(x, y) - 1) -= 1;
            E.at(r, B.circ(y, x) - 1) += 1;
            E.at(r, y - 1) -= 1;
            rhs[r] = Int(static_cast<long>(phi.at(x, y)[0]));
        }
    if (m) {
        // each equation only needs to hold mod m: add one m-slack per equation
        IntMatrix E2(n * n, n + n * n);
        for (int r = 0; r < n * n; ++r) {
            for (int c = 0; c < n; ++c) E2.at(r, c) = E.at(r, c);
            E2.at(r, n + r) = Int(static_cast<long>(m));
        }
        auto sol = integer_solve(E2, rhs);
        if (!sol) return std::nullopt;
        std::vector<long long> psi(n);
        for (int i = 0; i < n; ++i) {
            Int v = (*sol)[i] % Int(static_cast<long>(m));
            if (v < 0) v += Int(static_cast<long>(m));
            psi[i] = v.get_si();
        }
        return psi;
    }
    auto sol = integer_solve(E, rhs);
    if (!sol) return std::nullopt;
    std::vector<long long> psi(n);
    for (int i = 0; i < n; ++i) {
        if (!(*sol)[i].fits_slong_p())
            throw std::runtime_error("is_coboundary: witness entry overflow");
        psi[i] = (*sol)[i].get_si();
    }
    return psi;
}

}  // namespace biq
