#pragma once

// Finite biquandles as a pair of n x n operation tables over {1..n},
// axiom checking, automorphism search, and the admissibility condition
// x*y == x o f(y) required by the coloring invariant.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace biq {

// Bijection of {1..n}; img[i] is the image of i+1.
struct Permutation {
    std::vector<int> img;

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x - 1]; }

    static Permutation identity(int n) {
        Permutation p;
        p.img.resize(n);
        std::iota(p.img.begin(), p.img.end(), 1);
        return p;
    }

    bool is_valid() const {
        std::vector<bool> seen(img.size(), false);
        for (int v : img) {
            if (v < 1 || v > n() || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
        return true;
    }

    Permutation inverse() const {
        Permutation p;
        p.img.resize(img.size());
        for (int i = 0; i < n(); ++i) p.img[img[i] - 1] = i + 1;
        return p;
    }

    // (this o other): apply other first.
    Permutation compose(const Permutation& other) const {
        Permutation p;
        p.img.resize(img.size());
        for (int i = 0; i < n(); ++i) p.img[i] = (*this)(other(i + 1));
        return p;
    }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }

    std::string serialize() const {
        std::ostringstream os;
        for (int i = 0; i < n(); ++i) os << (i ? " " : "") << img[i];
        return os.str();
    }

    // One line of n integers (images of 1..n). Throws std::runtime_error.
    static Permutation parse(const std::string& text, int expected_n) {
        Permutation p;
        std::istringstream is(text);
        int v;
        while (is >> v) p.img.push_back(v);
        if (p.n() != expected_n || !p.is_valid())
            throw std::runtime_error("bad permutation: '" + text + "'");
        return p;
    }
};

struct AxiomViolation {
    int axiom;                    // 1, 2 or 3
    std::array<int, 3> witness;   // unused slots are 0
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool valid() const { return violations.empty(); }
};

class FiniteBiquandle {
public:
    FiniteBiquandle() : n_(0) {}
    FiniteBiquandle(int n, std::vector<int> star, std::vector<int> circ)
        : n_(n), star_(std::move(star)), circ_(std::move(circ)) {
        if (n_ <= 0 || star_.size() != size_t(n_) * n_ || circ_.size() != size_t(n_) * n_)
            throw std::runtime_error("biquandle: malformed tables");
        for (int v : star_) if (v < 1 || v > n_) throw std::runtime_error("biquandle: star entry out of range");
        for (int v : circ_) if (v < 1 || v > n_) throw std::runtime_error("biquandle: circ entry out of range");
    }

    int n() const { return n_; }
    int star(int x, int y) const { return star_[size_t(x - 1) * n_ + (y - 1)]; }
    int circ(int x, int y) const { return circ_[size_t(x - 1) * n_ + (y - 1)]; }

    // Builds from an n x 2n matrix: star block in columns 1..n, circ block in n+1..2n.
    static FiniteBiquandle from_matrix(int n, const std::vector<int>& rows) {
        std::vector<int> st(size_t(n) * n), ci(size_t(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                st[size_t(x) * n + y] = rows[size_t(x) * 2 * n + y];
                ci[size_t(x) * n + y] = rows[size_t(x) * 2 * n + n + y];
            }
        return FiniteBiquandle(n, st, ci);
    }

    // Text format: first line n, then n lines of 2n integers.
    static FiniteBiquandle parse(const std::string& text) {
        std::istringstream is(text);
        int n;
        if (!(is >> n) || n <= 0) throw std::runtime_error("biquandle: bad order line");
        std::vector<int> rows(size_t(n) * 2 * n);
        for (auto& v : rows)
            if (!(is >> v)) throw std::runtime_error("biquandle: truncated table");
        return from_matrix(n, rows);
    }

    std::string serialize() const {
        std::ostringstream os;
        os << n_ << "\n";
        for (int x = 1; x <= n_; ++x) {
            for (int y = 1; y <= n_; ++y) os << (y > 1 ? " " : "") << star(x, y);
            for (int y = 1; y <= n_; ++y) os << " " << circ(x, y);
            os << "\n";
        }
        return os.str();
    }

private:
    int n_;
    std::vector<int> star_, circ_;
};

// Reports every violated axiom instance (not just the first), so table
// mutations can be attributed to the exact axiom they break.
inline AxiomReport check_axioms(const FiniteBiquandle& B) {
    AxiomReport rep;
    const int n = B.n();
    for (int x = 1; x <= n; ++x)
        if (B.star(x, x) != B.circ(x, x))
            rep.violations.push_back({1, {x, 0, 0}, "x*x != xox"});
    // Axiom 2: right-translations bijective, and S invertible.
    for (int x = 1; x <= n; ++x) {
        std::vector<bool> seen_s(n, false), seen_c(n, false);
        bool dup_s = false, dup_c = false;
        for (int z = 1; z <= n; ++z) {
            if (seen_s[B.star(z, x) - 1]) dup_s = true;
            seen_s[B.star(z, x) - 1] = true;
            if (seen_c[B.circ(z, x) - 1]) dup_c = true;
            seen_c[B.circ(z, x) - 1] = true;
        }
        if (dup_s) rep.violations.push_back({2, {x, 0, 0}, "z -> z*x not bijective"});
        if (dup_c) rep.violations.push_back({2, {x, 0, 0}, "w -> wox not bijective"});
    }
    {
        std::vector<bool> seen(size_t(n) * n, false);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                size_t k = size_t(B.circ(y, x) - 1) * n + (B.star(x, y) - 1);
                if (seen[k])
                    rep.violations.push_back({2, {x, y, 0}, "S not injective"});
                seen[k] = true;
            }
    }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                if (B.circ(B.circ(z, y), B.star(x, y)) != B.circ(B.circ(z, x), B.circ(y, x)))
                    rep.violations.push_back({3, {x, y, z}, "(zoy)o(x*y) != (zox)o(yox)"});
                if (B.star(B.circ(y, x), B.circ(z, x)) != B.circ(B.star(y, z), B.star(x, z)))
                    rep.violations.push_back({3, {x, y, z}, "(yox)*(zox) != (y*z)o(x*z)"});
                if (B.star(B.star(x, y), B.circ(z, y)) != B.star(B.star(x, z), B.star(y, z)))
                    rep.violations.push_back({3, {x, y, z}, "(x*y)*(zoy) != (x*z)*(y*z)"});
            }
    return rep;
}

// S(x,y) = (yox, x*y).
inline std::pair<int, int> s_map(const FiniteBiquandle& B, int x, int y) {
    return {B.circ(y, x), B.star(x, y)};
}

// Precomputed inverse of S; usable only on valid biquandles.
class SInverse {
public:
    explicit SInverse(const FiniteBiquandle& B) : n_(B.n()), table_(size_t(n_) * n_) {
        for (int x = 1; x <= n_; ++x)
            for (int y = 1; y <= n_; ++y) {
                auto [u, v] = s_map(B, x, y);
                table_[size_t(u - 1) * n_ + (v - 1)] = {x, y};
            }
    }
    std::pair<int, int> operator()(int u, int v) const {
        return table_[size_t(u - 1) * n_ + (v - 1)];
    }

private:
    int n_;
    std::vector<std::pair<int, int>> table_;
};

inline std::pair<int, int> s_inverse(const FiniteBiquandle& B, int u, int v) {
    return SInverse(B)(u, v);
}

inline bool is_homomorphism(const FiniteBiquandle& B1, const FiniteBiquandle& B2,
                            const std::vector<int>& map) {
    if (map.size() != size_t(B1.n())) return false;
    for (int v : map)
        if (v < 1 || v > B2.n()) throw std::runtime_error("homomorphism map out of range");
    auto f = [&](int x) { return map[x - 1]; };
    for (int x = 1; x <= B1.n(); ++x)
        for (int y = 1; y <= B1.n(); ++y) {
            if (f(B1.star(x, y)) != B2.star(f(x), f(y))) return false;
            if (f(B1.circ(x, y)) != B2.circ(f(x), f(y))) return false;
        }
    return true;
}

// All automorphisms, in lexicographic order of image sequences.
// Brute force over S_n with row pruning; intended envelope n <= 8.
inline std::vector<Permutation> automorphisms(const FiniteBiquandle& B) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(B.n());
    std::sort(p.img.begin(), p.img.end());
    do {
        if (is_homomorphism(B, B, p.img)) out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

inline bool is_admissible(const FiniteBiquandle& B, const Permutation& f) {
    for (int x = 1; x <= B.n(); ++x)
        for (int y = 1; y <= B.n(); ++y)
            if (B.star(x, y) != B.circ(x, f(y))) return false;
    return true;
}

inline std::vector<Permutation> admissible_automorphisms(const FiniteBiquandle& B) {
    std::vector<Permutation> out;
    for (const auto& f : automorphisms(B))
        if (is_admissible(B, f)) out.push_back(f);
    return out;
}

enum class LatinClass { Latin, SemiLatin, Neither };

struct LatinReport {
    LatinClass cls;
    bool star_family_bijective;  // every row x: y -> x*y bijective
    bool circ_family_bijective;
};

inline LatinReport latin_class(const FiniteBiquandle& B) {
    const int n = B.n();
    auto family_ok = [&](bool star) {
        for (int x = 1; x <= n; ++x) {
            std::vector<bool> seen(n, false);
            for (int y = 1; y <= n; ++y) {
                int v = star ? B.star(x, y) : B.circ(x, y);
                if (seen[v - 1]) return false;
                seen[v - 1] = true;
            }
        }
        return true;
    };
    LatinReport r{};
    r.star_family_bijective = family_ok(true);
    r.circ_family_bijective = family_ok(false);
    if (r.star_family_bijective && r.circ_family_bijective) r.cls = LatinClass::Latin;
    else if (r.star_family_bijective || r.circ_family_bijective) r.cls = LatinClass::SemiLatin;
    else r.cls = LatinClass::Neither;
    return r;
}

// Trivial quandle x*y = xoy = x (every permutation is admissible for it).
inline FiniteBiquandle trivial_quandle(int n) {
    std::vector<int> t(size_t(n) * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) t[size_t(x - 1) * n + (y - 1)] = x;
    return FiniteBiquandle(n, t, t);
}

}  // namespace biq
