#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Exact linear algebra over arbitrary-precision integers and rationals.
// Everything here is deliberately dense: the matrices in this project are
// small (a few dozen rows), and dense fraction-free elimination is both the
// simplest and the fastest option at that scale.

namespace lieposet {

using ZMat = std::vector<std::vector<mpz_class>>;
using QMat = std::vector<std::vector<mpq_class>>;
using QVec = std::vector<mpq_class>;

inline QMat q_identity(int n) {
    QMat m(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
    const int n = static_cast<int>(a.size());
    const int k = n ? static_cast<int>(a[0].size()) : 0;
    const int m = k && !b.empty() ? static_cast<int>(b[0].size()) : 0;
    if (static_cast<int>(b.size()) != k)
        throw std::invalid_argument("q_mul: inner dimensions disagree");
    QMat c(n, QVec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) {
                if (b[l][j] == 0) continue;
                c[i][j] += a[i][l] * b[l][j];
            }
        }
    return c;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination with row
// pivoting and column skipping. Intermediate entries stay minors of the input,
// so every division below is exact.
inline int bareiss_rank(ZMat a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// Determinant of a square integer matrix, same elimination scheme.
inline mpz_class bareiss_det(ZMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != c) { std::swap(a[c], a[pivot]); sign = -sign; }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                mpz_class num = a[c][c] * a[i][j] - a[i][c] * a[c][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Rational rank: scale each row to integers (rank is invariant), then Bareiss.
inline int q_rank(const QMat& a) {
    ZMat z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_class scale = 1;
        for (const auto& e : a[i]) scale = lcm(scale, e.get_den());
        z[i].reserve(a[i].size());
        for (const auto& e : a[i]) {
            mpq_class v = e * mpq_class(scale);
            v.canonicalize();
            z[i].push_back(v.get_num());
        }
    }
    return bareiss_rank(std::move(z));
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(QMat& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        const mpq_class inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const mpq_class f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// One exact solution of A x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero.
inline std::optional<QVec> solve_linear(QMat a, const QVec& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (static_cast<int>(b.size()) != rows)
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        // After rref the pivot row k reads x[pivots[k]] + (free terms) = rhs.
        mpq_class v = a[k][cols];
        for (int j = pivots[k] + 1; j < cols; ++j)
            if (a[k][j] != 0) v -= a[k][j] * x[j];
        x[pivots[k]] = v;
    }
    return x;
}

// Basis of the right nullspace of A.
inline std::vector<QVec> nullspace(QMat a) {
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial det(tI - M), monic, returned as coefficients
// c[0] + c[1] t + ... + c[d] t^d with c[d] = 1. Computed by evaluating the
// determinant at d+1 integer points after clearing denominators, then
// interpolating; each evaluation is one fraction-free determinant.
inline std::vector<mpq_class> char_poly(const QMat& m) {
    const int d = static_cast<int>(m.size());
    if (d == 0) return {mpq_class(1)};
    mpz_class den = 1;
    for (const auto& row : m)
        for (const auto& e : row) den = lcm(den, e.get_den());
    ZMat n(d, std::vector<mpz_class>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            mpq_class v = m[i][j] * mpq_class(den);
            v.canonicalize();
            n[i][j] = v.get_num();
        }
    mpz_class den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), d);
    std::vector<mpq_class> values(d + 1);
    for (int t = 0; t <= d; ++t) {
        ZMat a = n;
        for (int i = 0; i < d; ++i) {
            a[i][i] = den * t - n[i][i];
            for (int j = 0; j < d; ++j)
                if (j != i) a[i][j] = -n[i][j];
        }
        values[t] = mpq_class(bareiss_det(std::move(a))) / mpq_class(den_pow);
        values[t].canonicalize();
    }
    // Lagrange interpolation on the nodes 0..d: master = prod (x - s), each
    // basis numerator is master / (x - t) by synthetic division.
    std::vector<mpq_class> master(d + 2, 0);
    master[0] = 1;
    int deg = 0;
    for (int s = 0; s <= d; ++s) {
        for (int k = deg + 1; k > 0; --k)
            master[k] = master[k - 1] - mpq_class(s) * master[k];
        master[0] = master[0] * mpq_class(-s);
        ++deg;
    }
    std::vector<mpq_class> coeff(d + 1, 0);
    for (int t = 0; t <= d; ++t) {
        // Synthetic division of master by (x - t).
        std::vector<mpq_class> q(d + 1, 0);
        mpq_class carry = master[d + 1];
        for (int k = d; k >= 0; --k) {
            q[k] = carry;
            carry = master[k] + mpq_class(t) * carry;
        }
        mpq_class denom = 0;
        {
            // q evaluated at t.
            mpq_class x = 1;
            for (int k = 0; k <= d; ++k) { denom += q[k] * x; x *= t; }
        }
        const mpq_class w = values[t] / denom;
        for (int k = 0; k <= d; ++k) coeff[k] += w * q[k];
    }
    for (auto& c : coeff) c.canonicalize();
    return coeff;
}

// ---- small polynomial toolkit (dense, coefficients low to high) ----

inline std::vector<mpq_class> poly_derivative(const std::vector<mpq_class>& p) {
    std::vector<mpq_class> d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * mpq_class(static_cast<long>(k)));
    if (d.empty()) d.push_back(0);
    return d;
}

inline void poly_trim(std::vector<mpq_class>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline std::vector<mpq_class> poly_mod(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        const mpq_class f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        poly_trim(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

inline std::vector<mpq_class> poly_gcd(std::vector<mpq_class> a, std::vector<mpq_class> b) {
    poly_trim(a);
    poly_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    const mpq_class lead = a.back();
    if (lead != 0 && lead != 1)
        for (auto& c : a) c /= lead;
    return a;
}

inline std::vector<mpq_class> poly_div_exact(const std::vector<mpq_class>& a,
                                             const std::vector<mpq_class>& b) {
    std::vector<mpq_class> rem = a, q(a.size(), 0);
    poly_trim(rem);
    while (rem.size() >= b.size() && !(rem.size() == 1 && rem[0] == 0)) {
        const mpq_class f = rem.back() / b.back();
        const std::size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) rem[shift + k] -= f * b[k];
        poly_trim(rem);
    }
    poly_trim(q);
    return q;
}

inline mpq_class poly_eval(const std::vector<mpq_class>& p, const mpq_class& x) {
    mpq_class v = 0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

namespace detail {

// Divisors of |n| via trial division. Returns nullopt when a composite
// cofactor beyond the trial bound survives (divisor list would be incomplete).
inline std::optional<std::vector<mpz_class>> all_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) return std::nullopt;
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace detail

// All rational roots of p (without multiplicity), or nullopt if the divisor
// enumeration needed by the rational-root theorem is infeasible. The search
// runs on the square-free part, whose extreme coefficients stay small.
inline std::optional<std::vector<mpq_class>> rational_roots(std::vector<mpq_class> p) {
    poly_trim(p);
    if (p.size() == 1) return std::vector<mpq_class>{};
    std::vector<mpq_class> sf = poly_div_exact(p, poly_gcd(p, poly_derivative(p)));
    std::vector<mpq_class> roots;
    // Strip zero roots first.
    std::size_t low = 0;
    while (low < sf.size() && sf[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        sf.erase(sf.begin(), sf.begin() + static_cast<long>(low));
    }
    if (sf.size() == 1) return roots;
    mpz_class den = 1;
    for (const auto& c : sf) den = lcm(den, c.get_den());
    std::vector<mpz_class> ic;
    for (const auto& c : sf) {
        mpq_class v = c * mpq_class(den);
        v.canonicalize();
        ic.push_back(v.get_num());
    }
    mpz_class content = 0;
    for (const auto& c : ic) content = gcd(content, c);
    for (auto& c : ic) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    auto nums = detail::all_divisors(ic.front());
    auto dens = detail::all_divisors(ic.back());
    if (!nums || !dens) return std::nullopt;
    for (const auto& a : *nums)
        for (const auto& b : *dens) {
            if (gcd(a, b) != 1) continue;
            for (int s : {1, -1}) {
                mpq_class cand(s > 0 ? a : mpz_class(-a), b);
                cand.canonicalize();
                if (poly_eval(sf, cand) == 0) roots.push_back(cand);
            }
        }
    return roots;
}

} // namespace lieposet
