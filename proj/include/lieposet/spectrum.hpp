#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <lieposet/algebra.hpp>
#include <lieposet/index.hpp>
#include <lieposet/linalg.hpp>

namespace lieposet {

// A regular functional, recovered from the certification sampler: re-runs the
// certificate's draw sequence and returns the first one whose form has full
// rank. Rejects algebras that do not certify to index zero.
inline QVec find_frobenius_functional(const LiePosetAlgebra& g, const IndexConfig& cfg) {
    IndexCertificate cert = certify_index(g, cfg);
    if (cert.upper != 0)
        throw std::invalid_argument(
            "find_frobenius_functional: the index must certify to zero");
    IndexConfig replay = cfg;
    replay.trials = cert.trials;
    UpperSample sample = sampled_index_upper(g, replay, 0, 0);
    return sample.best_f;
}

// The unique x with f([x, e_k]) = f(e_k) on every basis element, solved
// exactly from the transposed form matrix.
inline QVec principal_element(const LiePosetAlgebra& g, const QVec& f) {
    const int d = g.dim();
    if (static_cast<int>(f.size()) != d)
        throw std::invalid_argument("principal_element: functional length mismatch");
    const QMat b = form_matrix(g, f);
    QMat bt(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) bt[i][j] = b[j][i];
    if (q_rank(bt) != d)
        throw std::invalid_argument(
            "principal_element: the functional's form must be nonsingular");
    auto solution = solve_linear(std::move(bt), f);
    return *solution;
}

inline QMat ambient_matrix(const LiePosetAlgebra& g, const QVec& coords) {
    QMat m(g.matrix_dim, QVec(g.matrix_dim, 0));
    for (int a = 0; a < g.dim(); ++a) {
        if (coords[a] == 0) continue;
        const QMat& base = g.basis[a].mat;
        for (int i = 0; i < g.matrix_dim; ++i)
            for (int j = 0; j < g.matrix_dim; ++j)
                if (base[i][j] != 0) m[i][j] += coords[a] * base[i][j];
    }
    return m;
}

struct SpectrumEntry {
    mpq_class eigenvalue;
    int multiplicity = 0;

    bool operator==(const SpectrumEntry& o) const {
        return eigenvalue == o.eigenvalue && multiplicity == o.multiplicity;
    }
};

struct AdSpectrum {
    std::vector<SpectrumEntry> eigenvalues; // ascending, with algebraic multiplicities
    bool complete = false;                  // multiplicities cover the whole dimension
    std::vector<mpq_class> characteristic;  // monic coefficients, kept when incomplete
};

namespace detail {

// Dimension of the generalized eigenspace: corank of (m - lambda I)^e once
// the rank of the powers stabilizes, squaring to pass the dimension quickly.
inline int generalized_multiplicity(const QMat& m, const mpq_class& lambda) {
    const int d = static_cast<int>(m.size());
    QMat n = m;
    for (int i = 0; i < d; ++i) n[i][i] -= lambda;
    int rank = q_rank(n);
    if (rank == d) return 0;
    for (long exponent = 1; exponent < d;) {
        n = q_mul(n, n);
        exponent *= 2;
        const int next = q_rank(n);
        if (next == rank) break;
        rank = next;
    }
    return d - rank;
}

// Divisors of |v| from trial division; a leftover cofactor above the sieve
// bound is folded in as if prime, and the list is truncated at the cap. Both
// compromises can only hide candidates, and the caller detects that by the
// multiplicity sum coming up short.
inline std::vector<mpz_class> divisors_of(mpz_class v, std::size_t cap) {
    v = abs(v);
    if (v == 0) return {};
    std::vector<std::pair<mpz_class, int>> factors;
    for (mpz_class p = 2; p * p <= v && p < 1000000; ++p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (v > 1) factors.emplace_back(v, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t have = divs.size();
        mpz_class power = 1;
        for (int k = 1; k <= e && divs.size() <= cap; ++k) {
            power *= p;
            for (std::size_t t = 0; t < have && divs.size() <= cap; ++t)
                divs.push_back(divs[t] * power);
        }
        if (divs.size() > cap) break;
    }
    return divs;
}

inline mpq_class poly_eval(const std::vector<mpq_class>& coeff, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace detail

// Exact eigenvalues of ad x with algebraic multiplicities. Candidates are
// swept cheapest first: the expected {0, 1}, then small integers, then
// rational roots of the characteristic polynomial. If the rational
// multiplicities do not exhaust the dimension the report is marked
// incomplete and carries the characteristic polynomial instead.
inline AdSpectrum ad_spectrum(const LiePosetAlgebra& g, const QVec& x) {
    const QMat m = ad_matrix(g, x);
    const int d = g.dim();
    AdSpectrum out;
    int total = 0;
    std::set<mpq_class> tried;
    auto try_lambda = [&](mpq_class lambda) {
        lambda.canonicalize();
        if (total == d || !tried.insert(lambda).second) return;
        const int mult = detail::generalized_multiplicity(m, lambda);
        if (mult > 0) {
            out.eigenvalues.push_back({lambda, mult});
            total += mult;
        }
    };

    try_lambda(0);
    try_lambda(1);
    for (int k = 1; k <= d && total < d; ++k) {
        try_lambda(k);
        try_lambda(-k);
    }

    std::vector<mpq_class> cp;
    if (total < d) {
        cp = char_poly(m);
        mpz_class denom = 1;
        for (const auto& c : cp) denom = lcm(denom, c.get_den());
        std::size_t low = 0;
        while (low < cp.size() && cp[low] == 0) ++low;
        if (low < cp.size()) {
            mpq_class tail = cp[low] * mpq_class(denom);
            tail.canonicalize();
            const auto numerators = detail::divisors_of(tail.get_num(), 4096);
            const auto denominators = detail::divisors_of(denom, 64);
            for (const auto& p : numerators)
                for (const auto& q : denominators) {
                    if (total == d) break;
                    mpq_class root(p, q);
                    root.canonicalize();
                    if (detail::poly_eval(cp, root) == 0) try_lambda(root);
                    root = -root;
                    if (detail::poly_eval(cp, root) == 0) try_lambda(root);
                }
        }
    }

    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  return a.eigenvalue < b.eigenvalue;
              });
    out.complete = total == d;
    if (!out.complete) out.characteristic = cp.empty() ? char_poly(m) : cp;
    return out;
}

struct SpectrumReport {
    QVec functional;       // values on the basis
    QVec principal;        // basis coordinates of the principal element
    QMat principal_matrix; // the same element in the ambient matrix algebra
    AdSpectrum spectrum;
    bool residual_zero = false; // f([principal, e_k]) = f(e_k) re-verified
};

inline SpectrumReport spectrum_report(const LiePosetAlgebra& g, const IndexConfig& cfg) {
    SpectrumReport report;
    report.functional = find_frobenius_functional(g, cfg);
    report.principal = principal_element(g, report.functional);
    report.principal_matrix = ambient_matrix(g, report.principal);
    report.spectrum = ad_spectrum(g, report.principal);

    const QMat b = form_matrix(g, report.functional);
    report.residual_zero = true;
    for (int k = 0; k < g.dim(); ++k) {
        mpq_class acc = 0;
        for (int a = 0; a < g.dim(); ++a) acc += report.principal[a] * b[a][k];
        if (acc != report.functional[k]) report.residual_zero = false;
    }
    return report;
}

} // namespace lieposet
