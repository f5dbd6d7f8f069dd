#pragma once

#include <lieposet/algebra.hpp>
#include <lieposet/matching.hpp>
#include <lieposet/rng.hpp>

#include <optional>

namespace lieposet {

// Vertices are basis indices; an edge joins two elements with a nonzero
// bracket. Any functional's form matrix is skew with support inside this
// graph, so its rank is at most twice the matching number.
inline std::vector<std::pair<int, int>> commutator_graph(const LiePosetAlgebra& g) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.dim(); ++a)
        for (int b = a + 1; b < g.dim(); ++b)
            if (!g.bracket[a][b].empty()) edges.emplace_back(a, b);
    return edges;
}

struct IndexConfig {
    int trials = 8;
    long long coeff_bound = 65536;
    std::uint64_t seed = 0;
    bool escalate = true;
};

struct UpperSample {
    int upper = 0;  // smallest corank seen
    QVec best_f;    // the functional that achieved it
};

// Smallest corank of the form matrix over randomly drawn integer
// functionals, together with the functional that achieved it; an upper
// bound for the index. Each trial draws from its own seeded stream, so
// results do not depend on evaluation order.
inline UpperSample sampled_index_upper(const LiePosetAlgebra& g, const IndexConfig& cfg,
                                       int first_trial = 0, int stop_at = 0) {
    const int d = g.dim();
    UpperSample out{d, QVec(d, 0)};
    for (int t = first_trial; t < first_trial + cfg.trials && out.upper > stop_at; ++t) {
        SplitMix64 gen = trial_stream(cfg.seed, static_cast<std::uint64_t>(t));
        QVec f(d);
        for (auto& e : f) e = static_cast<long>(gen.symmetric(cfg.coeff_bound));
        const int corank = d - q_rank(form_matrix(g, f));
        if (corank < out.upper) {
            out.upper = corank;
            out.best_f = std::move(f);
        }
    }
    return out;
}

// Closed form for the index of the traceless algebra of a poset of height at
// most two: extremal relations, corrected by component count and the up-down
// imbalance of interior elements.
inline int formula_index(const Poset& p) {
    PosetStats s = poset_stats(p);
    if (s.height > 2)
        throw std::invalid_argument("formula_index: formula inapplicable, poset has height " +
                                    std::to_string(s.height) + " but only height <= 2 is covered");
    int sum = 0;
    for (int j = 1; j <= p.n; ++j)
        if (!s.is_extremal(j)) sum += ud_contribution(p, s, j);
    return s.rel_e_count - p.n + 2 * s.components - 1 + sum;
}

struct IndexCertificate {
    int dim = 0;
    int lower = 0; // dim - 2 * matching number, valid for every functional
    int upper = 0; // best sampled corank
    std::optional<int> formula; // closed-form prediction where one applies
    std::string status; // "exact" when the bounds meet, else "bracketed"
    int trials = 0;     // trial budget spent, counting escalation
    std::uint64_t seed = 0;

    bool exact() const { return lower == upper; }
};

// Two-sided index certificate: the matching bound from below, sampling from
// above. When the first round of sampling fails to close the gap the trial
// budget is quadrupled once before settling for a bracket. For traceless
// type A algebras whose poset has height at most two, the closed-form
// prediction rides along so callers can compare it against the bracket.
inline IndexCertificate certify_index(const LiePosetAlgebra& g, const IndexConfig& cfg) {
    if (cfg.trials <= 0) throw std::invalid_argument("certify_index: needs at least one trial");
    if (cfg.coeff_bound <= 0)
        throw std::invalid_argument("certify_index: coefficient bound must be positive");
    IndexCertificate cert;
    cert.dim = g.dim();
    cert.seed = cfg.seed;
    cert.lower = g.dim() - 2 * matching_number(g.dim(), commutator_graph(g));
    cert.upper = sampled_index_upper(g, cfg, 0, cert.lower).upper;
    cert.trials = cfg.trials;
    if (cert.upper > cert.lower && cfg.escalate) {
        IndexConfig more = cfg;
        more.trials = 3 * cfg.trials;
        cert.upper = std::min(cert.upper, sampled_index_upper(g, more, cfg.trials, cert.lower).upper);
        cert.trials = 4 * cfg.trials;
    }
    cert.status = cert.exact() ? "exact" : "bracketed";
    if (g.variant == Variant::A && g.series == SeriesA::sl && height(g.source) <= 2)
        cert.formula = formula_index(g.source);
    return cert;
}

// Index of the traceless algebra of P(n,1,m), by case.
inline int cpn1m_index(int n, int m) {
    if (n <= 0 || m <= 0) throw std::invalid_argument("cpn1m_index: needs positive n, m");
    if (n == m) return n * n - 2 * n + 2;
    if (m > n) return n * (m - 2);
    return m * (n - 2);
}

// The distinguished functional on the traceless algebra of P(n,1,m): a sum
// of unit duals whose form matrix realizes the index exactly. The three
// regimes pick different supports; the tall case is the anti-transpose image
// of the wide one.
inline QVec cpn1m_functional(const LiePosetAlgebra& g, int n, int m) {
    if (g.variant != Variant::A || g.series != SeriesA::sl)
        throw std::invalid_argument("cpn1m_functional: defined on traceless type A algebras");
    if (n <= 0 || m <= 0) throw std::invalid_argument("cpn1m_functional: needs positive n, m");
    const Poset expect = complete_poset({n, 1, m});
    if (g.source.n != expect.n || g.source.lt != expect.lt)
        throw std::invalid_argument("cpn1m_functional: algebra does not come from P(" +
                                    std::to_string(n) + ",1," + std::to_string(m) + ")");
    std::map<std::pair<int, int>, int> unit_index;
    for (int k = 0; k < g.dim(); ++k) {
        const auto& e = g.basis[k];
        if (e.kind == BasisKind::MatrixUnit && e.i != e.j) unit_index[{e.i, e.j}] = k;
    }
    QVec f(g.dim(), 0);
    auto add = [&](int i, int j) { f[unit_index.at({i, j})] = 1; };
    if (n == m) {
        for (int i = 1; i <= n; ++i) add(1, n + 1 + i);
        for (int i = 2; i <= n; ++i) add(i, n + i);
    } else if (m > n) {
        for (int i = 1; i <= m; ++i) add(1, n + 1 + i);
        for (int i = 2; i <= n + 1; ++i) add(i, n + i);
    } else {
        const int N = n + m + 1;
        for (int j = 1; j <= n; ++j) add(j, N);
        for (int i = 2; i <= m + 1; ++i) add(n + 2 - i, N + 1 - i);
    }
    return f;
}

} // namespace lieposet
