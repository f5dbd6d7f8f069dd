#pragma once

#include <lieposet/linalg.hpp>
#include <lieposet/poset.hpp>

#include <map>
#include <optional>
#include <string>

namespace lieposet {

enum class SeriesA { gl, sl };

enum class BasisKind {
    MatrixUnit,     // E_ij
    DiagDifference, // E_jj - E_nn
    FullTrace,      // identity
    Solved,         // nullspace vector of the signed-variant constraints
};

struct BasisElement {
    BasisKind kind = BasisKind::MatrixUnit;
    int i = 0, j = 0; // matrix positions, 1-based; for DiagDifference j is the anchor
    QMat mat;
};

using SparseVec = std::vector<std::pair<int, mpq_class>>;

// A matrix Lie algebra attached to a poset: basis, ambient matrices and the
// full structure-constant table bracket[a][b] = coordinates of [b_a, b_b].
struct LiePosetAlgebra {
    Variant variant = Variant::A;
    SeriesA series = SeriesA::sl;
    int matrix_dim = 0;
    std::vector<BasisElement> basis;
    std::vector<std::vector<SparseVec>> bracket;
    Poset source;
    std::optional<SignedPoset> signed_source;

    int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline QMat zero_mat(int n) { return QMat(n, QVec(n, 0)); }

inline QMat unit_mat(int n, int r, int c) {
    QMat m = zero_mat(n);
    m[r - 1][c - 1] = 1;
    return m;
}

inline QMat commutator(const QMat& a, const QMat& b) {
    QMat ab = q_mul(a, b), ba = q_mul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

} // namespace detail

// Matrix algebra of an unsigned poset: the span of the units E_ij over the
// strict relations together with a diagonal part, either the full diagonal
// (gl) or its traceless slice (sl). Off-diagonal brackets never close into
// the diagonal, because i < j < i cannot happen in a partial order.
inline LiePosetAlgebra build_type_A(const Poset& p, SeriesA series) {
    const int n = p.n;
    LiePosetAlgebra g;
    g.variant = Variant::A;
    g.series = series;
    g.matrix_dim = n;
    g.source = p;

    std::vector<QVec> diag; // diagonal of each diagonal-kind element
    if (series == SeriesA::gl) {
        BasisElement tr;
        tr.kind = BasisKind::FullTrace;
        tr.mat = q_identity(n);
        g.basis.push_back(std::move(tr));
        diag.push_back(QVec(n, 1));
        for (int i = 2; i <= n; ++i) {
            BasisElement e;
            e.kind = BasisKind::MatrixUnit;
            e.i = e.j = i;
            e.mat = detail::unit_mat(n, i, i);
            g.basis.push_back(std::move(e));
            QVec d(n, 0);
            d[i - 1] = 1;
            diag.push_back(std::move(d));
        }
    } else {
        for (int j = 1; j < n; ++j) {
            BasisElement e;
            e.kind = BasisKind::DiagDifference;
            e.i = j;
            e.j = n;
            e.mat = detail::zero_mat(n);
            e.mat[j - 1][j - 1] = 1;
            e.mat[n - 1][n - 1] = -1;
            g.basis.push_back(std::move(e));
            QVec d(n, 0);
            d[j - 1] = 1;
            d[n - 1] = -1;
            diag.push_back(std::move(d));
        }
    }
    const int diag_count = g.dim();
    std::map<std::pair<int, int>, int> unit_index;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && p.less(i, j)) {
                BasisElement e;
                e.kind = BasisKind::MatrixUnit;
                e.i = i;
                e.j = j;
                e.mat = detail::unit_mat(n, i, j);
                unit_index[{i, j}] = g.dim();
                g.basis.push_back(std::move(e));
            }

    const int d = g.dim();
    g.bracket.assign(d, std::vector<SparseVec>(d));
    auto set_pair = [&](int a, int b, SparseVec v) {
        SparseVec neg;
        for (const auto& [k, c] : v) neg.emplace_back(k, -c);
        g.bracket[a][b] = std::move(v);
        g.bracket[b][a] = std::move(neg);
    };
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            SparseVec v;
            if (a < diag_count && b < diag_count) {
                // diagonal matrices commute
            } else if (a < diag_count) {
                const auto& e = g.basis[b];
                const mpq_class c = diag[a][e.i - 1] - diag[a][e.j - 1];
                if (c != 0) v.emplace_back(b, c);
            } else {
                // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
                const auto &ea = g.basis[a], &eb = g.basis[b];
                std::map<int, mpq_class> acc;
                if (ea.j == eb.i) acc[unit_index.at({ea.i, eb.j})] += 1;
                if (eb.j == ea.i) acc[unit_index.at({eb.i, ea.j})] -= 1;
                for (const auto& [k, c] : acc)
                    if (c != 0) v.emplace_back(k, c);
            }
            set_pair(a, b, std::move(v));
        }
    }
    return g;
}

namespace detail {

struct SignedLayout {
    int N = 0;                 // ambient matrix size
    std::vector<int> label;    // label of each 1-based position (0 for the middle of B)
    std::vector<int> sigma;    // form signs on the antidiagonal
};

inline SignedLayout signed_layout(const SignedPoset& sp, Variant v) {
    SignedLayout L;
    const int n = sp.n;
    L.N = (v == Variant::B) ? 2 * n + 1 : 2 * n;
    L.label.assign(L.N + 1, 0);
    L.sigma.assign(L.N + 1, 1);
    for (int p = 1; p <= L.N; ++p) {
        if (v == Variant::B) {
            L.label[p] = p - n - 1;
        } else {
            L.label[p] = p <= n ? p - n - 1 : p - n;
        }
        if (v == Variant::C) L.sigma[p] = p <= n ? 1 : -1;
    }
    return L;
}

} // namespace detail

// Signed-variant algebra: the classical algebra of the antidiagonal form
// (symplectic for C, symmetric for B and D) cut down to the entries allowed
// by the signed order. The basis is solved from the symmetry constraints;
// bracket closure is then verified entry by entry and any escape reported.
inline LiePosetAlgebra build_type_BCD(const SignedPoset& sp, Variant v) {
    if (v == Variant::A)
        throw std::invalid_argument("build_type_BCD: variant A comes from build_type_A");
    auto bad = validate_signed(sp, v);
    if (!bad.empty())
        throw std::invalid_argument(
            "build_type_BCD: order relates " + std::to_string(bad[0][0]) + " below " +
            std::to_string(bad[0][2]) + " = -(" + std::to_string(bad[0][1]) +
            "), forbidden for the orthogonal variants");

    const auto L = detail::signed_layout(sp, v);
    const int N = L.N;
    std::vector<std::pair<int, int>> pos; // allowed positions, row-major
    std::map<std::pair<int, int>, int> var;
    for (int r = 1; r <= N; ++r)
        for (int c = 1; c <= N; ++c) {
            const bool ok = (r == c) || (L.label[r] != 0 && L.label[c] != 0 &&
                                         sp.less(L.label[r], L.label[c]));
            if (!ok) continue;
            var[{r, c}] = static_cast<int>(pos.size());
            pos.emplace_back(r, c);
        }

    // X_{a,b} = -sigma(a') sigma(b') X_{b',a'} with p' = N+1-p.
    QMat cons;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        const auto [a, b] = pos[k];
        const int am = N + 1 - a, bm = N + 1 - b;
        const int s = L.sigma[am] * L.sigma[bm];
        QVec row(pos.size(), 0);
        auto it = var.find({bm, am});
        if (it == var.end()) {
            row[k] = 1; // mirrored entry is structurally zero
        } else if (it->second == static_cast<int>(k)) {
            if (s > 0) row[k] = 2; // self-mirrored: X = -X
            else continue;         // self-mirrored symplectic entries are free
        } else {
            row[k] = 1;
            row[it->second] = s;
        }
        cons.push_back(std::move(row));
    }

    LiePosetAlgebra g;
    g.variant = v;
    g.matrix_dim = N;
    g.source = underlying_poset(sp);
    g.signed_source = sp;
    std::vector<int> free_pos;
    {
        QMat work = cons;
        std::vector<int> pivots = rref(work);
        std::vector<bool> is_pivot(pos.size(), false);
        for (int c : pivots) is_pivot[c] = true;
        for (std::size_t c = 0; c < pos.size(); ++c)
            if (!is_pivot[c]) free_pos.push_back(static_cast<int>(c));
    }
    for (const QVec& vsol : nullspace(cons)) {
        BasisElement e;
        e.kind = BasisKind::Solved;
        e.mat = detail::zero_mat(N);
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (vsol[k] != 0) e.mat[pos[k].first - 1][pos[k].second - 1] = vsol[k];
        g.basis.push_back(std::move(e));
    }

    const int d = g.dim();
    g.bracket.assign(d, std::vector<SparseVec>(d));
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            QMat c = detail::commutator(g.basis[a].mat, g.basis[b].mat);
            // Positions outside the allowed support must vanish.
            for (int r = 1; r <= N; ++r)
                for (int s = 1; s <= N; ++s)
                    if (c[r - 1][s - 1] != 0 && !var.count({r, s}))
                        throw std::invalid_argument(
                            "build_type_BCD: bracket of basis elements " + std::to_string(a + 1) +
                            " and " + std::to_string(b + 1) + " leaves the span at entry (" +
                            std::to_string(r) + "," + std::to_string(s) + ")");
            // Free positions carry the coordinates; then verify exactly.
            QVec x(d, 0);
            for (int k = 0; k < d; ++k) {
                const auto [r, s] = pos[free_pos[k]];
                x[k] = c[r - 1][s - 1];
            }
            QMat rebuilt = detail::zero_mat(N);
            for (int k = 0; k < d; ++k) {
                if (x[k] == 0) continue;
                for (int r = 0; r < N; ++r)
                    for (int s = 0; s < N; ++s) rebuilt[r][s] += x[k] * g.basis[k].mat[r][s];
            }
            if (rebuilt != c)
                throw std::invalid_argument(
                    "build_type_BCD: bracket of basis elements " + std::to_string(a + 1) +
                    " and " + std::to_string(b + 1) + " leaves the span");
            SparseVec sv, ng;
            for (int k = 0; k < d; ++k)
                if (x[k] != 0) {
                    sv.emplace_back(k, x[k]);
                    ng.emplace_back(k, -x[k]);
                }
            g.bracket[a][b] = std::move(sv);
            g.bracket[b][a] = std::move(ng);
        }
    return g;
}

// Coordinates of an ambient matrix in the algebra's basis; throws when the
// matrix is outside the span.
inline QVec coordinates(const LiePosetAlgebra& g, const QMat& m) {
    const int d = g.dim();
    QVec x(d, 0);
    if (g.variant == Variant::A) {
        for (int k = 0; k < d; ++k) {
            const auto& e = g.basis[k];
            switch (e.kind) {
                case BasisKind::FullTrace:
                    // Entry (1,1) only ever comes from the trace element.
                    x[k] = m[0][0];
                    break;
                case BasisKind::DiagDifference:
                    x[k] = m[e.i - 1][e.i - 1];
                    break;
                case BasisKind::MatrixUnit:
                    if (e.i == e.j) x[k] = m[e.i - 1][e.i - 1] - m[0][0];
                    else x[k] = m[e.i - 1][e.j - 1];
                    break;
                case BasisKind::Solved:
                    throw std::logic_error("coordinates: solved element in a type A basis");
            }
        }
    } else {
        // Exact solve over the union support of the basis and the target.
        std::vector<std::pair<int, int>> support;
        const int N = g.matrix_dim;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                bool used = m[r][c] != 0;
                for (int k = 0; k < d && !used; ++k) used = g.basis[k].mat[r][c] != 0;
                if (used) support.emplace_back(r, c);
            }
        QMat a(support.size(), QVec(d, 0));
        QVec b(support.size(), 0);
        for (std::size_t s = 0; s < support.size(); ++s) {
            for (int k = 0; k < d; ++k) a[s][k] = g.basis[k].mat[support[s].first][support[s].second];
            b[s] = m[support[s].first][support[s].second];
        }
        auto sol = solve_linear(a, b);
        if (!sol) throw std::invalid_argument("coordinates: matrix is not in the span");
        x = *sol;
    }
    // Verify exactly; the structural read-off above does not check stray entries.
    QMat rebuilt = detail::zero_mat(g.matrix_dim);
    for (int k = 0; k < d; ++k) {
        if (x[k] == 0) continue;
        for (int r = 0; r < g.matrix_dim; ++r)
            for (int c = 0; c < g.matrix_dim; ++c) rebuilt[r][c] += x[k] * g.basis[k].mat[r][c];
    }
    if (rebuilt != m) throw std::invalid_argument("coordinates: matrix is not in the span");
    return x;
}

// ad_x in basis coordinates: column b holds [x, e_b].
inline QMat ad_matrix(const LiePosetAlgebra& g, const QVec& x) {
    const int d = g.dim();
    if (static_cast<int>(x.size()) != d)
        throw std::invalid_argument("ad_matrix: coordinate length mismatch");
    QMat m(d, QVec(d, 0));
    for (int a = 0; a < d; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < d; ++b)
            for (const auto& [k, c] : g.bracket[a][b]) m[k][b] += x[a] * c;
    }
    return m;
}

// The skew form of a functional: B[a][b] = f([e_a, e_b]) with f given by its
// values on the basis.
inline QMat form_matrix(const LiePosetAlgebra& g, const QVec& f) {
    const int d = g.dim();
    if (static_cast<int>(f.size()) != d)
        throw std::invalid_argument("form_matrix: functional length mismatch");
    QMat m(d, QVec(d, 0));
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            mpq_class v = 0;
            for (const auto& [k, c] : g.bracket[a][b]) v += c * f[k];
            m[a][b] = v;
            m[b][a] = -v;
        }
    return m;
}

// Bracket of two coordinate vectors through the structure-constant table.
inline QVec bracket_coords(const LiePosetAlgebra& g, const QVec& x, const QVec& y) {
    const int d = g.dim();
    QVec out(d, 0);
    for (int a = 0; a < d; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < d; ++b) {
            if (y[b] == 0) continue;
            for (const auto& [k, c] : g.bracket[a][b]) out[k] += x[a] * y[b] * c;
        }
    }
    return out;
}

} // namespace lieposet
