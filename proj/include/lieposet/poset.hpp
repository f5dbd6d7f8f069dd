#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieposet {

// Finite poset on labels 1..n, naturally labeled: a < b in the order implies
// a < b as integers. Constructors relabel their input if needed to keep this
// invariant, so lt is always strictly upper triangular.
struct Poset {
    int n = 0;
    std::vector<std::vector<bool>> lt; // lt[i][j]: label i+1 strictly below label j+1

    bool less(int a, int b) const { return lt[a - 1][b - 1]; }
    bool leq(int a, int b) const { return a == b || lt[a - 1][b - 1]; }
    bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }
};

namespace detail {

inline void transitive_close(std::vector<std::vector<bool>>& rel) {
    const int m = static_cast<int>(rel.size());
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i) {
            if (!rel[i][k]) continue;
            for (int j = 0; j < m; ++j)
                if (rel[k][j]) rel[i][j] = true;
        }
}

// Stable topological permutation: out[i] is the new 0-based position of i,
// chosen so that positions respect the order and ties go to the smaller of
// the reference ranks. For an already natural matrix this is the identity.
inline std::vector<int> natural_positions(const std::vector<std::vector<bool>>& rel) {
    const int m = static_cast<int>(rel.size());
    std::vector<int> indeg(m, 0), pos(m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (rel[i][j]) ++indeg[j];
    for (int next = 0; next < m; ++next) {
        int pick = -1;
        for (int i = 0; i < m; ++i)
            if (pos[i] < 0 && indeg[i] == 0) { pick = i; break; }
        if (pick < 0) throw std::logic_error("natural_positions: relation has a cycle");
        pos[pick] = next;
        for (int j = 0; j < m; ++j)
            if (rel[pick][j]) --indeg[j];
    }
    return pos;
}

inline Poset from_closed_relation(const std::vector<std::vector<bool>>& rel) {
    const int m = static_cast<int>(rel.size());
    std::vector<int> pos = natural_positions(rel);
    Poset p;
    p.n = m;
    p.lt.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (rel[i][j]) p.lt[pos[i]][pos[j]] = true;
    return p;
}

// Depth-first cycle search in the raw cover digraph; returns a cycle as a
// label sequence a, b, ..., a when one exists.
inline std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> state(n, 0), stack;
    std::vector<int> cycle;
    auto dfs = [&](auto&& self, int v) -> bool {
        state[v] = 1;
        stack.push_back(v);
        for (int w : adj[v]) {
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                cycle.push_back(w);
                return true;
            }
            if (state[w] == 0 && self(self, w)) return true;
        }
        state[v] = 2;
        stack.pop_back();
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && dfs(dfs, v)) return cycle;
    return {};
}

} // namespace detail

// Builds the poset generated by the given relations. The pairs may be any
// generating set, not just covers. Rejects out-of-range endpoints and cycles;
// relabels by a stable topological sort when the input labeling is not
// natural.
inline Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n <= 0) throw std::invalid_argument("from_cover_relations: poset needs at least one element");
    std::vector<std::vector<int>> adj(n);
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (auto [a, b] : covers) {
        if (a < 1 || b < 1 || a > n || b > n)
            throw std::invalid_argument("from_cover_relations: pair (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") out of range for n=" + std::to_string(n));
        if (a == b)
            throw std::invalid_argument("from_cover_relations: relation " + std::to_string(a) +
                                        " < " + std::to_string(a) + " violates irreflexivity");
        adj[a - 1].push_back(b - 1);
        rel[a - 1][b - 1] = true;
    }
    auto cyc = detail::find_cycle(n, adj);
    if (!cyc.empty()) {
        std::string msg = "from_cover_relations: relations close into the cycle ";
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (k) msg += " < ";
            msg += std::to_string(cyc[k] + 1);
        }
        throw std::invalid_argument(msg);
    }
    detail::transitive_close(rel);
    return detail::from_closed_relation(rel);
}

inline std::vector<std::pair<int, int>> cover_relations(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            if (!p.lt[i][j]) continue;
            bool is_cover = true;
            for (int k = i + 1; k < j; ++k)
                if (p.lt[i][k] && p.lt[k][j]) { is_cover = false; break; }
            if (is_cover) out.emplace_back(i + 1, j + 1);
        }
    return out;
}

// P(a_1, ..., a_k): antichain levels of the given sizes, every element of a
// lower level below every element of a higher one.
inline Poset complete_poset(const std::vector<int>& levels) {
    if (levels.empty()) throw std::invalid_argument("complete_poset: needs at least one level");
    for (int a : levels)
        if (a <= 0) throw std::invalid_argument("complete_poset: level sizes must be positive");
    int n = 0;
    for (int a : levels) n += a;
    Poset p;
    p.n = n;
    p.lt.assign(n, std::vector<bool>(n, false));
    std::vector<int> level_of(n);
    {
        int e = 0;
        for (std::size_t t = 0; t < levels.size(); ++t)
            for (int k = 0; k < levels[t]; ++k) level_of[e++] = static_cast<int>(t);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (level_of[i] < level_of[j]) p.lt[i][j] = true;
    return p;
}

inline Poset dual(const Poset& p) {
    Poset d;
    d.n = p.n;
    d.lt.assign(p.n, std::vector<bool>(p.n, false));
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.lt[i][j]) d.lt[p.n - 1 - j][p.n - 1 - i] = true;
    return d;
}

inline Poset disjoint_union(const Poset& p, const Poset& q) {
    Poset u;
    u.n = p.n + q.n;
    u.lt.assign(u.n, std::vector<bool>(u.n, false));
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) u.lt[i][j] = p.lt[i][j];
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) u.lt[p.n + i][p.n + j] = q.lt[i][j];
    return u;
}

// Subposet on the given labels, relabeled 1..k in increasing label order.
inline Poset induced(const Poset& p, std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (int a : labels)
        if (a < 1 || a > p.n) throw std::invalid_argument("induced: label out of range");
    const int m = static_cast<int>(labels.size());
    if (m == 0) throw std::invalid_argument("induced: needs at least one element");
    Poset s;
    s.n = m;
    s.lt.assign(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s.lt[i][j] = p.less(labels[i], labels[j]);
    return s;
}

inline std::vector<int> strict_down_set(const Poset& p, int a) {
    std::vector<int> out;
    for (int k = 1; k <= p.n; ++k)
        if (p.less(k, a)) out.push_back(k);
    return out;
}

inline std::vector<int> strict_up_set(const Poset& p, int a) {
    std::vector<int> out;
    for (int k = 1; k <= p.n; ++k)
        if (p.less(a, k)) out.push_back(k);
    return out;
}

// Everything comparable to i, together with i itself. Only defined away from
// the extremes: i must have elements both above and below it.
inline Poset cone(const Poset& p, int i) {
    if (i < 1 || i > p.n) throw std::invalid_argument("cone: label out of range");
    auto dn = strict_down_set(p, i), up = strict_up_set(p, i);
    if (dn.empty() || up.empty())
        throw std::invalid_argument("cone: element " + std::to_string(i) +
                                    " is extremal, the cone needs interior elements");
    std::vector<int> keep = dn;
    keep.push_back(i);
    keep.insert(keep.end(), up.begin(), up.end());
    return induced(p, keep);
}

inline bool is_minimal(const Poset& p, int a) { return strict_down_set(p, a).empty(); }
inline bool is_maximal(const Poset& p, int a) { return strict_up_set(p, a).empty(); }

// Pushout of p and q along identified extremal pairs (p_label, q_label).
// Each pair must join two minimal or two maximal elements; the identification
// map must be injective on both sides. The result is relabeled naturally,
// p's elements taking positions before q's leftover elements on ties.
inline Poset glue(const Poset& p, const Poset& q, const std::vector<std::pair<int, int>>& ids) {
    std::vector<int> q_to_union(q.n + 1, -1);
    std::vector<bool> p_used(p.n + 1, false), q_used(q.n + 1, false);
    for (auto [a, b] : ids) {
        if (a < 1 || a > p.n || b < 1 || b > q.n)
            throw std::invalid_argument("glue: identified label out of range");
        if (p_used[a] || q_used[b])
            throw std::invalid_argument("glue: element identified twice");
        p_used[a] = q_used[b] = true;
        const bool mins = is_minimal(p, a) && is_minimal(q, b);
        const bool maxs = is_maximal(p, a) && is_maximal(q, b);
        if (!mins && !maxs)
            throw std::invalid_argument(
                "glue: pair (" + std::to_string(a) + "," + std::to_string(b) +
                ") must identify two minimal or two maximal elements");
        q_to_union[b] = a - 1;
    }
    int m = p.n;
    for (int b = 1; b <= q.n; ++b)
        if (q_to_union[b] < 0) q_to_union[b] = m++;
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.lt[i][j]) rel[i][j] = true;
    for (int i = 1; i <= q.n; ++i)
        for (int j = 1; j <= q.n; ++j)
            if (q.less(i, j)) rel[q_to_union[i]][q_to_union[j]] = true;
    detail::transitive_close(rel);
    for (int i = 0; i < m; ++i)
        if (rel[i][i])
            throw std::invalid_argument("glue: identification closes the order into a cycle");
    return detail::from_closed_relation(rel);
}

// Poset generated by relations over arbitrary distinct integer ids; reports
// where each id landed after natural relabeling.
struct RelabeledPoset {
    Poset poset;
    std::map<int, int> label_of;
};

inline RelabeledPoset poset_from_relations(const std::vector<int>& ids,
                                           const std::vector<std::pair<int, int>>& rels) {
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("poset_from_relations: duplicate id");
    if (sorted.empty()) throw std::invalid_argument("poset_from_relations: needs at least one id");
    std::map<int, int> index;
    for (std::size_t k = 0; k < sorted.size(); ++k) index[sorted[k]] = static_cast<int>(k);
    const int m = static_cast<int>(sorted.size());
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : rels) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw std::invalid_argument("poset_from_relations: relation uses unknown id");
        pairs.emplace_back(ia->second + 1, ib->second + 1);
    }
    RelabeledPoset out;
    out.poset = from_cover_relations(m, pairs);
    // Recover where each position went: from_cover_relations applies the same
    // stable topological relabeling as natural_positions on the closed matrix.
    {
        std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
        std::vector<std::vector<int>> adj(m);
        for (auto [a, b] : pairs) {
            rel[a - 1][b - 1] = true;
            adj[a - 1].push_back(b - 1);
        }
        detail::transitive_close(rel);
        std::vector<int> pos = detail::natural_positions(rel);
        for (int k = 0; k < m; ++k) out.label_of[sorted[k]] = pos[k] + 1;
    }
    return out;
}

// ---- statistics -----------------------------------------------------------

struct PosetStats {
    int rel_count = 0;   // strict related pairs
    int rel_e_count = 0; // related pairs with both ends extremal
    std::vector<int> minimal, maximal, ext;
    int components = 0;
    int height = 0; // longest chain, counted in covers
    bool pure = true;
    std::vector<int> up, down; // strict counts, indexed by label-1

    bool is_extremal(int label) const {
        return std::binary_search(ext.begin(), ext.end(), label);
    }
};

inline std::vector<std::vector<int>> connected_components(const Poset& p) {
    std::vector<int> comp(p.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < p.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> todo{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!todo.empty()) {
            int v = todo.back();
            todo.pop_back();
            members.push_back(v + 1);
            for (int w = 0; w < p.n; ++w)
                if (comp[w] < 0 && (p.lt[v][w] || p.lt[w][v])) {
                    comp[w] = comp[s];
                    todo.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline PosetStats poset_stats(const Poset& p) {
    PosetStats s;
    s.up.assign(p.n, 0);
    s.down.assign(p.n, 0);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.lt[i][j]) {
                ++s.rel_count;
                ++s.up[i];
                ++s.down[j];
            }
    for (int a = 1; a <= p.n; ++a) {
        if (s.down[a - 1] == 0) s.minimal.push_back(a);
        if (s.up[a - 1] == 0) s.maximal.push_back(a);
    }
    s.ext = s.minimal;
    s.ext.insert(s.ext.end(), s.maximal.begin(), s.maximal.end());
    std::sort(s.ext.begin(), s.ext.end());
    s.ext.erase(std::unique(s.ext.begin(), s.ext.end()), s.ext.end());
    for (int a = 1; a <= p.n; ++a)
        for (int b = a + 1; b <= p.n; ++b)
            if (p.less(a, b) && s.is_extremal(a) && s.is_extremal(b)) ++s.rel_e_count;
    s.components = static_cast<int>(connected_components(p).size());

    // Longest chains upward through covers, and purity: collect the set of
    // maximal-chain lengths from every minimal element as a bitmask.
    std::vector<std::vector<int>> above(p.n);
    for (auto [a, b] : cover_relations(p)) above[a - 1].push_back(b - 1);
    std::vector<unsigned long long> lens(p.n, 0);
    // Natural labeling makes a reverse scan a valid topological order.
    for (int i = p.n - 1; i >= 0; --i) {
        if (above[i].empty()) {
            lens[i] = 1ULL;
            continue;
        }
        for (int j : above[i]) lens[i] |= lens[j] << 1;
    }
    unsigned long long all = 0;
    for (int a : s.minimal) all |= lens[a - 1];
    int h = 0;
    while ((2ULL << h) <= all) ++h;
    s.height = h;
    s.pure = all == (1ULL << h);
    return s;
}

inline int height(const Poset& p) { return poset_stats(p).height; }

// Imbalance contribution of a non-extremal element: |up - down|, except that
// a balanced element contributes 2.
inline int ud_contribution(const Poset& p, const PosetStats& s, int label) {
    if (s.is_extremal(label))
        throw std::invalid_argument("ud_contribution: element " + std::to_string(label) +
                                    " is extremal");
    const int u = s.up[label - 1], d = s.down[label - 1];
    return u == d ? 2 : (u > d ? u - d : d - u);
}

// ---- named fixtures -------------------------------------------------------

// Chain 1 < ... < n with one extra element n+1 attached above the midpoint.
inline Poset sg_poset(int n) {
    if (n < 2) throw std::invalid_argument("sg_poset: needs n >= 2");
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    covers.emplace_back((n + 1) / 2, n + 1);
    return from_cover_relations(n + 1, covers);
}

inline Poset q_poset() {
    return from_cover_relations(6, {{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}});
}

inline Poset q_star_poset() { return dual(q_poset()); }

// ---- signed posets --------------------------------------------------------

// Poset on the labels -n..-1, 1..n (zero excluded), storing the strict order
// on 2n slots; slot order is the integer order of labels.
struct SignedPoset {
    int n = 0;
    std::vector<std::vector<bool>> lt;

    int size() const { return 2 * n; }
    int idx(int label) const {
        if (label == 0 || label < -n || label > n)
            throw std::invalid_argument("SignedPoset: label out of range");
        return label < 0 ? label + n : label + n - 1;
    }
    int label_at(int i) const { return i < n ? i - n : i - n + 1; }
    bool less(int a, int b) const { return lt[idx(a)][idx(b)]; }
};

// Builds the signed poset generated by the given pairs together with their
// negated mirrors, transitively closed. Every generating pair must ascend in
// the integer order.
inline SignedPoset signed_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n <= 0) throw std::invalid_argument("signed_from_covers: needs n >= 1");
    SignedPoset sp;
    sp.n = n;
    sp.lt.assign(2 * n, std::vector<bool>(2 * n, false));
    for (auto [a, b] : covers) {
        if (a == 0 || b == 0 || a < -n || a > n || b < -n || b > n)
            throw std::invalid_argument("signed_from_covers: label out of range");
        if (a >= b)
            throw std::invalid_argument("signed_from_covers: relation " + std::to_string(a) +
                                        " < " + std::to_string(b) +
                                        " must ascend in the integer order");
        sp.lt[sp.idx(a)][sp.idx(b)] = true;
        sp.lt[sp.idx(-b)][sp.idx(-a)] = true;
    }
    detail::transitive_close(sp.lt);
    return sp;
}

enum class Variant { A, B, C, D };

inline Variant variant_from_string(const std::string& s) {
    if (s == "A") return Variant::A;
    if (s == "B") return Variant::B;
    if (s == "C") return Variant::C;
    if (s == "D") return Variant::D;
    throw std::invalid_argument("variant must be one of A, B, C, D");
}

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::A: return "A";
        case Variant::B: return "B";
        case Variant::C: return "C";
        case Variant::D: return "D";
    }
    return "?";
}

// For the orthogonal variants the order must never relate i to -i, directly
// or through a chain. Violations are returned as triples (i, j, -j) with
// i < j and -j <= i in the order; the symplectic variant accepts everything.
inline std::vector<std::array<int, 3>> validate_signed(const SignedPoset& sp, Variant v) {
    std::vector<std::array<int, 3>> bad;
    if (v == Variant::C || v == Variant::A) return bad;
    for (int i = -sp.n; i <= sp.n; ++i) {
        if (i == 0) continue;
        for (int j = -sp.n; j <= sp.n; ++j) {
            if (j == 0 || i == j) continue;
            if (!sp.less(i, j)) continue;
            if (-j == i || sp.less(-j, i)) bad.push_back({i, j, -j});
        }
    }
    return bad;
}

// The plain poset on 2n elements obtained by forgetting the signs; natural
// because the stored order already ascends with the labels.
inline Poset underlying_poset(const SignedPoset& sp) {
    Poset p;
    p.n = sp.size();
    p.lt = sp.lt;
    return p;
}

inline SignedPoset hexagon_signed() {
    return signed_from_covers(3, {{-1, 2}, {-1, 3}, {-2, 1}, {-2, 3}, {-3, 1}, {-3, 2}});
}

inline Poset hexagon_poset() { return underlying_poset(hexagon_signed()); }

} // namespace lieposet
