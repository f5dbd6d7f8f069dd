#pragma once

#include <lieposet/poset.hpp>

#include <cstdint>
#include <set>
#include <string>

namespace lieposet {

// Canonical form: the lexicographically smallest column-major reading of the
// strict upper triangle of the relation matrix, minimized over all linear
// extensions. Column j contributes the bits (before_1 < j, ..., before_{j-1} < j).
//
// The search is exact: it fixes one column at a time, keeping every partial
// labeling that attains the minimal column. Interchangeable elements (equal
// strict up- and down-sets) are collapsed, which tames antichain blowup.
inline std::vector<bool> canonical_encoding(const Poset& p) {
    const int n = p.n;
    if (n > 62) throw std::invalid_argument("canonical_encoding: poset too large");
    std::vector<std::uint64_t> up(n, 0), down(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.lt[i][j]) {
                up[i] |= 1ULL << j;
                down[j] |= 1ULL << i;
            }
    std::vector<std::vector<int>> prefixes{{}};
    std::vector<bool> enc;
    for (int pos = 0; pos < n; ++pos) {
        std::vector<bool> best;
        std::vector<std::vector<int>> next;
        for (const auto& pre : prefixes) {
            std::uint64_t used = 0;
            for (int e : pre) used |= 1ULL << e;
            std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
            for (int c = 0; c < n; ++c) {
                if (used & (1ULL << c)) continue;
                if ((down[c] & ~used) != 0) continue; // not yet a minimal choice
                if (!seen.insert({up[c], down[c]}).second) continue;
                std::vector<bool> col(pos);
                for (int i = 0; i < pos; ++i) col[i] = p.lt[pre[i]][c];
                if (next.empty() || col < best) {
                    best = col;
                    next.clear();
                }
                if (col == best) {
                    auto np = pre;
                    np.push_back(c);
                    next.push_back(std::move(np));
                }
            }
        }
        prefixes = std::move(next);
        enc.insert(enc.end(), best.begin(), best.end());
    }
    return enc;
}

inline Poset decode_encoding(int n, const std::vector<bool>& enc) {
    Poset p;
    p.n = n;
    p.lt.assign(n, std::vector<bool>(n, false));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) p.lt[i][j] = enc[k++];
    return p;
}

inline Poset canonical_form(const Poset& p) { return decode_encoding(p.n, canonical_encoding(p)); }

inline std::vector<std::pair<int, int>> canonical_covers(const Poset& p) {
    return cover_relations(canonical_form(p));
}

inline bool isomorphic(const Poset& a, const Poset& b) {
    return a.n == b.n && canonical_encoding(a) == canonical_encoding(b);
}

// Compact string form of the canonical encoding, usable as an ordering key.
inline std::string canonical_key(const Poset& p) {
    std::string s;
    s.reserve(static_cast<std::size_t>(p.n) * (p.n - 1) / 2);
    for (bool b : canonical_encoding(p)) s.push_back(b ? '1' : '0');
    return s;
}

} // namespace lieposet
