#pragma once

#include <lieposet/canonical.hpp>
#include <lieposet/poset.hpp>

#include <cstdint>
#include <functional>
#include <map>

namespace lieposet {

// All down-closed subsets, as bitmasks over 0-based element indices.
inline std::vector<std::uint64_t> order_ideal_masks(const Poset& p) {
    if (p.n > 20) throw std::invalid_argument("order_ideal_masks: poset too large");
    std::vector<std::uint64_t> down(p.n, 0);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.lt[i][j]) down[j] |= 1ULL << i;
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (1ULL << p.n); ++mask) {
        bool closed = true;
        for (int j = 0; j < p.n && closed; ++j)
            if ((mask >> j) & 1) closed = (down[j] & ~mask) == 0;
        if (closed) out.push_back(mask);
    }
    return out;
}

inline std::vector<std::vector<int>> order_ideals(const Poset& p) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : order_ideal_masks(p)) {
        std::vector<int> ideal;
        for (int j = 0; j < p.n; ++j)
            if ((mask >> j) & 1) ideal.push_back(j + 1);
        out.push_back(std::move(ideal));
    }
    return out;
}

// Visits every naturally labeled poset on 1..n exactly once. Element k is
// attached above a down-closed subset of the first k-1 elements, which is a
// bijection onto natural labelings. The count grows brutally fast, hence the
// guard; pass allow_large to lift it.
inline void enumerate_labeled(int n, const std::function<void(const Poset&)>& visit,
                              bool allow_large = false) {
    if (n <= 0) throw std::invalid_argument("enumerate_labeled: needs n >= 1");
    if (n > 7 && !allow_large)
        throw std::invalid_argument("enumerate_labeled: n > 7 enumerates millions of posets; "
                                    "pass allow_large to confirm");
    Poset p;
    p.n = n;
    p.lt.assign(n, std::vector<bool>(n, false));
    std::vector<std::uint64_t> down(n, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            visit(p);
            return;
        }
        // Enumerate down-closed masks of the poset built so far.
        for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
            bool closed = true;
            for (int j = 0; j < k && closed; ++j)
                if ((mask >> j) & 1) closed = (down[j] & ~mask) == 0;
            if (!closed) continue;
            down[k] = mask;
            for (int j = 0; j < k; ++j) p.lt[j][k] = (mask >> j) & 1;
            self(self, k + 1);
        }
        down[k] = 0;
        for (int j = 0; j < k; ++j) p.lt[j][k] = false;
    };
    rec(rec, 0);
}

// One representative per isomorphism class on n elements, grown level by
// level: every class on k elements arises by dropping a maximal element from
// a class on k+1, so attaching a new top above each down-closed subset of
// each representative and deduplicating canonically is exhaustive.
inline std::vector<Poset> iso_classes(int n, bool allow_large = false) {
    if (n <= 0) throw std::invalid_argument("iso_classes: needs n >= 1");
    if (n > 8 && !allow_large)
        throw std::invalid_argument("iso_classes: n > 8 is expensive; pass allow_large to confirm");
    Poset single;
    single.n = 1;
    single.lt.assign(1, std::vector<bool>(1, false));
    std::vector<Poset> reps{single};
    for (int k = 2; k <= n; ++k) {
        std::map<std::vector<bool>, Poset> level;
        for (const Poset& r : reps) {
            for (std::uint64_t mask : order_ideal_masks(r)) {
                Poset q;
                q.n = k;
                q.lt.assign(k, std::vector<bool>(k, false));
                for (int i = 0; i < r.n; ++i)
                    for (int j = 0; j < r.n; ++j) q.lt[i][j] = r.lt[i][j];
                for (int i = 0; i < r.n; ++i)
                    if ((mask >> i) & 1) q.lt[i][k - 1] = true;
                auto enc = canonical_encoding(q);
                if (!level.count(enc)) {
                    Poset canon = decode_encoding(k, enc);
                    level.emplace(std::move(enc), std::move(canon));
                }
            }
        }
        reps.clear();
        for (auto& [enc, q] : level) reps.push_back(std::move(q));
    }
    return reps;
}

} // namespace lieposet
