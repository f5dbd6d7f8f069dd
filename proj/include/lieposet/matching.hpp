#pragma once

#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lieposet {

// Maximum matching in a general (not necessarily bipartite) simple graph.
// Classical O(V^3) blossom-contraction search: grow an alternating BFS forest
// from each exposed vertex, contract odd cycles onto their base, and augment
// when another exposed vertex is reached.
class BlossomMatcher {
public:
    BlossomMatcher(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(n), adj_(n), match_(n, -1), parent_(n), base_(n) {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("matching: vertex out of range");
            if (u == v) continue;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }

    int solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                // Flip matched/unmatched edges along the path back to the root.
                const int pv = parent_[u];
                const int ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        int pairs = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) ++pairs;
        return pairs;
    }

    const std::vector<int>& mate() const { return match_; }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_blossom(int v, int b, int child, std::vector<bool>& in_blossom) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::vector<bool> used(n_, false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // Odd cycle: contract the blossom onto its base.
                    const int cur_base = lca(v, to);
                    std::vector<bool> in_blossom(n_, false);
                    mark_blossom(v, cur_base, to, in_blossom);
                    mark_blossom(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
};

inline int matching_number(int n, const std::vector<std::pair<int, int>>& edges) {
    return BlossomMatcher(n, edges).solve();
}

} // namespace lieposet
