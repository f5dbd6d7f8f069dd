#pragma once

#include <lieposet/canonical.hpp>
#include <lieposet/index.hpp>

#include <functional>
#include <optional>
#include <set>

namespace lieposet {

enum class FrobeniusVerdict { Frobenius, NotFrobenius, Undetermined };

inline const char* verdict_name(FrobeniusVerdict v) {
    switch (v) {
    case FrobeniusVerdict::Frobenius: return "frobenius";
    case FrobeniusVerdict::NotFrobenius: return "not-frobenius";
    default: return "undetermined";
    }
}

struct FrobeniusResult {
    FrobeniusVerdict verdict = FrobeniusVerdict::Undetermined;
    IndexCertificate certificate;
};

// A sampled corank of zero certifies index zero outright (the lower bound
// can never be negative), and a positive lower bound certifies the
// opposite. A bracket straddling zero stays undetermined; certify_index
// has already escalated the trial budget once by the time we see it.
inline FrobeniusResult frobenius_from_certificate(IndexCertificate cert) {
    FrobeniusResult r;
    if (cert.upper == 0)
        r.verdict = FrobeniusVerdict::Frobenius;
    else if (cert.lower >= 1)
        r.verdict = FrobeniusVerdict::NotFrobenius;
    else
        r.verdict = FrobeniusVerdict::Undetermined;
    r.certificate = std::move(cert);
    return r;
}

inline FrobeniusResult is_frobenius(const Poset& p, const IndexConfig& cfg) {
    return frobenius_from_certificate(certify_index(build_type_A(p, SeriesA::sl), cfg));
}

inline FrobeniusResult is_frobenius(const SignedPoset& sp, Variant v, const IndexConfig& cfg) {
    return frobenius_from_certificate(certify_index(build_type_BCD(sp, v), cfg));
}

// Height zero or one: Frobenius exactly when the Hasse diagram is a tree.
inline bool characterize_h01(const Poset& p) {
    PosetStats s = poset_stats(p);
    if (s.height > 1)
        throw std::invalid_argument("characterize_h01: poset has height " +
                                    std::to_string(s.height) +
                                    " but only height <= 1 is characterized");
    return s.components == 1 &&
           static_cast<int>(cover_relations(p).size()) == p.n - 1;
}

// Splitting a height-two poset along its covers that jump straight from a
// minimal to a maximal element. What remains falls apart into isolated
// elements and components in which every maximal chain has length two.
struct PureDecomposition {
    std::vector<std::pair<int, int>> min_max_covers;
    std::vector<std::vector<int>> component_labels; // original labels, sorted
    std::vector<Poset> pure_components;             // parallel to component_labels
    std::vector<int> singletons;
};

inline PureDecomposition decompose_pure(const Poset& p) {
    const int h = height(p);
    if (h != 2)
        throw std::invalid_argument("decompose_pure: needs a poset of height exactly two, got height " +
                                    std::to_string(h));
    PureDecomposition out;
    std::vector<std::pair<int, int>> kept;
    for (auto [a, b] : cover_relations(p)) {
        if (is_minimal(p, a) && is_maximal(p, b))
            out.min_max_covers.emplace_back(a, b);
        else
            kept.emplace_back(a, b);
    }
    std::vector<int> comp(p.n + 1, 0);
    int ncomp = 0;
    std::vector<std::vector<int>> adj(p.n + 1);
    for (auto [a, b] : kept) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 1; v <= p.n; ++v) {
        if (comp[v]) continue;
        ++ncomp;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!comp[w]) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
    }
    std::vector<std::vector<int>> members(ncomp + 1);
    for (int v = 1; v <= p.n; ++v) members[comp[v]].push_back(v);
    for (int c = 1; c <= ncomp; ++c) {
        if (members[c].size() == 1) {
            out.singletons.push_back(members[c][0]);
            continue;
        }
        std::vector<std::pair<int, int>> rels;
        for (auto [a, b] : kept)
            if (comp[a] == c) rels.emplace_back(a, b);
        out.component_labels.push_back(members[c]);
        out.pure_components.push_back(poset_from_relations(members[c], rels).poset);
    }
    return out;
}

// The four-part test for height-two posets: components must be index-zero
// pure pieces, the removed covers may not loop back into a component, no
// extremal element may attach twice to the same component, and contracting
// the components must leave a tree.
struct NonPureReport {
    bool components_frobenius = true;
    bool no_internal_cover = true;
    bool cover_multiplicity = true;
    bool contraction_tree = true;

    bool all() const {
        return components_frobenius && no_internal_cover && cover_multiplicity && contraction_tree;
    }
};

inline NonPureReport check_nonpure_conditions(const Poset& p) {
    PureDecomposition d = decompose_pure(p);
    NonPureReport rep;

    for (const Poset& c : d.pure_components) {
        PosetStats s = poset_stats(c);
        if (!s.pure || s.height != 2 || formula_index(c) != 0) rep.components_frobenius = false;
    }

    // node id per element: pure components first, then singletons
    std::vector<int> node(p.n + 1, -1);
    int nnodes = 0;
    for (const auto& labels : d.component_labels) {
        for (int v : labels) node[v] = nnodes;
        ++nnodes;
    }
    const int pure_count = nnodes;
    for (int v : d.singletons) node[v] = nnodes++;

    std::map<std::pair<int, int>, int> attach_count; // (extremal element, component)
    std::set<std::pair<int, int>> seen_edges;
    int edge_count = 0;
    std::vector<std::vector<int>> nadj(nnodes);
    for (auto [a, b] : d.min_max_covers) {
        const int na = node[a], nb = node[b];
        if (na == nb) {
            rep.no_internal_cover = false;
            rep.contraction_tree = false; // a loop is not a simple graph
            continue;
        }
        if (nb < pure_count && ++attach_count[{a, nb}] > 1) rep.cover_multiplicity = false;
        if (na < pure_count && ++attach_count[{-b, na}] > 1) rep.cover_multiplicity = false;
        auto edge = std::minmax(na, nb);
        if (!seen_edges.insert({edge.first, edge.second}).second)
            rep.contraction_tree = false; // parallel edges are not simple either
        ++edge_count;
        nadj[na].push_back(nb);
        nadj[nb].push_back(na);
    }

    if (rep.contraction_tree) {
        std::vector<bool> vis(nnodes, false);
        std::vector<int> stack{0};
        if (nnodes > 0) vis[0] = true;
        int reached = nnodes > 0 ? 1 : 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : nadj[u])
                if (!vis[w]) {
                    vis[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != nnodes || edge_count != nnodes - 1) rep.contraction_tree = false;
    }
    return rep;
}

// ---- gluing rules ---------------------------------------------------------

// A four-element block with corners c, b, a1, a2 is attached to a host by
// identifying some corners with extremal host elements x, y, z. Side
// conditions constrain whether y and z are related to x inside the host.
struct GluingRule {
    std::string tag;
    bool glue_c = false;
    bool glue_a1 = false;
    bool glue_a2 = false;
    int rel_yx = -1; // 1: y related to x required, 0: unrelated required, -1: free
    int rel_zx = -1;
    int delta = 0;   // predicted index change
};

inline const std::vector<GluingRule>& gluing_rules() {
    static const std::vector<GluingRule> table = {
        {"A1", false, true, false, -1, -1, 0},
        {"A2", false, false, true, -1, -1, 0},
        {"B", false, true, true, -1, -1, 1},
        {"C", true, false, false, -1, -1, 0},
        {"D1", true, true, false, 1, -1, 0},
        {"D2", true, false, true, -1, 1, 0},
        {"E1", true, true, false, 0, -1, 1},
        {"E2", true, false, true, -1, 0, 1},
        {"F", true, true, true, 1, 1, 0},
        {"G1", true, true, true, 1, 0, 1},
        {"G2", true, true, true, 0, 1, 1},
        {"H", true, true, true, 0, 0, 2},
    };
    return table;
}

inline const GluingRule& rule_by_tag(const std::string& tag) {
    for (const GluingRule& r : gluing_rules())
        if (r.tag == tag) return r;
    throw std::invalid_argument("rule_by_tag: unknown gluing rule " + tag);
}

// The six rules that keep the index at zero.
inline std::vector<GluingRule> frobenius_rules() {
    std::vector<GluingRule> out;
    for (const GluingRule& r : gluing_rules())
        if (r.delta == 0) out.push_back(r);
    return out;
}

enum class BlockKind { P112, P211 };

inline const char* block_name(BlockKind k) { return k == BlockKind::P112 ? "P112" : "P211"; }

// P112 has a single minimum under two maxima; P211 is its dual. Natural
// labels: P112 = (c, b, a1, a2) = (1, 2, 3, 4); P211 = (a1, a2, b, c).
inline Poset block_poset(BlockKind k) {
    return k == BlockKind::P112 ? complete_poset({1, 1, 2}) : complete_poset({2, 1, 1});
}

struct Attachment {
    std::optional<int> x, y, z; // host labels for c, a1, a2 in that order
};

namespace detail {

// Appends one block to a poset kept as ids plus cover pairs. Fresh corners
// get new ids; glued corners reuse the targeted host id. Returns the ids of
// (c, b, a1, a2).
struct BlockIds {
    int c, b, a1, a2;
};

inline BlockIds attach_block(std::vector<int>& ids, std::vector<std::pair<int, int>>& covers,
                             int& next_id, BlockKind kind, std::optional<int> x_id,
                             std::optional<int> y_id, std::optional<int> z_id) {
    auto fresh = [&] {
        ids.push_back(next_id);
        return next_id++;
    };
    BlockIds b;
    b.c = x_id ? *x_id : fresh();
    b.b = fresh();
    b.a1 = y_id ? *y_id : fresh();
    b.a2 = z_id ? *z_id : fresh();
    if (kind == BlockKind::P112) {
        covers.emplace_back(b.c, b.b);
        covers.emplace_back(b.b, b.a1);
        covers.emplace_back(b.b, b.a2);
    } else {
        covers.emplace_back(b.a1, b.b);
        covers.emplace_back(b.a2, b.b);
        covers.emplace_back(b.b, b.c);
    }
    return b;
}

} // namespace detail

// Glues one block onto a pure height-two host, validating the rule's
// pattern, and returns the glued poset with the rule's predicted change of
// the index.
inline std::pair<Poset, int> apply_rule(const Poset& q, BlockKind kind, const GluingRule& rule,
                                        const Attachment& at) {
    PosetStats s = poset_stats(q);
    if (s.height != 2 || !s.pure)
        throw std::invalid_argument("apply_rule: the host must be pure of height two");

    auto check_slot = [&](const char* corner, bool glued, const std::optional<int>& target) {
        if (glued && !target)
            throw std::invalid_argument("apply_rule: rule " + rule.tag + " identifies " + corner +
                                        " but no host element was supplied for it");
        if (!glued && target)
            throw std::invalid_argument("apply_rule: rule " + rule.tag + " leaves " + corner +
                                        " free but a host element was supplied for it");
        if (target && (*target < 1 || *target > q.n))
            throw std::invalid_argument("apply_rule: host element for " + std::string(corner) +
                                        " is out of range");
    };
    check_slot("c", rule.glue_c, at.x);
    check_slot("a1", rule.glue_a1, at.y);
    check_slot("a2", rule.glue_a2, at.z);

    // c glues to the extreme the block's lone end sits at; a1, a2 to the other
    const bool c_to_min = kind == BlockKind::P112;
    auto check_polarity = [&](const char* corner, const std::optional<int>& target, bool want_min) {
        if (!target) return;
        if (want_min ? !is_minimal(q, *target) : !is_maximal(q, *target))
            throw std::invalid_argument("apply_rule: " + std::string(corner) + " must glue to a " +
                                        (want_min ? "minimal" : "maximal") + " host element");
    };
    check_polarity("c", at.x, c_to_min);
    check_polarity("a1", at.y, !c_to_min);
    check_polarity("a2", at.z, !c_to_min);

    if (at.y && at.z && *at.y == *at.z)
        throw std::invalid_argument("apply_rule: y and z must be distinct host elements");

    auto check_relation = [&](const char* name, int required, const std::optional<int>& target) {
        if (required < 0 || !target) return;
        const bool related = q.comparable(*target, *at.x);
        if (required == 1 && !related)
            throw std::invalid_argument("apply_rule: rule " + rule.tag + " needs " + name +
                                        " related to x in the host");
        if (required == 0 && related)
            throw std::invalid_argument("apply_rule: rule " + rule.tag + " needs " + name +
                                        " unrelated to x in the host");
    };
    check_relation("y", rule.rel_yx, at.y);
    check_relation("z", rule.rel_zx, at.z);

    std::vector<int> ids(q.n);
    for (int v = 1; v <= q.n; ++v) ids[v - 1] = v;
    std::vector<std::pair<int, int>> covers = cover_relations(q);
    int next_id = q.n + 1;
    detail::attach_block(ids, covers, next_id, kind, at.x, at.y, at.z);
    return {poset_from_relations(ids, covers).poset, rule.delta};
}

// ---- generator ------------------------------------------------------------

struct GluingStep {
    BlockKind block;
    std::string rule;
    int c, b, a1, a2; // labels in the final poset
    bool c_new, a1_new, a2_new;
};

struct GluingTrace {
    BlockKind base;
    int c, b, a1, a2; // base block's labels in the final poset
    std::vector<GluingStep> steps;
    Poset result;
};

namespace detail {

struct GlueState {
    std::vector<int> ids;
    std::vector<std::pair<int, int>> covers;
    int next_id = 1;
    BlockKind base;
    BlockIds base_ids;
    struct StepIds {
        BlockKind block;
        std::string rule;
        BlockIds ids;
        bool c_new, a1_new, a2_new;
    };
    std::vector<StepIds> steps;
};

inline GluingTrace trace_of(const GlueState& st) {
    RelabeledPoset rp = poset_from_relations(st.ids, st.covers);
    auto lab = [&](int id) { return rp.label_of.at(id); };
    GluingTrace tr;
    tr.base = st.base;
    tr.c = lab(st.base_ids.c);
    tr.b = lab(st.base_ids.b);
    tr.a1 = lab(st.base_ids.a1);
    tr.a2 = lab(st.base_ids.a2);
    for (const auto& s : st.steps)
        tr.steps.push_back({s.block, s.rule, lab(s.ids.c), lab(s.ids.b), lab(s.ids.a1),
                            lab(s.ids.a2), s.c_new, s.a1_new, s.a2_new});
    tr.result = rp.poset;
    return tr;
}

inline void extend_traces(GlueState& st, int blocks_left, const std::vector<GluingRule>& rules,
                          const std::function<void(const GluingTrace&)>& visit) {
    visit(trace_of(st));
    if (blocks_left == 0) return;

    RelabeledPoset rp = poset_from_relations(st.ids, st.covers);
    std::vector<int> min_ids, max_ids;
    for (int id : st.ids) {
        const int l = rp.label_of.at(id);
        if (is_minimal(rp.poset, l)) min_ids.push_back(id);
        if (is_maximal(rp.poset, l)) max_ids.push_back(id);
    }
    std::sort(min_ids.begin(), min_ids.end());
    std::sort(max_ids.begin(), max_ids.end());
    auto related = [&](int u, int v) {
        return rp.poset.comparable(rp.label_of.at(u), rp.label_of.at(v));
    };

    const std::optional<int> none;
    for (const GluingRule& rule : rules) {
        for (BlockKind kind : {BlockKind::P112, BlockKind::P211}) {
            const auto& c_pool = kind == BlockKind::P112 ? min_ids : max_ids;
            const auto& a_pool = kind == BlockKind::P112 ? max_ids : min_ids;
            auto try_attach = [&](std::optional<int> x, std::optional<int> y, std::optional<int> z) {
                if (y && z && *y == *z) return;
                if (rule.rel_yx >= 0 && (related(*y, *x) ? 1 : 0) != rule.rel_yx) return;
                if (rule.rel_zx >= 0 && (related(*z, *x) ? 1 : 0) != rule.rel_zx) return;
                GlueState next = st;
                BlockIds ids = attach_block(next.ids, next.covers, next.next_id, kind, x, y, z);
                next.steps.push_back({kind, rule.tag, ids, !x.has_value(), !y.has_value(), !z.has_value()});
                extend_traces(next, blocks_left - 1, rules, visit);
            };
            auto loop_z = [&](std::optional<int> x, std::optional<int> y) {
                if (!rule.glue_a2) {
                    try_attach(x, y, none);
                    return;
                }
                for (int z : a_pool) try_attach(x, y, z);
            };
            auto loop_y = [&](std::optional<int> x) {
                if (!rule.glue_a1) {
                    loop_z(x, none);
                    return;
                }
                for (int y : a_pool) loop_z(x, y);
            };
            if (!rule.glue_c) {
                loop_y(none);
            } else {
                for (int x : c_pool) loop_y(x);
            }
        }
    }
}

} // namespace detail

// Enumerates every construction that starts from a single block and glues
// up to blocks - 1 more with the given rules, visiting the trace of every
// intermediate stage. Deterministic: rules in table order, blocks P112
// before P211, targets in ascending label order.
inline void enumerate_glue_traces(int blocks, const std::vector<GluingRule>& rules,
                                  const std::function<void(const GluingTrace&)>& visit) {
    if (blocks < 1)
        throw std::invalid_argument("enumerate_glue_traces: needs at least one block");
    for (BlockKind base : {BlockKind::P112, BlockKind::P211}) {
        detail::GlueState st;
        st.base = base;
        st.next_id = 1;
        st.base_ids = detail::attach_block(st.ids, st.covers, st.next_id, base,
                                           std::nullopt, std::nullopt, std::nullopt);
        detail::extend_traces(st, blocks - 1, rules, visit);
    }
}

// One trace per isomorphism class of result, in discovery order.
inline std::vector<GluingTrace> generate_glued(int blocks, const std::vector<GluingRule>& rules) {
    std::vector<GluingTrace> out;
    std::set<std::string> seen;
    enumerate_glue_traces(blocks, rules, [&](const GluingTrace& tr) {
        if (seen.insert(canonical_key(tr.result)).second) out.push_back(tr);
    });
    return out;
}

// The stream of glued posets restricted to index-preserving rules; every
// emitted poset is pure of height two with closed-form index zero.
inline std::vector<Poset> generate_pure_frobenius(int blocks, const std::vector<GluingRule>& rules) {
    for (const GluingRule& r : rules)
        if (r.delta != 0)
            throw std::invalid_argument("generate_pure_frobenius: rule " + r.tag +
                                        " raises the index and cannot appear in this stream");
    std::vector<Poset> out;
    for (const GluingTrace& tr : generate_glued(blocks, rules)) out.push_back(tr.result);
    return out;
}

inline std::vector<Poset> generate_pure_frobenius(int blocks) {
    return generate_pure_frobenius(blocks, frobenius_rules());
}

} // namespace lieposet
