#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <lieposet/frobenius.hpp>
#include <lieposet/linalg.hpp>
#include <lieposet/poset.hpp>

namespace lieposet {

// A face is a sorted list of vertex labels. Faces of the order complex are
// the nonempty chains, and since labels extend the order, label-sorted and
// chain-sorted coincide.
using Face = std::vector<int>;

struct SimplicialComplex {
    int vertices = 0;
    std::vector<std::vector<Face>> faces; // faces[d] holds the d-dimensional faces, sorted

    int top_dimension() const { return static_cast<int>(faces.size()) - 1; }

    int face_count() const {
        int total = 0;
        for (const auto& level : faces) total += static_cast<int>(level.size());
        return total;
    }

    int euler_characteristic() const {
        int chi = 0, sign = 1;
        for (const auto& level : faces) {
            chi += sign * static_cast<int>(level.size());
            sign = -sign;
        }
        return chi;
    }

    bool has_face(const Face& f) const {
        const int d = static_cast<int>(f.size()) - 1;
        if (d < 0 || d > top_dimension()) return false;
        const auto& level = faces[d];
        return std::binary_search(level.begin(), level.end(), f);
    }
};

inline SimplicialComplex order_complex(const Poset& p) {
    SimplicialComplex k;
    k.vertices = p.n;
    std::vector<Face> frontier;
    for (int v = 1; v <= p.n; ++v) frontier.push_back({v});
    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end());
        k.faces.push_back(frontier);
        std::vector<Face> next;
        for (const Face& chain : frontier)
            for (int w = chain.back() + 1; w <= p.n; ++w)
                if (p.less(chain.back(), w)) {
                    Face longer = chain;
                    longer.push_back(w);
                    next.push_back(std::move(longer));
                }
        frontier = std::move(next);
    }
    return k;
}

// Boundary operator from degree d to degree d-1 with alternating signs over
// the label-sorted vertex list; rows index (d-1)-faces, columns d-faces.
inline ZMat boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 1 || d > k.top_dimension()) return {};
    const auto& rows = k.faces[d - 1];
    const auto& cols = k.faces[d];
    ZMat b(rows.size(), std::vector<mpz_class>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& f = cols[j];
        int sign = 1;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            Face sub;
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != drop) sub.push_back(f[t]);
            const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            b[it - rows.begin()][j] = sign;
            sign = -sign;
        }
    }
    return b;
}

inline std::vector<int> betti(const SimplicialComplex& k, int max_degree) {
    if (max_degree < 0)
        throw std::invalid_argument("betti: max_degree must be nonnegative");
    std::vector<int> ranks(max_degree + 2, 0);
    for (int d = 1; d <= std::min(max_degree + 1, k.top_dimension()); ++d)
        ranks[d] = bareiss_rank(boundary_matrix(k, d));
    std::vector<int> b(max_degree + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        const int n_d = d <= k.top_dimension() ? static_cast<int>(k.faces[d].size()) : 0;
        b[d] = n_d - ranks[d] - ranks[d + 1];
    }
    return b;
}

struct MorseAssignment {
    std::map<Face, mpq_class> value;
};

struct MorseReport {
    bool is_morse = false;
    std::vector<Face> critical_faces;
};

// Checks the two cardinality conditions at every face: at most one larger
// coface valued no higher, at most one smaller facet valued no lower. A face
// with neither kind of exception is critical.
inline MorseReport verify_morse(const SimplicialComplex& k, const MorseAssignment& f) {
    auto value_of = [&](const Face& face) -> const mpq_class& {
        const auto it = f.value.find(face);
        if (it == f.value.end())
            throw std::invalid_argument("verify_morse: the assignment must value every face");
        return it->second;
    };

    MorseReport report;
    report.is_morse = true;
    for (int d = 0; d <= k.top_dimension(); ++d)
        for (const Face& face : k.faces[d]) {
            const mpq_class& fv = value_of(face);
            int up = 0, down = 0;
            if (d + 1 <= k.top_dimension())
                for (int w = 1; w <= k.vertices; ++w) {
                    if (std::binary_search(face.begin(), face.end(), w)) continue;
                    Face coface = face;
                    coface.insert(std::lower_bound(coface.begin(), coface.end(), w), w);
                    if (k.has_face(coface) && value_of(coface) <= fv) ++up;
                }
            if (d > 0)
                for (std::size_t drop = 0; drop < face.size(); ++drop) {
                    Face sub;
                    for (std::size_t t = 0; t < face.size(); ++t)
                        if (t != drop) sub.push_back(face[t]);
                    if (value_of(sub) >= fv) ++down;
                }
            if (up > 1 || down > 1) report.is_morse = false;
            if (up == 0 && down == 0) report.critical_faces.push_back(face);
        }
    return report;
}

namespace detail {

// Corner labels of one attached block, in the roles of the double-triangle
// complex: bottom = c, top = b, left = a1, right = a2.
struct BlockFaces {
    int c, b, a1, a2;

    Face vc() const { return {c}; }
    Face vb() const { return {b}; }
    Face va1() const { return {a1}; }
    Face va2() const { return {a2}; }
    Face e_ca1() const { return sorted({c, a1}); }
    Face e_cb() const { return sorted({c, b}); }
    Face e_ca2() const { return sorted({c, a2}); }
    Face e_a1b() const { return sorted({a1, b}); }
    Face e_ba2() const { return sorted({b, a2}); }
    Face t1() const { return sorted({c, b, a1}); }
    Face t2() const { return sorted({c, b, a2}); }

    static Face sorted(Face f) {
        std::sort(f.begin(), f.end());
        return f;
    }
};

inline void assign_run(MorseAssignment& f, long& top, const std::vector<Face>& run) {
    for (const Face& face : run) f.value[face] = ++top;
}

} // namespace detail

// Builds the inductive Morse assignment that certifies a generated gluing as
// contractible: the seed block gets the fixed eleven values, and each step
// appends a run of fresh values above everything assigned so far, chosen per
// rule so that every fresh face pairs off and only the seed bottom vertex
// stays critical.
inline MorseAssignment build_glued_morse(const GluingTrace& trace) {
    for (const GluingStep& step : trace.steps)
        if (rule_by_tag(step.rule).delta != 0)
            throw std::invalid_argument(
                "build_glued_morse: rule " + step.rule +
                " raises the index and has no generated extension");

    MorseAssignment f;
    detail::BlockFaces base{trace.c, trace.b, trace.a1, trace.a2};
    long top = -1;
    detail::assign_run(f, top,
                       {base.vc(), base.e_ca1(), base.va1(), base.e_cb(), base.vb(),
                        base.e_ca2(), base.va2(), base.t1(), base.e_a1b(), base.t2(),
                        base.e_ba2()});

    for (const GluingStep& step : trace.steps) {
        detail::BlockFaces k{step.c, step.b, step.a1, step.a2};
        if (step.rule == "C")
            detail::assign_run(f, top,
                               {k.e_ca1(), k.va1(), k.e_cb(), k.vb(), k.e_ca2(), k.va2(),
                                k.t1(), k.e_a1b(), k.t2(), k.e_ba2()});
        else if (step.rule == "A1")
            detail::assign_run(f, top,
                               {k.e_ca1(), k.vc(), k.e_a1b(), k.vb(), k.t1(), k.e_cb(),
                                k.e_ba2(), k.va2(), k.t2(), k.e_ca2()});
        else if (step.rule == "A2")
            detail::assign_run(f, top,
                               {k.e_ca2(), k.vc(), k.e_ba2(), k.vb(), k.t2(), k.e_cb(),
                                k.e_a1b(), k.va1(), k.t1(), k.e_ca1()});
        else if (step.rule == "D1")
            detail::assign_run(f, top,
                               {k.e_a1b(), k.vb(), k.t1(), k.e_cb(), k.e_ca2(), k.va2(),
                                k.t2(), k.e_ba2()});
        else if (step.rule == "D2")
            detail::assign_run(f, top,
                               {k.e_ba2(), k.vb(), k.t2(), k.e_cb(), k.e_ca1(), k.va1(),
                                k.t1(), k.e_a1b()});
        else if (step.rule == "F")
            detail::assign_run(f, top,
                               {k.e_cb(), k.vb(), k.t1(), k.e_a1b(), k.t2(), k.e_ba2()});
        else
            throw std::invalid_argument("build_glued_morse: unknown rule " + step.rule);
    }
    return f;
}

} // namespace lieposet
