#include <catch2/catch.hpp>

#include <lieposet/enumerate.hpp>
#include <lieposet/index.hpp>
#include <lieposet/topology.hpp>

using namespace lieposet;

namespace {

bool composes_to_zero(const SimplicialComplex& k, int d) {
    ZMat lo = boundary_matrix(k, d - 1);
    ZMat hi = boundary_matrix(k, d);
    if (lo.empty() || hi.empty()) return true;
    for (std::size_t i = 0; i < lo.size(); ++i)
        for (std::size_t j = 0; j < hi[0].size(); ++j) {
            mpz_class sum = 0;
            for (std::size_t t = 0; t < hi.size(); ++t) sum += lo[i][t] * hi[t][j];
            if (sum != 0) return false;
        }
    return true;
}

MorseAssignment dimension_staircase(const SimplicialComplex& k) {
    MorseAssignment f;
    long next = 0;
    for (const auto& level : k.faces)
        for (const Face& face : level) f.value[face] = next++;
    return f;
}

} // namespace

TEST_CASE("chains of the little pure poset form two triangles") {
    SimplicialComplex k = order_complex(complete_poset({1, 1, 2}));
    REQUIRE(k.vertices == 4);
    REQUIRE(k.top_dimension() == 2);
    REQUIRE(k.faces[0].size() == 4);
    REQUIRE(k.faces[1] ==
            std::vector<Face>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    REQUIRE(k.faces[2] == std::vector<Face>{{1, 2, 3}, {1, 2, 4}});
    REQUIRE(k.has_face({1, 2, 4}));
    REQUIRE_FALSE(k.has_face({3, 4}));
    REQUIRE(k.euler_characteristic() == 1);
}

TEST_CASE("antichains and chains give the extreme complexes") {
    SimplicialComplex loose = order_complex(from_cover_relations(5, {}));
    REQUIRE(loose.top_dimension() == 0);
    REQUIRE(loose.face_count() == 5);

    SimplicialComplex solid = order_complex(complete_poset({1, 1, 1, 1}));
    REQUIRE(solid.top_dimension() == 3);
    REQUIRE(solid.face_count() == 15); // every nonempty subset is a chain
    REQUIRE(solid.faces[3] == std::vector<Face>{{1, 2, 3, 4}});
}

TEST_CASE("boundary operators compose to zero") {
    for (const Poset& p : {complete_poset({1, 1, 2}), complete_poset({2, 2, 2}),
                           q_poset(), complete_poset({1, 1, 1, 1})}) {
        SimplicialComplex k = order_complex(p);
        for (int d = 2; d <= k.top_dimension(); ++d) REQUIRE(composes_to_zero(k, d));
    }
}

TEST_CASE("homology spots the circle and the sphere") {
    REQUIRE(betti(order_complex(complete_poset({1, 1, 2})), 2) ==
            std::vector<int>{1, 0, 0});
    REQUIRE(betti(order_complex(hexagon_poset()), 2) == std::vector<int>{1, 1, 0});
    // chains through three full levels of two trace out the octahedron
    REQUIRE(betti(order_complex(complete_poset({2, 2, 2})), 2) ==
            std::vector<int>{1, 0, 1});
    REQUIRE(betti(order_complex(complete_poset({1, 1, 1, 1})), 3) ==
            std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("small sweeps tie homology to the combinatorics") {
    for (int n = 1; n <= 5; ++n)
        for (const Poset& p : iso_classes(n)) {
            SimplicialComplex k = order_complex(p);
            std::vector<int> b = betti(k, 3);
            REQUIRE(b[0] == poset_stats(p).components);
            int alternating = 0, sign = 1;
            for (int v : b) {
                alternating += sign * v;
                sign = -sign;
            }
            REQUIRE(alternating == k.euler_characteristic());
            if (height(p) == 1 && poset_stats(p).components == 1) {
                REQUIRE(b[1] == formula_index(p));
                REQUIRE(b[2] == 0);
            }
        }
}

TEST_CASE("index-zero posets of low height have trivial homology") {
    for (int n = 1; n <= 6; ++n)
        for (const Poset& p : iso_classes(n)) {
            PosetStats s = poset_stats(p);
            if (height(p) > 2 || s.components != 1 || formula_index(p) != 0) continue;
            REQUIRE(betti(order_complex(p), 2) == std::vector<int>{1, 0, 0});
        }
}

TEST_CASE("the worked assignment on the double triangle is recognized") {
    Poset p = complete_poset({1, 1, 2}); // 1 below 2 below 3 and 4
    SimplicialComplex k = order_complex(p);
    MorseAssignment f;
    f.value[{1}] = 0;
    f.value[{1, 3}] = 1;
    f.value[{3}] = 2;
    f.value[{1, 2}] = 3;
    f.value[{2}] = 4;
    f.value[{1, 4}] = 5;
    f.value[{4}] = 6;
    f.value[{1, 2, 3}] = 7;
    f.value[{2, 3}] = 8;
    f.value[{1, 2, 4}] = 9;
    f.value[{2, 4}] = 10;
    MorseReport report = verify_morse(k, f);
    REQUIRE(report.is_morse);
    REQUIRE(report.critical_faces == std::vector<Face>{{1}});
}

TEST_CASE("flat and staircase assignments sit at the two extremes") {
    SimplicialComplex k = order_complex(complete_poset({1, 1}));
    MorseAssignment flat;
    flat.value[{1}] = 1;
    flat.value[{2}] = 1;
    flat.value[{1, 2}] = 1;
    REQUIRE_FALSE(verify_morse(k, flat).is_morse);

    SimplicialComplex big = order_complex(q_poset());
    MorseReport stairs = verify_morse(big, dimension_staircase(big));
    REQUIRE(stairs.is_morse);
    REQUIRE(stairs.critical_faces.size() == static_cast<std::size_t>(big.face_count()));
}

TEST_CASE("a partial assignment is rejected") {
    SimplicialComplex k = order_complex(complete_poset({1, 1}));
    MorseAssignment gap;
    gap.value[{1}] = 0;
    gap.value[{2}] = 1;
    REQUIRE_THROWS_WITH(verify_morse(k, gap), Catch::Contains("every face"));
}

TEST_CASE("seed traces reproduce the worked assignment") {
    for (const GluingTrace& tr : generate_glued(1, frobenius_rules())) {
        MorseAssignment f = build_glued_morse(tr);
        REQUIRE(f.value.size() == 11);
        REQUIRE(f.value.at({tr.c}) == 0);
        REQUIRE(f.value.at({tr.b}) == 4);
        REQUIRE(f.value.at(detail::BlockFaces::sorted({tr.b, tr.a2})) == 10);
        MorseReport report = verify_morse(order_complex(tr.result), f);
        REQUIRE(report.is_morse);
        REQUIRE(report.critical_faces == std::vector<Face>{{tr.c}});
    }
}

TEST_CASE("every short generated gluing is certified contractible") {
    int seen = 0;
    enumerate_glue_traces(3, frobenius_rules(), [&](const GluingTrace& tr) {
        SimplicialComplex k = order_complex(tr.result);
        MorseReport report = verify_morse(k, build_glued_morse(tr));
        REQUIRE(report.is_morse);
        REQUIRE(report.critical_faces == std::vector<Face>{{tr.c}});
        ++seen;
    });
    REQUIRE(seen == 1274);
}

TEST_CASE("two-step gluings also have vanishing homology") {
    enumerate_glue_traces(2, frobenius_rules(), [&](const GluingTrace& tr) {
        if (tr.steps.empty()) return;
        REQUIRE(betti(order_complex(tr.result), 2) == std::vector<int>{1, 0, 0});
    });
}

TEST_CASE("index-raising steps have no generated assignment") {
    bool threw = false;
    enumerate_glue_traces(2, {rule_by_tag("B")}, [&](const GluingTrace& tr) {
        if (tr.steps.empty()) return;
        REQUIRE_THROWS_WITH(build_glued_morse(tr), Catch::Contains("raises the index"));
        threw = true;
    });
    REQUIRE(threw);
}
