#include <catch2/catch.hpp>

#include <lieposet/enumerate.hpp>
#include <lieposet/frobenius.hpp>
#include <lieposet/spectrum.hpp>

using namespace lieposet;

namespace {

int unit_index(const LiePosetAlgebra& g, int i, int j) {
    for (int a = 0; a < g.dim(); ++a)
        if (g.basis[a].kind == BasisKind::MatrixUnit && g.basis[a].i == i &&
            g.basis[a].j == j)
            return a;
    throw std::logic_error("unit not in basis");
}

std::vector<SpectrumEntry> zeros_and_ones(int dim) {
    return {{mpq_class(0), dim / 2}, {mpq_class(1), dim / 2}};
}

mpq_class ad_trace(const LiePosetAlgebra& g, const QVec& x) {
    QMat ad = ad_matrix(g, x);
    mpq_class tr = 0;
    for (int i = 0; i < g.dim(); ++i) tr += ad[i][i];
    return tr;
}

mpq_class spectrum_sum(const AdSpectrum& s) {
    mpq_class sum = 0;
    for (const auto& e : s.eigenvalues) sum += e.eigenvalue * e.multiplicity;
    return sum;
}

} // namespace

TEST_CASE("the two-dimensional algebra works out by hand") {
    LiePosetAlgebra g = build_type_A(complete_poset({1, 1}), SeriesA::sl);
    REQUIRE(g.dim() == 2);
    QVec f(2, 0);
    f[unit_index(g, 1, 2)] = 1;
    REQUIRE(q_rank(form_matrix(g, f)) == 2);

    QVec v = principal_element(g, f);
    QMat m = ambient_matrix(g, v);
    REQUIRE(m == QMat{{mpq_class(1, 2), 0}, {0, mpq_class(-1, 2)}});

    AdSpectrum s = ad_spectrum(g, v);
    REQUIRE(s.complete);
    REQUIRE(s.eigenvalues == zeros_and_ones(2));

    // scaling the functional leaves the principal element fixed
    QVec scaled = f;
    for (auto& e : scaled) e *= mpq_class(7, 3);
    REQUIRE(principal_element(g, scaled) == v);
}

TEST_CASE("the eight-dimensional poset realizes the half-integer diagonal") {
    LiePosetAlgebra g = build_type_A(complete_poset({2, 1, 1}), SeriesA::sl);
    REQUIRE(g.dim() == 8);
    QVec f(8, 0);
    f[unit_index(g, 1, 3)] = 1;
    f[unit_index(g, 1, 4)] = 2;
    f[unit_index(g, 2, 3)] = 3;
    f[unit_index(g, 2, 4)] = 5;

    QVec v = principal_element(g, f);
    QMat expected(4, QVec(4, 0));
    expected[0][0] = expected[1][1] = mpq_class(1, 2);
    expected[2][2] = expected[3][3] = mpq_class(-1, 2);
    REQUIRE(ambient_matrix(g, v) == expected);

    AdSpectrum s = ad_spectrum(g, v);
    REQUIRE(s.complete);
    REQUIRE(s.eigenvalues == zeros_and_ones(8));
    REQUIRE(spectrum_sum(s) == ad_trace(g, v));
}

TEST_CASE("degenerate functionals are turned away") {
    LiePosetAlgebra g = build_type_A(complete_poset({2, 1, 1}), SeriesA::sl);
    REQUIRE_THROWS_WITH(principal_element(g, QVec(8, 0)), Catch::Contains("nonsingular"));

    // vanishing on two of the four top units leaves a two-dimensional kernel
    QVec thin(8, 0);
    thin[unit_index(g, 1, 3)] = 1;
    thin[unit_index(g, 2, 4)] = 1;
    REQUIRE_THROWS_WITH(principal_element(g, thin), Catch::Contains("nonsingular"));

    IndexConfig cfg;
    cfg.seed = 5;
    LiePosetAlgebra chain = build_type_A(complete_poset({1, 1, 1}), SeriesA::sl);
    REQUIRE_THROWS_WITH(find_frobenius_functional(chain, cfg),
                        Catch::Contains("certify to zero"));
}

TEST_CASE("the full pipeline closes over the pure blocks") {
    IndexConfig cfg;
    cfg.seed = 23;
    for (const Poset& p : {complete_poset({1, 1, 2}), complete_poset({2, 1, 1}),
                           complete_poset({1, 2, 2}), complete_poset({2, 2, 1})}) {
        LiePosetAlgebra g = build_type_A(p, SeriesA::sl);
        SpectrumReport r = spectrum_report(g, cfg);
        REQUIRE(r.residual_zero);
        REQUIRE(r.spectrum.complete);
        REQUIRE(r.spectrum.eigenvalues == zeros_and_ones(g.dim()));
        REQUIRE(spectrum_sum(r.spectrum) == ad_trace(g, r.principal));
        mpq_class trace = 0;
        for (int i = 0; i < g.matrix_dim; ++i) trace += r.principal_matrix[i][i];
        REQUIRE(trace == 0); // traceless series
    }
}

TEST_CASE("independently drawn functionals agree on the multiset") {
    LiePosetAlgebra g = build_type_A(complete_poset({1, 2, 2}), SeriesA::sl);
    std::vector<std::vector<SpectrumEntry>> runs;
    for (unsigned long seed : {3UL, 77UL, 950UL}) {
        IndexConfig cfg;
        cfg.seed = seed;
        SpectrumReport r = spectrum_report(g, cfg);
        REQUIRE(r.residual_zero);
        runs.push_back(r.spectrum.eigenvalues);
    }
    REQUIRE(runs[0] == runs[1]);
    REQUIRE(runs[1] == runs[2]);
}

TEST_CASE("every small low Frobenius algebra splits into zeros and ones") {
    IndexConfig cfg;
    cfg.seed = 404;
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (const Poset& p : iso_classes(n)) {
            if (height(p) > 2 || poset_stats(p).components != 1) continue;
            if (formula_index(p) != 0) continue;
            LiePosetAlgebra g = build_type_A(p, SeriesA::sl);
            SpectrumReport r = spectrum_report(g, cfg);
            REQUIRE(r.residual_zero);
            REQUIRE(r.spectrum.complete);
            REQUIRE(g.dim() % 2 == 0);
            REQUIRE(r.spectrum.eigenvalues == zeros_and_ones(g.dim()));
            ++checked;
        }
    REQUIRE(checked == 51);
}

TEST_CASE("signed variants report exact spectra without a script") {
    IndexConfig cfg;
    cfg.seed = 11;
    for (Variant va : {Variant::B, Variant::C, Variant::D}) {
        LiePosetAlgebra g = build_type_BCD(hexagon_signed(), va);
        SpectrumReport r = spectrum_report(g, cfg);
        REQUIRE(r.residual_zero);
        REQUIRE(r.spectrum.complete);
        REQUIRE(spectrum_sum(r.spectrum) == ad_trace(g, r.principal));
        int total = 0;
        for (const auto& e : r.spectrum.eigenvalues) total += e.multiplicity;
        REQUIRE(total == g.dim());
    }
}

TEST_CASE("large eigenvalues fall through to the characteristic polynomial") {
    LiePosetAlgebra g = build_type_A(complete_poset({1, 1}), SeriesA::sl);
    // diag(500, -500) acts on the unit with weight 1000, far past the sweep
    QMat big(2, QVec(2, 0));
    big[0][0] = 500;
    big[1][1] = -500;
    AdSpectrum s = ad_spectrum(g, coordinates(g, big));
    REQUIRE(s.complete);
    REQUIRE(s.eigenvalues ==
            std::vector<SpectrumEntry>{{mpq_class(0), 1}, {mpq_class(1000), 1}});

    // a third works too: the root comes out of the cleared constant term
    QMat frac(2, QVec(2, 0));
    frac[0][0] = mpq_class(1, 3);
    frac[1][1] = mpq_class(-1, 3);
    AdSpectrum t = ad_spectrum(g, coordinates(g, frac));
    REQUIRE(t.complete);
    REQUIRE(t.eigenvalues ==
            std::vector<SpectrumEntry>{{mpq_class(0), 1}, {mpq_class(2, 3), 1}});
}

TEST_CASE("an unfactorable spectrum is reported as incomplete") {
    LiePosetAlgebra g = build_type_A(complete_poset({1, 1, 1}), SeriesA::sl);
    // weights 1000003 and 1000033 are primes beyond the divisor sieve, so
    // only their sum can be recovered from the constant term
    QMat m(3, QVec(3, 0));
    m[0][0] = 1000013;
    m[1][1] = 10;
    m[2][2] = -1000023;
    AdSpectrum s = ad_spectrum(g, coordinates(g, m));
    REQUIRE_FALSE(s.complete);
    REQUIRE(s.characteristic.size() == 6);
    REQUIRE(s.eigenvalues.size() == 2);
    REQUIRE(s.eigenvalues[0] == SpectrumEntry{mpq_class(0), 2});
    REQUIRE(s.eigenvalues[1] == SpectrumEntry{mpq_class(2000036), 1});
}
