#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <lieposet/algebra.hpp>
#include <lieposet/frobenius.hpp>
#include <lieposet/index.hpp>
#include <lieposet/poset.hpp>
#include <lieposet/spectrum.hpp>
#include <lieposet/topology.hpp>

namespace lieposet {

using json = nlohmann::ordered_json;

// Integers ride as JSON numbers while they fit 64 bits and as decimal
// strings beyond that; rationals are [numerator, denominator] pairs.
inline json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

inline json rational_json(const mpq_class& q) {
    return json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

inline mpz_class integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::invalid_argument(where + " must be an integer or a decimal string");
}

inline mpq_class rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<long long>()));
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(where + " must be a [numerator, denominator] pair");
    mpz_class num = integer_from_json(j[0], where + " numerator");
    mpz_class den = integer_from_json(j[1], where + " denominator");
    if (den <= 0) throw std::invalid_argument(where + " denominator must be positive");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline json covers_json(const std::vector<std::pair<int, int>>& covers) {
    json arr = json::array();
    for (auto [a, b] : covers) arr.push_back(json::array({a, b}));
    return arr;
}

inline json poset_json(const Poset& p) {
    return json{{"n", p.n}, {"covers", covers_json(cover_relations(p))}};
}

inline json signed_poset_json(const SignedPoset& sp, Variant v) {
    std::vector<std::pair<int, int>> covers;
    Poset u = underlying_poset(sp);
    for (auto [i, j] : cover_relations(u)) {
        int a = sp.label_at(i - 1), b = sp.label_at(j - 1);
        if (a > 0 || b >= -a) covers.emplace_back(a, b); // one of each mirrored pair
    }
    return json{{"n", sp.n}, {"covers", covers_json(covers)}, {"variant", variant_name(v)}};
}

// A poset file holds either a plain poset or, when the "variant" key names a
// signed series, a signed one; the underlying plain poset comes along too.
struct ParsedPoset {
    Poset poset;
    std::optional<SignedPoset> signed_poset;
    Variant variant = Variant::A;
};

inline std::vector<std::pair<int, int>> parse_covers(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("\"covers\" must be an array of pairs");
    std::vector<std::pair<int, int>> covers;
    for (const json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            throw std::invalid_argument("each cover must be a pair of integer labels");
        covers.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return covers;
}

inline ParsedPoset poset_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("a poset file must hold a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("\"n\" must be an integer element count");
    if (!j.contains("covers")) throw std::invalid_argument("\"covers\" is required");
    const int n = j.at("n").get<int>();
    auto covers = parse_covers(j.at("covers"));

    ParsedPoset out;
    if (j.contains("variant")) {
        if (!j.at("variant").is_string())
            throw std::invalid_argument("\"variant\" must be one of A, B, C, D");
        out.variant = variant_from_string(j.at("variant").get<std::string>());
    }
    if (out.variant == Variant::A) {
        out.poset = from_cover_relations(n, covers);
    } else {
        out.signed_poset = signed_from_covers(n, covers);
        out.poset = underlying_poset(*out.signed_poset);
    }
    return out;
}

inline json certificate_json(const IndexCertificate& cert) {
    json j{{"dim", cert.dim}, {"lower", cert.lower}, {"upper", cert.upper}};
    if (cert.formula)
        j["formula"] = *cert.formula;
    else
        j["formula"] = nullptr;
    j["status"] = cert.status;
    j["trials"] = cert.trials;
    j["seed"] = cert.seed;
    return j;
}

inline json frobenius_json(const FrobeniusResult& r) {
    return json{{"verdict", verdict_name(r.verdict)},
                {"certificate", certificate_json(r.certificate)}};
}

inline json betti_json(const std::vector<int>& b) { return json{{"betti", b}}; }

inline json sparse_matrix_json(const QMat& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j] == 0) continue;
            arr.push_back(json::array({static_cast<int>(i + 1), static_cast<int>(j + 1),
                                       integer_json(m[i][j].get_num()),
                                       integer_json(m[i][j].get_den())}));
        }
    return arr;
}

inline json spectrum_json(const SpectrumReport& r) {
    json functional = json::array();
    for (const auto& v : r.functional) functional.push_back(rational_json(v));
    json coords = json::array();
    for (const auto& v : r.principal) coords.push_back(rational_json(v));
    json spec = json::array();
    for (const auto& e : r.spectrum.eigenvalues)
        spec.push_back(json::array({integer_json(e.eigenvalue.get_num()),
                                    integer_json(e.eigenvalue.get_den()), e.multiplicity}));
    json j{{"functional", functional},
           {"principal", json{{"coefficients", coords},
                              {"matrix", sparse_matrix_json(r.principal_matrix)}}},
           {"spectrum", spec},
           {"complete", r.spectrum.complete},
           {"residual_zero", r.residual_zero}};
    if (!r.spectrum.complete) {
        json cp = json::array();
        for (const auto& c : r.spectrum.characteristic) cp.push_back(rational_json(c));
        j["characteristic"] = cp;
    }
    return j;
}

inline json face_json(const Face& f) {
    json arr = json::array();
    for (int v : f) arr.push_back(v);
    return arr;
}

inline json morse_json(const SimplicialComplex& k, const MorseAssignment& f,
                       const MorseReport& report) {
    json values = json::array();
    for (const auto& level : k.faces)
        for (const Face& face : level)
            values.push_back(json::array({face_json(face), rational_json(f.value.at(face))}));
    json critical = json::array();
    for (const Face& face : report.critical_faces) critical.push_back(face_json(face));
    return json{{"is_morse", report.is_morse},
                {"critical_faces", critical},
                {"values", values}};
}

inline json complex_json(const SimplicialComplex& k) {
    json levels = json::array();
    for (const auto& level : k.faces) {
        json faces = json::array();
        for (const Face& face : level) faces.push_back(face_json(face));
        levels.push_back(faces);
    }
    return json{{"vertices", k.vertices}, {"faces", levels}};
}

inline const char* basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::MatrixUnit: return "unit";
        case BasisKind::DiagDifference: return "diag-difference";
        case BasisKind::FullTrace: return "trace";
        case BasisKind::Solved: return "solved";
    }
    return "?";
}

inline json algebra_json(const LiePosetAlgebra& g) {
    json basis = json::array();
    for (const auto& b : g.basis)
        basis.push_back(json{{"kind", basis_kind_name(b.kind)},
                             {"i", b.i},
                             {"j", b.j},
                             {"matrix", sparse_matrix_json(b.mat)}});
    json bracket = json::array();
    for (int a = 0; a < g.dim(); ++a)
        for (int b = a + 1; b < g.dim(); ++b) {
            if (g.bracket[a][b].empty()) continue;
            json terms = json::array();
            for (const auto& [k, c] : g.bracket[a][b])
                terms.push_back(json::array(
                    {k + 1, integer_json(c.get_num()), integer_json(c.get_den())}));
            bracket.push_back(json::array({a + 1, b + 1, terms}));
        }
    return json{{"variant", variant_name(g.variant)},
                {"series", g.series == SeriesA::sl ? "sl" : "gl"},
                {"matrix_dim", g.matrix_dim},
                {"dim", g.dim()},
                {"basis", basis},
                {"bracket", bracket}};
}

} // namespace lieposet
