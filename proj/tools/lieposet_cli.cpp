#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <lieposet/atlas.hpp>

using namespace lieposet;

namespace {

struct CommonOpts {
    std::string poset_file;
    std::string variant_flag;
    long long seed = 0;
    int trials = 8;
    long long coeff_bound = 65536;
    std::string out_file;
    bool pretty = false;

    IndexConfig index_config() const {
        IndexConfig cfg;
        cfg.trials = trials;
        cfg.coeff_bound = coeff_bound;
        cfg.seed = static_cast<std::uint64_t>(seed);
        return cfg;
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

void emit(const json& j, const CommonOpts& o) {
    const std::string text = o.pretty ? j.dump(2) : j.dump();
    if (o.out_file.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(o.out_file);
        if (!out) throw std::invalid_argument("cannot open output file " + o.out_file);
        out << text << "\n";
    }
}

// The file's "variant" key picks the series; an explicit --variant overrides
// it. Variant A always means the traceless type-A algebra of the plain (or
// underlying) poset; B, C, D need the signed covers from the file.
LiePosetAlgebra algebra_for(const ParsedPoset& pp, const std::string& variant_flag) {
    Variant v = pp.variant;
    if (!variant_flag.empty()) v = variant_from_string(variant_flag);
    if (v == Variant::A) return build_type_A(pp.poset, SeriesA::sl);
    if (!pp.signed_poset)
        throw std::invalid_argument(std::string("variant ") + variant_name(v) +
                                    " needs a signed poset file with covers on labels "
                                    "-n..-1, 1..n and a \"variant\" key");
    return build_type_BCD(*pp.signed_poset, v);
}

void add_poset_flag(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--poset", o.poset_file, "poset JSON file")->required();
}

void add_output_flags(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--out", o.out_file, "write the result here instead of stdout");
    sub->add_flag("--pretty", o.pretty, "indent the JSON output");
}

void add_sampling_flags(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--seed", o.seed, "RNG seed for functional sampling")->required();
    sub->add_option("--trials", o.trials, "sampled functionals per certificate")
        ->capture_default_str();
    sub->add_option("--coeff-bound", o.coeff_bound, "coefficient bound for sampled functionals")
        ->capture_default_str();
    sub->add_option("--variant", o.variant_flag, "series: A, B, C or D")
        ->check(CLI::IsMember({"A", "B", "C", "D"}));
}

int cmd_index(const CommonOpts& o) {
    ParsedPoset pp = poset_from_json(read_json_file(o.poset_file));
    IndexCertificate cert = certify_index(algebra_for(pp, o.variant_flag), o.index_config());
    json j{{"status", cert.status}};
    if (cert.exact()) j["index"] = cert.upper;
    j["certificate"] = certificate_json(cert);
    emit(j, o);
    return 0;
}

int cmd_frobenius(const CommonOpts& o) {
    ParsedPoset pp = poset_from_json(read_json_file(o.poset_file));
    FrobeniusResult fr =
        frobenius_from_certificate(certify_index(algebra_for(pp, o.variant_flag), o.index_config()));
    emit(frobenius_json(fr), o);
    return fr.verdict == FrobeniusVerdict::Undetermined ? 3 : 0;
}

int cmd_classify(const CommonOpts& o) {
    ParsedPoset pp = poset_from_json(read_json_file(o.poset_file));
    const Poset& p = pp.poset;
    PosetStats s = poset_stats(p);
    json j{{"n", p.n},
           {"height", s.height},
           {"components", s.components},
           {"pure", s.pure},
           {"relations", s.rel_count}};
    if (s.height <= 2)
        j["formula"] = formula_index(p);
    else
        j["formula"] = nullptr;
    if (s.height <= 1) {
        j["characterization"] = "hasse-tree";
        j["frobenius"] = characterize_h01(p);
    } else if (s.height == 2) {
        NonPureReport rep = check_nonpure_conditions(p);
        PureDecomposition d = decompose_pure(p);
        j["characterization"] = "four-conditions";
        j["conditions"] = json{{"components_frobenius", rep.components_frobenius},
                               {"no_internal_cover", rep.no_internal_cover},
                               {"cover_multiplicity", rep.cover_multiplicity},
                               {"contraction_tree", rep.contraction_tree}};
        j["decomposition"] = json{{"min_max_covers", covers_json(d.min_max_covers)},
                                  {"components", d.component_labels},
                                  {"singletons", d.singletons}};
        j["frobenius"] = rep.all();
    } else {
        j["characterization"] = nullptr;
        j["frobenius"] = nullptr;
    }
    emit(j, o);
    return 0;
}

int cmd_homology(const CommonOpts& o) {
    ParsedPoset pp = poset_from_json(read_json_file(o.poset_file));
    emit(betti_json(betti(order_complex(pp.poset), 2)), o);
    return 0;
}

json trace_json(const GluingTrace& tr) {
    auto corners = [](int c, int b, int a1, int a2) {
        return json{{"c", c}, {"b", b}, {"a1", a1}, {"a2", a2}};
    };
    json steps = json::array();
    for (const GluingStep& st : tr.steps)
        steps.push_back(json{{"block", block_name(st.block)},
                             {"rule", st.rule},
                             {"corners", corners(st.c, st.b, st.a1, st.a2)},
                             {"fresh", json{{"c", st.c_new}, {"a1", st.a1_new}, {"a2", st.a2_new}}}});
    json j{{"base", block_name(tr.base)},
           {"corners", corners(tr.c, tr.b, tr.a1, tr.a2)},
           {"steps", steps}};
    j["n"] = tr.result.n;
    j["covers"] = covers_json(cover_relations(tr.result));
    return j;
}

BlockKind block_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "P112") return BlockKind::P112;
        if (s == "P211") return BlockKind::P211;
    }
    throw std::invalid_argument(where + " must be \"P112\" or \"P211\"");
}

GluingTrace trace_from_json(const json& j) {
    auto corner = [&](const json& c, const char* name) {
        if (!c.is_object() || !c.contains(name) || !c.at(name).is_number_integer())
            throw std::invalid_argument(std::string("trace corners need an integer \"") + name +
                                        "\"");
        return c.at(name).get<int>();
    };
    GluingTrace tr;
    tr.base = block_from_json(j.at("base"), "\"base\"");
    const json& bc = j.at("corners");
    tr.c = corner(bc, "c");
    tr.b = corner(bc, "b");
    tr.a1 = corner(bc, "a1");
    tr.a2 = corner(bc, "a2");
    if (!j.contains("steps") || !j.at("steps").is_array())
        throw std::invalid_argument("a trace needs a \"steps\" array");
    for (const json& sj : j.at("steps")) {
        GluingStep st;
        st.block = block_from_json(sj.at("block"), "step \"block\"");
        if (!sj.contains("rule") || !sj.at("rule").is_string())
            throw std::invalid_argument("each step needs a \"rule\" tag");
        st.rule = sj.at("rule").get<std::string>();
        const json& sc = sj.at("corners");
        st.c = corner(sc, "c");
        st.b = corner(sc, "b");
        st.a1 = corner(sc, "a1");
        st.a2 = corner(sc, "a2");
        const json& fresh = sj.at("fresh");
        if (!fresh.is_object() || !fresh.contains("c") || !fresh.contains("a1") ||
            !fresh.contains("a2"))
            throw std::invalid_argument("each step needs \"fresh\" flags for c, a1, a2");
        st.c_new = fresh.at("c").get<bool>();
        st.a1_new = fresh.at("a1").get<bool>();
        st.a2_new = fresh.at("a2").get<bool>();
        tr.steps.push_back(std::move(st));
    }
    tr.result = poset_from_json(json{{"n", j.at("n")}, {"covers", j.at("covers")}}).poset;
    return tr;
}

// Accepts either a gluing trace (as written by generate) whose assignment is
// rebuilt and verified, or a poset with explicit "values" to check.
int cmd_morse(const CommonOpts& o) {
    json j = read_json_file(o.poset_file);
    if (!j.is_object()) throw std::invalid_argument("a morse input must be a JSON object");
    if (j.contains("steps")) {
        GluingTrace tr = trace_from_json(j);
        MorseAssignment f = build_glued_morse(tr);
        SimplicialComplex k = order_complex(tr.result);
        MorseReport rep = verify_morse(k, f);
        emit(morse_json(k, f, rep), o);
        return 0;
    }
    if (j.contains("values")) {
        ParsedPoset pp = poset_from_json(json{{"n", j.at("n")}, {"covers", j.at("covers")}});
        MorseAssignment f;
        if (!j.at("values").is_array())
            throw std::invalid_argument("\"values\" must be an array of [face, value] pairs");
        for (const json& entry : j.at("values")) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array())
                throw std::invalid_argument("\"values\" must be an array of [face, value] pairs");
            Face face;
            for (const json& v : entry[0]) face.push_back(v.get<int>());
            f.value[face] = rational_from_json(entry[1], "face value");
        }
        SimplicialComplex k = order_complex(pp.poset);
        MorseReport rep = verify_morse(k, f);
        emit(morse_json(k, f, rep), o);
        return 0;
    }
    throw std::invalid_argument(
        "a morse input needs either a gluing trace (\"steps\") or explicit \"values\"");
}

int cmd_spectrum(const CommonOpts& o) {
    ParsedPoset pp = poset_from_json(read_json_file(o.poset_file));
    LiePosetAlgebra g = algebra_for(pp, o.variant_flag);
    IndexConfig cfg = o.index_config();
    FrobeniusResult fr = frobenius_from_certificate(certify_index(g, cfg));
    if (fr.verdict == FrobeniusVerdict::Undetermined) {
        emit(frobenius_json(fr), o);
        return 3;
    }
    if (fr.verdict == FrobeniusVerdict::NotFrobenius)
        throw std::invalid_argument("spectrum needs a Frobenius algebra, but the index "
                                    "certified to at least " +
                                    std::to_string(fr.certificate.lower));
    emit(spectrum_json(spectrum_report(g, cfg)), o);
    return 0;
}

int cmd_generate(const CommonOpts& o, int blocks, bool all_rules) {
    if (blocks < 1) throw std::invalid_argument("generate needs at least one block");
    if (blocks > 4)
        throw std::invalid_argument("generate with more than 4 blocks enumerates millions "
                                    "of traces; sweep the library API instead");
    const std::vector<GluingRule> rules = all_rules ? gluing_rules() : frobenius_rules();
    std::vector<GluingTrace> traces = generate_glued(blocks, rules);
    json tags = json::array();
    for (const GluingRule& r : rules) tags.push_back(r.tag);
    json out = json::array();
    for (const GluingTrace& tr : traces) out.push_back(trace_json(tr));
    emit(json{{"blocks", blocks},
              {"rules", tags},
              {"count", static_cast<int>(traces.size())},
              {"traces", out}},
         o);
    return 0;
}

unsigned parse_checks(const std::string& list) {
    unsigned checks = 0;
    std::istringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "all") checks |= CheckAll;
        else if (item == "formulas") checks |= CheckFormulas;
        else if (item == "frobenius") checks |= CheckFrobenius;
        else if (item == "homology") checks |= CheckHomology;
        else if (item == "spectrum") checks |= CheckSpectrum;
        else
            throw std::invalid_argument("unknown check \"" + item +
                                        "\"; pick from formulas, frobenius, homology, "
                                        "spectrum, all");
    }
    if (checks == 0) throw std::invalid_argument("--checks selected nothing");
    return checks;
}

json check_names(unsigned checks) {
    json names = json::array();
    if (checks & CheckFormulas) names.push_back("formulas");
    if (checks & CheckFrobenius) names.push_back("frobenius");
    if (checks & CheckHomology) names.push_back("homology");
    if (checks & CheckSpectrum) names.push_back("spectrum");
    return names;
}

int cmd_sweep(const CommonOpts& o, int n_max, const std::string& checks_list) {
    const unsigned checks = parse_checks(checks_list);
    std::ofstream atlas;
    std::ostream* sink = nullptr;
    if (!o.out_file.empty()) {
        atlas.open(o.out_file, std::ios::app); // the atlas is append-only
        if (!atlas) throw std::invalid_argument("cannot open output file " + o.out_file);
        sink = &atlas;
    }
    SweepReport r = sweep(n_max, checks, o.index_config(), sink);
    json j{{"n_max", n_max},
           {"checks", check_names(checks)},
           {"records", r.records},
           {"formula", json{{"checked", r.formula_checked}, {"mismatches", r.formula_mismatches}}},
           {"frobenius", json{{"checked", r.frobenius_checked},
                              {"disagreements", r.frobenius_disagreements},
                              {"undetermined", r.undetermined}}},
           {"homology", json{{"checked", r.homology_checked}, {"failures", r.homology_failures}}},
           {"spectrum", json{{"checked", r.spectrum_checked}, {"failures", r.spectrum_failures}}},
           {"ok", r.ok()},
           {"witnesses", r.witnesses}};
    const std::string text = o.pretty ? j.dump(2) : j.dump();
    std::cout << text << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates, homology and spectra for Lie poset algebras"};
    app.require_subcommand(1);

    CommonOpts o;
    int blocks = 1;
    bool all_rules = false;
    int n_max = 5;
    std::string checks_list = "all";
    int rc = 0;

    CLI::App* c_index = app.add_subcommand("index", "certify the index of a poset algebra");
    add_poset_flag(c_index, o);
    add_sampling_flags(c_index, o);
    add_output_flags(c_index, o);
    c_index->callback([&] { rc = cmd_index(o); });

    CLI::App* c_frob = app.add_subcommand("frobenius", "decide whether the algebra is Frobenius");
    add_poset_flag(c_frob, o);
    add_sampling_flags(c_frob, o);
    add_output_flags(c_frob, o);
    c_frob->callback([&] { rc = cmd_frobenius(o); });

    CLI::App* c_classify =
        app.add_subcommand("classify", "structural characterization of a poset");
    add_poset_flag(c_classify, o);
    add_output_flags(c_classify, o);
    c_classify->callback([&] { rc = cmd_classify(o); });

    CLI::App* c_homology =
        app.add_subcommand("homology", "Betti numbers of the order complex");
    add_poset_flag(c_homology, o);
    add_output_flags(c_homology, o);
    c_homology->callback([&] { rc = cmd_homology(o); });

    CLI::App* c_morse = app.add_subcommand("morse", "build or verify a discrete Morse assignment");
    add_poset_flag(c_morse, o);
    add_output_flags(c_morse, o);
    c_morse->callback([&] { rc = cmd_morse(o); });

    CLI::App* c_spectrum =
        app.add_subcommand("spectrum", "principal element and ad-spectrum of a Frobenius algebra");
    add_poset_flag(c_spectrum, o);
    add_sampling_flags(c_spectrum, o);
    add_output_flags(c_spectrum, o);
    c_spectrum->callback([&] { rc = cmd_spectrum(o); });

    CLI::App* c_generate =
        app.add_subcommand("generate", "enumerate glued Frobenius posets with their traces");
    c_generate->add_option("--blocks", blocks, "number of four-element blocks")->required();
    c_generate->add_flag("--all-rules", all_rules, "include the index-raising rules");
    add_output_flags(c_generate, o);
    c_generate->callback([&] { rc = cmd_generate(o, blocks, all_rules); });

    CLI::App* c_sweep = app.add_subcommand("sweep", "run checks over every poset up to a size");
    c_sweep->add_option("--n-max", n_max, "largest element count to sweep")->required();
    c_sweep->add_option("--checks", checks_list,
                        "comma-separated subset of formulas,frobenius,homology,spectrum")
        ->capture_default_str();
    add_sampling_flags(c_sweep, o);
    add_output_flags(c_sweep, o);
    c_sweep->callback([&] { rc = cmd_sweep(o, n_max, checks_list); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return rc;
}
