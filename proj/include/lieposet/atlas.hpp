#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <thread>

#include <lieposet/enumerate.hpp>
#include <lieposet/frobenius.hpp>
#include <lieposet/json_io.hpp>
#include <lieposet/spectrum.hpp>
#include <lieposet/topology.hpp>

namespace lieposet {

struct EnumerateOptions {
    std::optional<int> height_filter;
    bool connected_only = false;
    bool dedup = true;
    bool allow_large = false;
};

inline void enumerate_posets(int n, const EnumerateOptions& opts,
                             const std::function<void(const Poset&)>& visit) {
    auto wanted = [&](const Poset& p) {
        PosetStats s = poset_stats(p);
        if (opts.height_filter && s.height != *opts.height_filter) return false;
        if (opts.connected_only && s.components != 1) return false;
        return true;
    };
    if (opts.dedup) {
        for (const Poset& p : iso_classes(n, opts.allow_large))
            if (wanted(p)) visit(p);
    } else {
        enumerate_labeled(
            n, [&](const Poset& p) { if (wanted(p)) visit(p); }, opts.allow_large);
    }
}

inline std::vector<Poset> enumerate_posets(int n, const EnumerateOptions& opts = {}) {
    std::vector<Poset> out;
    enumerate_posets(n, opts, [&](const Poset& p) { out.push_back(p); });
    return out;
}

// One atlas row: the canonical poset together with everything the toolkit
// can say about it. The spectrum rides along only on a Frobenius verdict.
struct AtlasRecord {
    Poset poset;
    int height = 0;
    int components = 0;
    bool pure = false;
    int relations = 0;
    std::optional<int> formula;
    IndexCertificate certificate;
    FrobeniusVerdict verdict = FrobeniusVerdict::Undetermined;
    std::vector<int> betti;
    std::optional<SpectrumReport> spectrum;
    long long ms = 0;
};

inline AtlasRecord build_record(const Poset& p, const IndexConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    AtlasRecord rec;
    rec.poset = canonical_form(p);
    PosetStats stats = poset_stats(rec.poset);
    rec.height = stats.height;
    rec.components = stats.components;
    rec.pure = stats.pure;
    rec.relations = stats.rel_count;

    LiePosetAlgebra g = build_type_A(rec.poset, SeriesA::sl);
    FrobeniusResult fr = frobenius_from_certificate(certify_index(g, cfg));
    rec.certificate = fr.certificate;
    rec.formula = fr.certificate.formula;
    rec.verdict = fr.verdict;
    rec.betti = betti(order_complex(rec.poset), 2);
    if (rec.verdict == FrobeniusVerdict::Frobenius) rec.spectrum = spectrum_report(g, cfg);

    rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
                 .count();
    return rec;
}

inline json record_json(const AtlasRecord& rec) {
    json j{{"n", rec.poset.n},
           {"covers", covers_json(cover_relations(rec.poset))},
           {"height", rec.height},
           {"components", rec.components},
           {"pure", rec.pure},
           {"relations", rec.relations}};
    if (rec.formula)
        j["formula"] = *rec.formula;
    else
        j["formula"] = nullptr;
    j["certificate"] = certificate_json(rec.certificate);
    j["verdict"] = verdict_name(rec.verdict);
    j["betti"] = rec.betti;
    if (rec.spectrum)
        j["spectrum"] = spectrum_json(*rec.spectrum);
    else
        j["spectrum"] = nullptr;
    j["ms"] = rec.ms;
    return j;
}

enum SweepCheck : unsigned {
    CheckFormulas = 1u,
    CheckFrobenius = 2u,
    CheckHomology = 4u,
    CheckSpectrum = 8u,
    CheckAll = 15u,
};

// Tallies per check, plus the serialized witness of every failure. A sweep
// never throws on a mismatch; callers read ok().
struct SweepReport {
    int records = 0;
    int formula_checked = 0;
    int formula_mismatches = 0;
    int frobenius_checked = 0;
    int frobenius_disagreements = 0;
    int undetermined = 0;
    int homology_checked = 0;
    int homology_failures = 0;
    int spectrum_checked = 0;
    int spectrum_failures = 0;
    std::vector<json> witnesses;

    bool ok() const {
        return formula_mismatches == 0 && frobenius_disagreements == 0 &&
               homology_failures == 0 && spectrum_failures == 0;
    }
};

inline bool spectrum_is_half_zeros_half_ones(const SpectrumReport& rep, int dim) {
    if (!rep.spectrum.complete) return false;
    if (dim == 0) return rep.spectrum.eigenvalues.empty();
    if (dim % 2 != 0 || rep.spectrum.eigenvalues.size() != 2) return false;
    const auto& lo = rep.spectrum.eigenvalues[0];
    const auto& hi = rep.spectrum.eigenvalues[1];
    return lo.eigenvalue == 0 && hi.eigenvalue == 1 && lo.multiplicity == dim / 2 &&
           hi.multiplicity == dim / 2;
}

namespace detail {

inline void check_record(const AtlasRecord& rec, unsigned checks, SweepReport& report) {
    auto witness = [&](const char* why) {
        json w = record_json(rec);
        w.erase("ms");
        w["failure"] = why;
        report.witnesses.push_back(std::move(w));
    };
    if ((checks & CheckFormulas) && rec.formula) {
        ++report.formula_checked;
        if (*rec.formula < rec.certificate.lower || *rec.formula > rec.certificate.upper) {
            ++report.formula_mismatches;
            witness("formula outside certificate bounds");
        }
    }
    if ((checks & CheckFrobenius) && rec.formula) {
        if (rec.verdict == FrobeniusVerdict::Undetermined) {
            ++report.undetermined;
        } else {
            ++report.frobenius_checked;
            const bool predicted = *rec.formula == 0;
            const bool observed = rec.verdict == FrobeniusVerdict::Frobenius;
            if (predicted != observed) {
                ++report.frobenius_disagreements;
                witness("verdict disagrees with the zero-index characterization");
            }
        }
    }
    if ((checks & CheckHomology) && rec.verdict == FrobeniusVerdict::Frobenius &&
        rec.height <= 2) {
        ++report.homology_checked;
        if (rec.betti != std::vector<int>{1, 0, 0}) {
            ++report.homology_failures;
            witness("Frobenius order complex is not contractible");
        }
    }
    if ((checks & CheckSpectrum) && rec.verdict == FrobeniusVerdict::Frobenius &&
        rec.height <= 2) {
        ++report.spectrum_checked;
        if (!rec.spectrum || !spectrum_is_half_zeros_half_ones(*rec.spectrum, rec.certificate.dim)) {
            ++report.spectrum_failures;
            witness("spectrum is not half zeros, half ones");
        }
    }
}

inline int thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("LIEPOSET_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) n = v;
    }
    return n;
}

} // namespace detail

// Sweeps every isomorphism class on 1..n_max elements, builds records in
// parallel (workers pull from a shared counter; LIEPOSET_THREADS caps them)
// and writes JSONL through the single sink, ordered by (n, canonical covers).
inline SweepReport sweep(int n_max, unsigned checks, const IndexConfig& cfg,
                         std::ostream* sink = nullptr,
                         const EnumerateOptions& base_opts = {}) {
    SweepReport report;
    for (int n = 1; n <= n_max; ++n) {
        EnumerateOptions opts = base_opts;
        opts.dedup = true;
        std::vector<Poset> posets = enumerate_posets(n, opts);
        std::sort(posets.begin(), posets.end(), [](const Poset& a, const Poset& b) {
            return cover_relations(a) < cover_relations(b);
        });

        std::vector<AtlasRecord> slots(posets.size());
        std::atomic<std::size_t> next{0};
        const int workers =
            std::min(detail::thread_count(), std::max(static_cast<int>(posets.size()), 1));
        auto drain = [&]() {
            for (std::size_t i = next.fetch_add(1); i < posets.size(); i = next.fetch_add(1))
                slots[i] = build_record(posets[i], cfg);
        };
        if (workers <= 1) {
            drain();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
            for (auto& t : pool) t.join();
        }

        for (const AtlasRecord& rec : slots) {
            ++report.records;
            detail::check_record(rec, checks, report);
            if (sink) *sink << record_json(rec).dump() << "\n";
        }
    }
    return report;
}

} // namespace lieposet
