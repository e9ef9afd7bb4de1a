/** Reports: computation summaries, reference-comparison diffs, and the JSON
 * wire format.
 *
 * A mismatch against the reference is a finding, not a failure: entries say
 * exactly where the engine and the reference text part ways. Comparison runs
 * on the transcribed path (which starts from the reference's own printed
 * integrand) with the full-symbolic path as a cross-check, and the sphere
 * question is settled both ways: exact moments over S^{n-2}, and the
 * reference's (4 pi/3) * OMEGA(n-1) reading.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kkw/paper_values.hpp"
#include "kkw/version.hpp"

namespace kkw {

using Json = nlohmann::ordered_json;

/// Sphere contraction under the reference's normalization: the quadratic
/// moment 4 pi/3 regardless of dimension, total mass OMEGA(n-1).
inline CoeffPoly contract_pattern_paper_reading(const TangentialPattern& p, int n) {
    using K = TangentialPattern::Kind;
    switch (p.kind) {
        case K::SUM_XY_JL:
            return (CoeffPoly::pi() * CoeffPoly::omega(n - 1) * CoeffPoly::t_sym())
                .scaled(GaussianRational(Rational(4, 3)));
        case K::CONST_NN:
            return CoeffPoly::omega(n - 1) * CoeffPoly::n_sym();
        default:
            return CoeffPoly();
    }
}

/// Re-integrates a computed case under the reference's sphere reading.
inline CoeffPoly case_total_paper_reading(const CaseResult& r, const BoundaryCase& bc, int n) {
    GaussianRational sign(1);
    for (auto& f : r.flags)
        if (f.rfind("transcribed integrand is the parts-integrated", 0) == 0) sign = GaussianRational(-1);
    CoeffPoly total;
    for (auto& tb : r.breakdown)
        total += (tb.contour * contract_pattern_paper_reading(tb.pattern, n))
                     .scaled(bc.prefactor * sign);
    return total;
}

struct VerifyEntry {
    std::string label;
    CoeffPoly engine_full;
    CoeffPoly engine_transcribed;
    CoeffPoly engine_transcribed_paper_reading;
    std::optional<CoeffPoly> paper;
    std::string citation;
    std::vector<std::string> notes;
    bool paths_agree = false;
    bool match = false;  // engine_transcribed == paper, exact
    bool match_paper_reading = false;
    std::string first_divergent_step;
    std::vector<std::string> detail;
    std::vector<std::string> flags;
};

struct ResidueStepResult {
    std::string description;
    GaussianRational engine;
    GaussianRational implied;
    std::string implied_from;
    bool agree = false;
};

struct VerifyReport {
    int dim = 0;
    std::vector<VerifyEntry> entries;
    std::optional<InteriorTerm> interior;
    std::string interior_citation;
    std::vector<ResidueStepResult> residue_steps;
    std::vector<std::string> notes;
};

namespace report_detail {

inline std::string poly_str(const CoeffPoly& p) { return p.to_string(); }

/// Pattern-level comparison of the two paths; fills step/detail on the first
/// divergence and itemizes every differing pattern.
inline void localize_divergence(VerifyEntry& e, const CaseResult& full,
                                const CaseResult& transcribed) {
    std::map<TangentialPattern, std::pair<CoeffPoly, CoeffPoly>> merged;
    for (auto& tb : full.breakdown) merged[tb.pattern].first = tb.contribution;
    for (auto& tb : transcribed.breakdown) merged[tb.pattern].second = tb.contribution;
    for (auto& [p, pair] : merged) {
        if (pair.first == pair.second) continue;
        if (e.first_divergent_step.empty())
            e.first_divergent_step = "trace integrand, pattern " + p.to_string();
        e.detail.push_back("pattern " + p.to_string() + ": full-symbolic " +
                           poly_str(pair.first) + " vs transcribed " + poly_str(pair.second));
    }
}

}  // namespace report_detail

inline VerifyReport build_verify_report(int dim, const PairingTable& pairings,
                                        const OpaqueTraceRegistry& registry) {
    VerifyReport rep;
    rep.dim = dim;
    CoeffPoly total_full, total_trans, total_paper_reading;
    std::vector<BoundaryCase> cases = enumerate_cases(dim);

    for (const BoundaryCase& bc : cases) {
        CaseResult full = compute_case(bc, dim, CasePath::FULL_SYMBOLIC, pairings, registry);
        CaseResult trans = compute_case(bc, dim, CasePath::TRANSCRIBED_INTEGRAND, pairings, registry);
        VerifyEntry e;
        e.label = bc.label;
        e.engine_full = full.phi;
        e.engine_transcribed = trans.phi;
        e.engine_transcribed_paper_reading = case_total_paper_reading(trans, bc, dim);
        e.flags = full.flags;
        e.flags.insert(e.flags.end(), trans.flags.begin(), trans.flags.end());
        if (auto pv = paper_value(dim, bc.label)) {
            e.paper = pv->value;
            e.citation = pv->citation;
            e.notes = pv->notes;
        }
        e.paths_agree = (full.phi == trans.phi);
        if (!e.paths_agree) report_detail::localize_divergence(e, full, trans);
        if (e.paper) {
            e.match = (*e.paper == trans.phi);
            e.match_paper_reading = (*e.paper == e.engine_transcribed_paper_reading);
            if (!e.match && e.first_divergent_step.empty()) {
                e.first_divergent_step = "residue/moment recombination";
                for (auto& tb : trans.breakdown)
                    if (!tb.contour.is_zero())
                        e.detail.push_back("pattern " + tb.pattern.to_string() +
                                           ": Gamma+ integral " + report_detail::poly_str(tb.contour) +
                                           ", exact moment " + report_detail::poly_str(tb.moment));
                e.detail.push_back("reference sphere reading gives " +
                                   report_detail::poly_str(e.engine_transcribed_paper_reading));
            }
        }
        total_full += full.phi;
        total_trans += trans.phi;
        total_paper_reading += e.engine_transcribed_paper_reading;
        rep.entries.push_back(std::move(e));
    }

    VerifyEntry tot;
    tot.label = "total";
    tot.engine_full = total_full;
    tot.engine_transcribed = total_trans;
    tot.engine_transcribed_paper_reading = total_paper_reading;
    tot.paths_agree = (total_full == total_trans);
    if (auto pv = paper_value(dim, "total")) {
        tot.paper = pv->value;
        tot.citation = pv->citation;
        tot.notes = pv->notes;
        tot.match = (*pv).value == total_trans;
        tot.match_paper_reading = (*pv).value == total_paper_reading;
        if (!tot.match)
            tot.first_divergent_step = "see per-case entries; first mismatching case above";
    }
    rep.entries.push_back(std::move(tot));

    for (const ResidueStepSpec& spec : paper_residue_steps(dim)) {
        ResidueStepResult r;
        r.description = spec.description;
        r.implied = spec.implied;
        r.implied_from = spec.implied_from;
        CliffordExpr v = spec.bracket.derivative(spec.derivative_order).eval(GaussianRational::i());
        CoeffPoly scalar;
        for (auto& [w, c] : v.terms()) scalar += c;
        r.engine = scalar.is_zero() ? GaussianRational(0) : scalar.constant_value();
        r.agree = (r.engine == r.implied);
        rep.residue_steps.push_back(std::move(r));
    }

    if (dim != 3) {
        rep.interior = interior_term(dim);
        rep.interior_citation = paper_interior(dim).citation;
    }

    rep.notes.push_back(
        "sphere normalization computed both ways: exact moments over S^(n-2) with OMEGA(n-2), "
        "and the reference's (4pi/3)*OMEGA(n-1) quadratic reading");
    if (dim == 4) {
        rep.notes.push_back("the full-symbolic case b keeps the opaque constant C0; the reference "
                            "drops its c0 term between integrand and value");
        rep.notes.push_back("results are labelled as the D^-1 o D^-3 pairing actually computed; "
                            "the reference's theorem statement names D^-2 o D^-2");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON rendering
// ---------------------------------------------------------------------------

inline Json case_result_json(const CaseResult& r) {
    Json j;
    j["label"] = r.label;
    j["path"] = path_name(r.path);
    j["phi"] = r.phi.to_string();
    j["flags"] = r.flags;
    return j;
}

inline Json compute_report_json(int dim, const std::vector<CasePath>& paths,
                                const std::string& case_filter, uint64_t seed,
                                const PairingTable& pairings, const OpaqueTraceRegistry& registry) {
    Json j;
    j["dim"] = dim;
    Json entries = Json::array();
    for (CasePath path : paths) {
        PhiResult pr = compute_phi(dim, path, pairings, registry);
        for (auto& cr : pr.cases) {
            if (!case_filter.empty() && cr.label != case_filter) continue;
            entries.push_back(case_result_json(cr));
        }
        if (case_filter.empty()) {
            Json t;
            t["label"] = "total";
            t["path"] = path_name(path);
            t["phi"] = pr.total.to_string();
            t["flags"] = Json::array();
            entries.push_back(std::move(t));
        }
    }
    j["entries"] = std::move(entries);
    if (dim != 3 && case_filter.empty()) {
        InteriorTerm t = interior_term(dim);
        j["interior"] = {{"einstein_coeff", t.einstein_coeff.to_string()},
                         {"scalar_coeff", t.scalar_coeff.to_string()},
                         {"note", t.note}};
    }
    j["meta"] = {{"seed", seed}, {"version", kVersion}};
    return j;
}

inline Json verify_report_json(const VerifyReport& rep, uint64_t seed) {
    Json j;
    j["dim"] = rep.dim;
    Json entries = Json::array();
    for (auto& e : rep.entries) {
        Json ej;
        ej["label"] = e.label;
        ej["path"] = "transcribed";
        ej["phi"] = e.engine_transcribed.to_string();
        ej["phi_full_symbolic"] = e.engine_full.to_string();
        ej["phi_reference_sphere_reading"] = e.engine_transcribed_paper_reading.to_string();
        if (e.paper) {
            ej["paper_value"] = e.paper->to_string();
            ej["citation"] = e.citation;
            ej["match"] = e.match ? "exact" : "mismatch";
            ej["match_reference_sphere_reading"] = e.match_paper_reading ? "exact" : "mismatch";
            if (!e.match) ej["first_divergent_step"] = e.first_divergent_step;
        }
        ej["paths_agree"] = e.paths_agree;
        if (!e.detail.empty()) ej["detail"] = e.detail;
        if (!e.notes.empty()) ej["notes"] = e.notes;
        ej["flags"] = e.flags;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    if (rep.interior) {
        j["interior"] = {{"einstein_coeff", rep.interior->einstein_coeff.to_string()},
                         {"scalar_coeff", rep.interior->scalar_coeff.to_string()},
                         {"note", rep.interior->note},
                         {"citation", rep.interior_citation},
                         {"match", "transcribed"}};
    }
    if (!rep.residue_steps.empty()) {
        Json steps = Json::array();
        for (auto& s : rep.residue_steps) {
            steps.push_back({{"step", s.description},
                             {"engine_value", s.engine.to_string()},
                             {"implied_value", s.implied.to_string()},
                             {"implied_from", s.implied_from},
                             {"agree", s.agree}});
        }
        j["residue_steps"] = std::move(steps);
    }
    j["notes"] = rep.notes;
    j["meta"] = {{"seed", seed}, {"version", kVersion}};
    return j;
}

inline std::string render_text(const Json& j) {
    std::string out;
    out += "dim " + std::to_string(j["dim"].get<int>()) + "\n";
    for (auto& e : j["entries"]) {
        out += "  [" + e["path"].get<std::string>() + "] " + e["label"].get<std::string>() +
               ": " + e["phi"].get<std::string>() + "\n";
        if (e.contains("paper_value")) {
            out += "      reference " + e["citation"].get<std::string>() + ": " +
                   e["paper_value"].get<std::string>() + "  -> " + e["match"].get<std::string>() +
                   "\n";
            if (e.contains("first_divergent_step"))
                out += "      first divergent step: " +
                       e["first_divergent_step"].get<std::string>() + "\n";
        }
        if (e.contains("detail"))
            for (auto& d : e["detail"]) out += "      . " + d.get<std::string>() + "\n";
        for (auto& f : e["flags"]) out += "      ~ " + f.get<std::string>() + "\n";
    }
    if (j.contains("interior")) {
        out += "  interior: einstein " + j["interior"]["einstein_coeff"].get<std::string>() +
               ", scalar " + j["interior"]["scalar_coeff"].get<std::string>() + " (" +
               j["interior"]["note"].get<std::string>() + ")\n";
    }
    if (j.contains("residue_steps"))
        for (auto& s : j["residue_steps"])
            out += "  residue step: " + s["step"].get<std::string>() + " engine " +
                   s["engine_value"].get<std::string>() + " vs implied " +
                   s["implied_value"].get<std::string>() + "\n";
    if (j.contains("notes"))
        for (auto& n : j["notes"]) out += "  note: " + n.get<std::string>() + "\n";
    return out;
}

}  // namespace kkw
