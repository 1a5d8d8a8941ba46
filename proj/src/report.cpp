#include "lclab/report.hpp"

namespace lclab {

namespace {

const char* const kHeuristicNote =
    "stage T found by the window test on consecutive transition maps; no a priori bound is available";

Json dims_json(const std::vector<std::size_t>& v)
{
    Json out = Json::array();
    for (auto d : v) out.push_back(d);
    return out;
}

} // namespace

Json poly_list_json(const std::vector<Poly>& ps)
{
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

Json ideal_json(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens)
{
    return {{"ring", ring.descriptor()}, {"vars", nvars}, {"generators", poly_list_json(gens)}};
}

Json matrix_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
        out.push_back(row);
    }
    return out;
}

Json cochain_json(const Cochain& c)
{
    Json out = Json::array();
    for (const auto& comp : c) out.push_back({{"subset", comp.subset}, {"form", comp.form.to_string()}});
    return out;
}

Json basis_json(const std::vector<Cochain>& basis)
{
    Json out = Json::array();
    for (const auto& c : basis) out.push_back(cochain_json(c));
    return out;
}

Json stable_strand_json(const StableStrand& s)
{
    return {{"j", s.j},
            {"s", s.s},
            {"stage_T", s.stage},
            {"dim", s.dim},
            {"basis", basis_json(s.basis)},
            {"evidence", {{"transition_dims", dims_json(s.transition_dims)}, {"stabilization", kHeuristicNote}}}};
}

Json frobenius_json(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, const FrobeniusVerdict& v)
{
    Json out = {{"ideal", ideal_json(ring, nvars, gens)},
                {"p", v.p},
                {"j", v.j},
                {"s", 0},
                {"stage_T", v.stage},
                {"dim", v.dim},
                {"frobenius_matrix", matrix_json(v.frobenius)},
                {"verdict", v.verdict()},
                {"nilpotency_index", nullptr},
                {"basis", basis_json(v.basis)}};
    if (v.nilpotent) out["nilpotency_index"] = v.nilpotency_index;
    out["evidence"] = {{"transition_dims", dims_json(v.transition_dims)},
                       {"frobenius_stage", v.frobenius_stage},
                       {"stabilization", kHeuristicNote}};
    return out;
}

Json undetected_frobenius_json(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                               std::uint64_t p, int j, const std::string& reason)
{
    return {{"ideal", ideal_json(ring, nvars, gens)},
            {"p", p},
            {"j", j},
            {"s", 0},
            {"stage_T", nullptr},
            {"dim", nullptr},
            {"frobenius_matrix", nullptr},
            {"verdict", "undetected"},
            {"nilpotency_index", nullptr},
            {"basis", nullptr},
            {"evidence", {{"transition_dims", nullptr}, {"reason", reason}}}};
}

Json torsion_json(int nvars, const std::vector<Poly>& gens_over_z, const TorsionReport& r)
{
    auto fp = CoefficientRing::prime_field(r.p);
    return {{"ideal", ideal_json(CoefficientRing::integers(), nvars, gens_over_z)},
            {"p", r.p},
            {"k", r.k},
            {"j", r.j},
            {"reduced_ideal", ideal_json(fp, nvars, r.reduced_ideal)},
            {"frobenius", frobenius_json(fp, nvars, r.reduced_ideal, r.frobenius)},
            {"verdict", r.verdict},
            {"conclusion", r.conclusion},
            {"unchecked_hypothesis", r.unchecked_hypothesis}};
}

Json a_invariant_json(const AInvariantResult& r)
{
    Json out = {{"a", r.a},
                {"method", r.method == AInvariantMethod::Strand ? "strand" : "hilbert"},
                {"krull_dim", r.krull_dim},
                {"hilbert_numerator", r.numerator},
                {"cm_asserted", r.cm_asserted}};
    if (r.method == AInvariantMethod::Strand) {
        Json scanned = Json::array();
        for (const auto& [s, d] : r.scanned) scanned.push_back({{"s", s}, {"dim", d}});
        out["scan_top"] = r.scan_top;
        out["scanned"] = scanned;
    } else if (!r.cm_asserted) {
        out["note"] = "the Hilbert-series value equals the a-invariant only for Cohen-Macaulay quotients";
    }
    return out;
}

Json invariants_json(const FamilyInvariants& f)
{
    return {{"height", f.height}, {"ara", f.ara}, {"critical_index", f.critical_index}};
}

Json prediction_json(const VanishingPrediction& v)
{
    Json out = {{"applicable", v.applicable}, {"vanishes", v.vanishes}, {"reason", v.reason}};
    out["index"] = v.applicable ? Json(v.index) : Json(nullptr);
    out["threshold"] = v.applicable ? Json(v.threshold) : Json(nullptr);
    return out;
}

Json membership_json(const MembershipRecord& r)
{
    return {{"claim", r.claim},
            {"target", r.target.to_string()},
            {"power", r.power},
            {"generators", poly_list_json(r.generators)},
            {"bound", r.bound},
            {"found", r.found},
            {"multipliers", poly_list_json(r.multipliers)},
            {"verified", r.verified}};
}

Json localization_json(const LocalizationReport& r)
{
    Json fwd = Json::array(), bwd = Json::array();
    for (const auto& m : r.forward) fwd.push_back(membership_json(m));
    for (const auto& m : r.backward) bwd.push_back(membership_json(m));
    return {{"m", r.m},
            {"n", r.n},
            {"t", r.t},
            {"N", r.N},
            {"D", r.D},
            {"y_minors", poly_list_json(r.y_minors)},
            {"forward", fwd},
            {"backward", bwd},
            {"success", r.success},
            {"failure", r.failure}};
}

Json identity_json(const IdentityReport& r)
{
    return {{"k", r.k},
            {"residual", r.residual.to_string()},
            {"summands", r.summands},
            {"max_summand_terms", r.max_summand_terms},
            {"expanded_terms", r.expanded_terms},
            {"success", r.success}};
}

Json modp_json(const ModpReport& r)
{
    Json pairs = Json::array();
    for (const auto& [i, j] : r.surviving_pairs) pairs.push_back({i, j});
    return {{"p", r.p},
            {"e", r.e},
            {"q", r.q},
            {"k", r.k},
            {"coefficients_vanish", r.coefficients_vanish},
            {"surviving_pairs", pairs},
            {"surviving_term_matches", r.surviving_term_matches},
            {"bracket_is_frobenius_power", r.bracket_is_frobenius_power},
            {"relation_vanishes", r.relation_vanishes},
            {"residual", r.residual.to_string()},
            {"success", r.success}};
}

Json certificate_json(const CertificateReport& r)
{
    Json records = Json::array();
    for (const auto& m : r.records) records.push_back(membership_json(m));
    return {{"name", r.name},
            {"ideal", poly_list_json(r.ideal)},
            {"radical_gens", poly_list_json(r.radical_gens)},
            {"identity", {{"statement", r.identity}, {"residual", r.identity_residual.to_string()}}},
            {"records", records},
            {"success", r.success}};
}

Json split_json(const SplitResult& r)
{
    Json out = {{"ok", r.ok},
                {"extension_steps", r.extension_steps},
                {"extensions", r.extensions},
                {"failure", r.failure}};
    if (r.ok) {
        out["field"] = r.embedding.target.descriptor();
        out["section"] = matrix_json(r.section);
    } else {
        out["field"] = nullptr;
        out["section"] = nullptr;
    }
    return out;
}

std::string render(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace lclab
