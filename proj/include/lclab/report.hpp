#pragma once

#include <json.hpp>

#include "lclab/certlab.hpp"
#include "lclab/ffmod.hpp"
#include "lclab/ideals.hpp"
#include "lclab/koszul.hpp"
#include "lclab/simplicial.hpp"

namespace lclab {

// Report values are integers, booleans, strings, arrays or objects; keys come out sorted.
using Json = nlohmann::json;

Json poly_list_json(const std::vector<Poly>& ps);
Json ideal_json(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens);
Json matrix_json(const Matrix& m);
Json cochain_json(const Cochain& c);
Json basis_json(const std::vector<Cochain>& basis);

Json stable_strand_json(const StableStrand& s);
/// Frobenius verdict in the common schema (ideal, p, j, s, stage_T, dim, frobenius_matrix, verdict, ...).
Json frobenius_json(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, const FrobeniusVerdict& v);
/// The same schema with verdict "undetected" and null numeric fields.
Json undetected_frobenius_json(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                               std::uint64_t p, int j, const std::string& reason);
Json torsion_json(int nvars, const std::vector<Poly>& gens_over_z, const TorsionReport& r);
Json a_invariant_json(const AInvariantResult& r);

Json invariants_json(const FamilyInvariants& f);
Json prediction_json(const VanishingPrediction& v);
Json membership_json(const MembershipRecord& r);
Json localization_json(const LocalizationReport& r);

Json identity_json(const IdentityReport& r);
Json modp_json(const ModpReport& r);
Json certificate_json(const CertificateReport& r);

Json split_json(const SplitResult& r);

/// Two-space indentation, sorted keys, trailing newline.
std::string render(const Json& j);

} // namespace lclab
