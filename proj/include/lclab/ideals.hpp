#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lclab/poly.hpp"
#include "lclab/simplicial.hpp"

namespace lclab {

/// Generic m x n matrix: x_{ij} is variable (i-1)n + j.
int generic_variable(int n, int i, int j);
/// Alternating n x n matrix: x_{ij} (i < j) numbered row by row over the strict upper triangle.
int alternating_variable(int n, int i, int j);
/// Symmetric n x n matrix: x_{ij} (i <= j) numbered row by row over the upper triangle.
int symmetric_variable(int n, int i, int j);

/// Determinant by Laplace expansion along the first row.
Poly determinant(const std::vector<std::vector<Poly>>& a);
/// Pfaffian of an alternating matrix: pf(A) = sum_j (-1)^j a_{1j} pf(A without rows/columns 1, j).
Poly pfaffian(const std::vector<std::vector<Poly>>& a);

std::vector<std::vector<Poly>> generic_matrix(int m, int n, const CoefficientRing& ring);
std::vector<std::vector<Poly>> alternating_matrix(int n, const CoefficientRing& ring);
std::vector<std::vector<Poly>> symmetric_matrix(int n, const CoefficientRing& ring);

/// All t x t minors of a matrix, row subsets outer and column subsets inner, both in lex order.
std::vector<Poly> minors(const std::vector<std::vector<Poly>>& a, int t);

std::vector<Poly> minors_ideal(int m, int n, int t, const CoefficientRing& ring);
std::vector<Poly> pfaffians_ideal(int n, int t, const CoefficientRing& ring);
std::vector<Poly> symmetric_minors_ideal(int n, int t, const CoefficientRing& ring);
std::vector<Poly> stanley_reisner(int n, const std::vector<Face>& nonfaces, const CoefficientRing& ring);
/// X_1^t...X_d^t - sum Y_i X_i^{t+1} over Z with X_i = x_i and Y_i = x_{d+i}.
Poly hypersurface_Bdt(int d, int t);

enum class Family { Generic, Alternating, Symmetric, StanleyReisner, HypersurfaceBdt };

struct IdealFamilySpec {
    Family family = Family::Generic;
    int m = 0, n = 0, t = 0, d = 0;
    std::vector<Face> nonfaces;

    /// `generic m=2 n=3 t=2`, `alternating n=6 t=4`, `symmetric n=4 t=3`,
    /// `sr n=6 nonfaces=[123,124]` (or nonfaces=RP2), `bdt d=3 t=2`.
    static IdealFamilySpec parse(const std::string& text);
    std::string to_string() const;
    std::string tag() const;
    int nvars() const;
    std::vector<Poly> generators(const CoefficientRing& ring) const;
};

/// The minimal nonfaces of the six-vertex triangulation of the real projective plane.
const std::vector<Face>& rp2_nonfaces();

struct FamilyInvariants {
    std::int64_t height = 0;
    std::int64_t ara = 0;
    std::int64_t critical_index = 0;
};
/// Closed forms for the generic, alternating and symmetric families.
FamilyInvariants family_invariants(const IdealFamilySpec& spec, std::uint64_t characteristic);

struct VanishingPrediction {
    bool applicable = false;
    bool vanishes = false;
    std::int64_t index = 0;
    std::int64_t threshold = 0;    // vanishing is predicted when dim A < threshold
    std::string reason;
};
VanishingPrediction vanishing_predict(std::int64_t dimA, const IdealFamilySpec& spec);

/// One bounded-degree membership claim target^N in (generators) and its certificate.
struct MembershipRecord {
    std::string claim;
    Poly target;               // the element before raising to the power
    unsigned power = 1;
    std::vector<Poly> generators;
    int bound = 0;
    bool found = false;
    std::vector<Poly> multipliers;
    bool verified = false;     // re-checked by polynomial arithmetic
};

/// Smallest power N in [first, last] with target^N in (gens) within degree bound D.
MembershipRecord certify_membership(const std::string& claim, const Poly& target, const std::vector<Poly>& gens,
                                    unsigned first, unsigned last, int D);

struct LocalizationReport {
    int m = 0, n = 0, t = 0, N = 0, D = 0;
    std::vector<Poly> y_minors;                 // (t-1)-minors of Y', Y'_{ij} = x11 x_ij - x_i1 x_1j
    std::vector<MembershipRecord> forward;      // x11^N * t-minor in (y_minors)
    std::vector<MembershipRecord> backward;     // x11^N * y-minor in I_t(X)
    bool success = false;
    std::string failure;
};
LocalizationReport localization_check(int m, int n, int t, int N, int D);

} // namespace lclab
