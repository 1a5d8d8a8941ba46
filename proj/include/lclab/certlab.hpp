#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lclab/ideals.hpp"

namespace lclab {

/// Variables of the generic 2 x 3 matrix [[u,v,w],[x,y,z]] as x1..x6 over the given ring.
struct TwoByThree {
    Poly u, v, w, x, y, z;
    Poly d1, d2, d3;   // vz - wy, wx - uz, uy - vx

    explicit TwoByThree(const CoefficientRing& ring);
};

struct IdentityReport {
    unsigned k = 0;
    Poly residual;
    std::size_t summands = 0;         // (i, j) pairs with i + j <= k
    std::size_t max_summand_terms = 0;
    std::size_t expanded_terms = 0;   // total terms over all summands before cancellation
    bool success = false;
};

/// Expands the three-fold cyclic binomial sum over Z; success iff it is the zero polynomial.
IdentityReport verify_2x3_identity(unsigned k);

struct ModpReport {
    std::uint64_t p = 0;
    unsigned e = 0;
    std::uint64_t q = 0;              // p^e
    unsigned k = 0;                   // q - 1
    // (a) every coefficient product with (i, j) != (0, 0) vanishes mod p
    bool coefficients_vanish = false;
    std::vector<std::pair<unsigned, unsigned>> surviving_pairs;
    // (b) the surviving summand equals (d1 d2 d3)^{q-1} [u^q d1^q + v^q d2^q + w^q d3^q] mod p,
    // and the bracket is the q-th power of u d1 + v d2 + w d3 = 0 mod p
    bool surviving_term_matches = false;
    bool bracket_is_frobenius_power = false;
    bool relation_vanishes = false;
    Poly residual;                    // full sum mod p
    bool success = false;
};

/// Mod-p degeneration of the identity at k = p^e - 1; p^e must not exceed 9.
ModpReport verify_2x3_modp_reduction(std::uint64_t p, unsigned e);

struct CertificateReport {
    std::string name;
    std::vector<Poly> ideal;          // generators of the ideal a
    std::vector<Poly> radical_gens;   // generators of the smaller ideal
    std::string identity;             // displayed exact identity, when there is one
    Poly identity_residual;
    std::vector<MembershipRecord> records;
    bool success = false;
};

/// a = (vx, wx, vz - wy) in Q[v,w,x,y,z] (x1..x5) as the radical of (f, g).
CertificateReport barile_certificate(int D = 10);
/// a = 2-minors of [[u,v,w],[v,x,y]] in Q[u,v,w,x,y] (x1..x5) as the radical of (v^2 - ux, det).
CertificateReport valla_certificate(int D = 6);

} // namespace lclab
