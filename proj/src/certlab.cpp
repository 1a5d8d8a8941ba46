#include "lclab/certlab.hpp"

#include "lclab/exactarith.hpp"

namespace lclab {

namespace {

mpq_class coefficient(unsigned k, unsigned i, unsigned j)
{
    mpz_class c = big_binomial(k, i + j) * big_binomial(k + i, k) * big_binomial(k + j, k);
    return mpq_class(c);
}

// the three cyclic pieces of one (i, j) summand, without the binomial coefficient
Poly summand(const TwoByThree& m, unsigned k, unsigned i, unsigned j)
{
    Poly a = m.u.pow(k + 1) * m.d1.pow(2 * k + 1) * (-(m.w * m.x)).pow(i) * (m.v * m.x).pow(j) * m.d2.pow(k - i) *
             m.d3.pow(k - j);
    Poly b = m.v.pow(k + 1) * m.d2.pow(2 * k + 1) * (-(m.u * m.y)).pow(i) * (m.w * m.y).pow(j) * m.d3.pow(k - i) *
             m.d1.pow(k - j);
    Poly c = m.w.pow(k + 1) * m.d3.pow(2 * k + 1) * (-(m.v * m.z)).pow(i) * (m.u * m.z).pow(j) * m.d1.pow(k - i) *
             m.d2.pow(k - j);
    return a + b + c;
}

} // namespace

TwoByThree::TwoByThree(const CoefficientRing& ring)
    : u(Poly::variable(ring, 6, 1)), v(Poly::variable(ring, 6, 2)), w(Poly::variable(ring, 6, 3)),
      x(Poly::variable(ring, 6, 4)), y(Poly::variable(ring, 6, 5)), z(Poly::variable(ring, 6, 6))
{
    d1 = v * z - w * y;
    d2 = w * x - u * z;
    d3 = u * y - v * x;
}

IdentityReport verify_2x3_identity(unsigned k)
{
    if (k > 12) throw VerdictWithheld("identity expansion is capped at k = 12");
    TwoByThree m(CoefficientRing::integers());
    IdentityReport rep;
    rep.k = k;
    rep.residual = Poly(CoefficientRing::integers(), 6);
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = 0; i + j <= k; ++j) {
            Poly s = summand(m, k, i, j);
            ++rep.summands;
            rep.max_summand_terms = std::max(rep.max_summand_terms, s.size());
            rep.expanded_terms += s.size();
            rep.residual += s.scale(coefficient(k, i, j));
        }
    rep.success = rep.residual.is_zero();
    return rep;
}

ModpReport verify_2x3_modp_reduction(std::uint64_t p, unsigned e)
{
    require_prime(p, "mod-p reduction");
    if (e < 1) throw InvalidInput("the exponent e must be at least 1");
    ModpReport rep;
    rep.p = p;
    rep.e = e;
    std::uint64_t q = 1;
    for (unsigned r = 0; r < e; ++r) {
        q *= p;
        if (q > 9) throw VerdictWithheld("p^e above the size cap 9");
    }
    rep.q = q;
    const auto k = static_cast<unsigned>(q - 1);
    rep.k = k;

    rep.coefficients_vanish = true;
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = 0; i + j <= k; ++j) {
            std::uint64_t c = binom_mod_p(k, i + j, p) * binom_mod_p(k + i, k, p) % p * binom_mod_p(k + j, k, p) % p;
            if (c != 0) {
                rep.surviving_pairs.emplace_back(i, j);
                if (i != 0 || j != 0) rep.coefficients_vanish = false;
            }
        }

    const auto fp = CoefficientRing::prime_field(p);
    TwoByThree m(fp);
    Poly surviving = summand(m, k, 0, 0);
    Poly bracket = m.u.pow(q) * m.d1.pow(q) + m.v.pow(q) * m.d2.pow(q) + m.w.pow(q) * m.d3.pow(q);
    Poly shape = (m.d1 * m.d2 * m.d3).pow(q - 1) * bracket;
    rep.surviving_term_matches = surviving == shape;
    Poly base = m.u * m.d1 + m.v * m.d2 + m.w * m.d3;
    rep.bracket_is_frobenius_power = base.pow(q) == bracket;
    rep.relation_vanishes = base.is_zero() && bracket.is_zero();

    rep.residual = Poly(fp, 6);
    for (unsigned i = 0; i <= k; ++i)
        for (unsigned j = 0; i + j <= k; ++j) rep.residual += summand(m, k, i, j).scale(coefficient(k, i, j));
    rep.success = rep.coefficients_vanish && rep.surviving_term_matches && rep.bracket_is_frobenius_power &&
                  rep.relation_vanishes && rep.residual.is_zero();
    return rep;
}

CertificateReport barile_certificate(int D)
{
    if (D < 4) throw InvalidInput("the Barile certificate needs a degree bound of at least 4");
    const auto qq = CoefficientRing::rationals();
    auto var = [&](int i) { return Poly::variable(qq, 5, i); };
    Poly v = var(1), w = var(2), x = var(3), y = var(4), z = var(5);
    Poly delta = v * z - w * y;
    Poly f = w * x.pow(2) + z * delta;
    Poly g = v * x.pow(2) + y * delta;
    CertificateReport rep;
    rep.name = "barile";
    rep.ideal = {v * x, w * x, delta};
    rep.radical_gens = {f, g};
    rep.identity = "v*f - w*g - (v*z - w*y)^2";
    rep.identity_residual = v * f - w * g - delta.pow(2);
    rep.records.push_back(certify_membership("f in a", f, rep.ideal, 1, 1, D));
    rep.records.push_back(certify_membership("g in a", g, rep.ideal, 1, 1, D));
    rep.records.push_back(certify_membership("(v*x)^N in (f, g)", v * x, rep.radical_gens, 1, 4, D));
    rep.records.push_back(certify_membership("(w*x)^N in (f, g)", w * x, rep.radical_gens, 1, 4, D));
    rep.records.push_back(certify_membership("(v*z - w*y)^N in (f, g)", delta, rep.radical_gens, 1, 4, D));
    rep.success = rep.identity_residual.is_zero();
    for (const auto& r : rep.records) rep.success = rep.success && r.found && r.verified;
    return rep;
}

CertificateReport valla_certificate(int D)
{
    if (D < 6) throw InvalidInput("the Valla certificate needs a degree bound of at least 6");
    const auto qq = CoefficientRing::rationals();
    auto var = [&](int i) { return Poly::variable(qq, 5, i); };
    Poly u = var(1), v = var(2), w = var(3), x = var(4), y = var(5);
    Poly zero(qq, 5);
    CertificateReport rep;
    rep.name = "valla";
    rep.ideal = minors({{u, v, w}, {v, x, y}}, 2);
    Poly g1 = v.pow(2) - u * x;
    Poly g2 = determinant({{u, v, w}, {v, x, y}, {w, y, zero}});
    rep.radical_gens = {g1, g2};
    rep.identity = "det[[u,v,w],[v,x,y],[w,y,0]] + u*y^2 - 2*v*w*y + x*w^2";
    rep.identity_residual = g2 + u * y.pow(2) - (v * w * y).scale(2) + x * w.pow(2);
    rep.records.push_back(certify_membership("v^2 - u*x in a", g1, rep.ideal, 1, 1, D));
    rep.records.push_back(certify_membership("det in a", g2, rep.ideal, 1, 1, D));
    for (std::size_t i = 0; i < rep.ideal.size(); ++i)
        rep.records.push_back(certify_membership("(" + rep.ideal[i].to_string() + ")^N in (g1, g2)", rep.ideal[i],
                                                 rep.radical_gens, 1, 3, D));
    rep.success = rep.identity_residual.is_zero();
    for (const auto& r : rep.records) rep.success = rep.success && r.found && r.verified;
    return rep;
}

} // namespace lclab
