#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lclab/exactarith.hpp"

namespace lclab {

/// Exact scalars for polynomial coefficients: Z, Q or F_p.
struct CoefficientRing {
    enum class Kind { Integers, Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static CoefficientRing integers() { return {Kind::Integers, 0}; }
    static CoefficientRing rationals() { return {Kind::Rationals, 0}; }
    static CoefficientRing prime_field(std::uint64_t p);
    /// char=0 gives Z, char=p gives F_p.
    static CoefficientRing from_characteristic(std::uint64_t c);

    std::uint64_t characteristic() const { return p; }
    bool is_field() const { return kind != Kind::Integers; }
    /// Brings a value to canonical form; throws if it is not in the ring.
    mpq_class normalize(const mpq_class& c) const;
    std::string descriptor() const;

    bool operator==(const CoefficientRing&) const = default;
};

using Exponent = std::vector<int>;

/// Graded-lex order, largest first: higher total degree, then lexicographically larger.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int exponent_degree(const Exponent& e);

class Poly {
public:
    using TermMap = std::map<Exponent, mpq_class, GrlexGreater>;

    Poly() = default;
    Poly(CoefficientRing ring, int nvars) : ring_(ring), nvars_(nvars) {}

    static Poly constant(CoefficientRing ring, int nvars, const mpq_class& c);
    /// x_i, 1-based.
    static Poly variable(CoefficientRing ring, int nvars, int i);
    static Poly monomial(CoefficientRing ring, int nvars, Exponent e, const mpq_class& c = 1);
    /// Parses `3*x1^2*x2 - x3`; exponents may be negative (`x1^-2`).
    static Poly parse(const std::string& text, CoefficientRing ring, int nvars);

    const CoefficientRing& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^e in place.
    void add_term(const Exponent& e, const mpq_class& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly scale(const mpq_class& c) const;
    Poly pow(std::uint64_t e) const;
    /// Multiply by the monomial x^e.
    Poly shift(const Exponent& e) const;
    /// x_i -> images[i-1]; all images share one ring and variable count.
    Poly substitute(const std::vector<Poly>& images) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Largest total degree of a term; 0 for the zero polynomial.
    int degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    bool has_negative_exponents() const;
    const Exponent& leading_exponent() const;
    const mpq_class& leading_coefficient() const;

    /// Same polynomial read in another coefficient ring (reduction mod p, or Z into Q).
    Poly change_ring(CoefficientRing target) const;
    /// Same polynomial in more variables (extra variables unused).
    Poly widen(int nvars) const;

    std::string to_string() const;

private:
    void require_compatible(const Poly& o) const;

    CoefficientRing ring_{};
    int nvars_ = 0;
    TermMap terms_;
};

/// Divided-power derivative (1/t!) d^t/dx_i^t acting termwise by C(a_i, t) x_i^{a_i - t}.
Poly apply_divided_power(int i, unsigned t, const Poly& g);

/// E_k = sum over t_1 + ... + t_n = k of x^t d^[t], expanded literally.
Poly euler_apply(unsigned k, const Poly& g);

/// Elementwise q-th powers; in characteristic p, q must be a power of p.
std::vector<Poly> bracket_power(const std::vector<Poly>& gens, std::uint64_t q);

} // namespace lclab
