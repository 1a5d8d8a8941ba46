#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lclab/exactarith.hpp"

namespace lclab {

/// Finite field F_{p^k} = F_p[a]/(modulus).
///
/// Elements are encoded as integers in [0, p^k): the code of
/// c_0 + c_1 a + ... + c_{k-1} a^{k-1} is c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
/// Ordering elements by code is the lexicographic order on coordinate
/// vectors with the top coordinate most significant.
class GaloisField {
public:
    using Elem = std::uint64_t;

    static constexpr unsigned max_degree = 12;

    GaloisField() : GaloisField(2) {}
    explicit GaloisField(std::uint64_t p);
    /// Monic modulus, coefficients low to high (size k + 1); checked irreducible.
    GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus);

    /// Deterministic search: the irreducible of least code among monic degree-k candidates.
    static GaloisField extension(std::uint64_t p, unsigned k);
    /// Parses `GF(p)`, `GF(p^k)` or `GF(p^k; modulus=<poly in a>)`.
    static GaloisField parse(const std::string& text);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    bool is_prime_field() const { return k_ == 1; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// The class of `a`; equals 0 in a prime field with no generator.
    Elem generator() const { return k_ > 1 ? p_ : 0; }
    Elem from_int(std::int64_t v) const;
    Elem from_digits(const std::vector<std::uint64_t>& c) const;
    std::vector<std::uint64_t> digits(Elem x) const;

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;
    Elem pow(Elem x, std::uint64_t e) const;
    /// x^p
    Elem frob(Elem x) const { return pow(x, p_); }
    /// inverse of x -> x^p
    Elem frob_inv(Elem x) const;
    bool is_zero(Elem x) const { return x == 0; }

    std::string format(Elem x) const;
    Elem parse_elem(const std::string& text) const;
    /// `GF(p)` or `GF(p^k; modulus=...)`.
    std::string descriptor() const;

    bool operator==(const GaloisField& o) const { return p_ == o.p_ && mod_ == o.mod_; }
    bool operator!=(const GaloisField& o) const { return !(*this == o); }

private:
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> mod_;
};

/// True iff the monic polynomial (coefficients low to high) is irreducible
/// over F_p, by trial division by all monic polynomials up to half its degree.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p);

/// Field inclusion determined by the image of the source generator.
struct FieldEmbedding {
    GaloisField source;
    GaloisField target;
    GaloisField::Elem generator_image = 0;

    GaloisField::Elem operator()(GaloisField::Elem x) const;
    static FieldEmbedding identity(const GaloisField& f) { return {f, f, f.generator()}; }
    /// Finds an embedding by searching the target for a root of the source modulus.
    static FieldEmbedding find(const GaloisField& source, const GaloisField& target);
    FieldEmbedding then(const FieldEmbedding& next) const;
};

/// Least root t of t^p - t + c = 0 in F, or none.
std::optional<GaloisField::Elem> artin_schreier_solve(const GaloisField& field, GaloisField::Elem c);

struct ArtinSchreierExtension {
    FieldEmbedding embedding;     // F -> F'
    GaloisField::Elem root = 0;   // t in F' with t^p - t + c = 0
};

/// The degree-p extension of F generated by a root of T^p - T + c.
/// Throws InvalidInput when c already has a root in F.
ArtinSchreierExtension extend_by_artin_schreier(const GaloisField& field, GaloisField::Elem c);

} // namespace lclab
