#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "lclab/poly.hpp"
#include "lclab/scalar_field.hpp"
#include "lclab/sparse.hpp"

namespace lclab {

/// Number of monomials of degree d in n variables (0 for d < 0).
mpz_class monomial_count(int n, int d);

/// Default cap on monomials per graded piece; LCLAB_STAGE_CAP overrides it.
std::size_t strand_cap();

/// Positions of degree-d monomials in descending graded-lex order (x1^d first).
class MonomialIndex {
public:
    explicit MonomialIndex(int nvars) : n_(nvars) {}

    int nvars() const { return n_; }
    std::uint64_t rank(const Exponent& e) const;
    std::vector<Exponent> enumerate(int d) const;

private:
    int n_;
};

/// One graded piece [R/I]_d: the reduced basis of [I]_d and the standard monomials.
template <class K>
struct QuotientPiece {
    int degree = 0;
    std::size_t ambient_dim = 0;
    Echelon<K> ideal;
    std::vector<Exponent> basis;        // standard monomials, in column order
    std::vector<std::int32_t> std_index; // column -> basis position, or -1
};

/// R/I for homogeneous I over a field, built lazily degree by degree.
template <class K>
class GradedQuotient {
public:
    using Elem = typename K::Elem;

    GradedQuotient(K field, int nvars, const std::vector<Poly>& gens, std::size_t cap = strand_cap());

    const K& field() const { return k_; }
    int nvars() const { return n_; }
    const MonomialIndex& index() const { return index_; }

    const QuotientPiece<K>& piece(int d);
    std::size_t dim(int d);
    std::size_t ideal_dim(int d);

    /// acc += c * NF(x^e) in the basis of degree |e|; acc is left unsorted.
    void add_monomial(const Exponent& e, const Elem& c, SparseVec<Elem>& acc);
    /// Normal form of a homogeneous polynomial, canonical sparse vector.
    SparseVec<Elem> normal_form(const Poly& g);

private:
    K k_;
    int n_;
    std::size_t cap_;
    MonomialIndex index_;
    std::vector<int> gen_degree_;
    std::vector<std::vector<std::pair<Exponent, Elem>>> gen_terms_;
    std::map<int, std::unique_ptr<QuotientPiece<K>>> cache_;
};

extern template class GradedQuotient<PrimeField>;
extern template class GradedQuotient<RationalField>;

/// Summary of one graded piece in ring-independent form.
struct StrandSpace {
    int degree = 0;
    std::uint64_t ambient_dim = 0;
    std::uint64_t ideal_dim = 0;
    std::uint64_t quotient_dim = 0;
    std::vector<Exponent> quotient_basis;
    std::vector<Poly> ideal_basis;   // reduced row echelon basis of [I]_d
};

/// A linear map between quotient pieces, columns indexed by the source basis.
struct StrandMap {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVec<mpq_class>> columns;
};

/// Integers are treated as rationals; fields are used as given.
CoefficientRing strand_field(const CoefficientRing& r);

StrandSpace ideal_piece(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, int d);
StrandMap mult_matrix(const Poly& g, const std::vector<Poly>& gens, int d);
std::vector<std::uint64_t> hilbert_function(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                                            int d_max);
/// Numerator Q of the Hilbert series Q(s)/(1-s)^n, trailing zeros removed.
std::vector<std::int64_t> hilbert_numerator(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                                            int cutoff);
/// n minus the multiplicity of s = 1 as a root of Q.
int krull_dimension(const std::vector<std::int64_t>& numerator, int nvars);

struct MembershipCertificate {
    std::vector<Poly> multipliers;   // h = sum q_i g_i over the solving field
    int bound = 0;
    bool homogeneous = false;        // solved in the single degree deg h
};

/// Searches q_i with deg q_i <= D - deg g_i and h = sum q_i g_i. Integer inputs are solved over Q.
/// The returned certificate has been re-verified by polynomial arithmetic.
std::optional<MembershipCertificate> membership_solve(const Poly& h, const std::vector<Poly>& gens, int D);

} // namespace lclab
