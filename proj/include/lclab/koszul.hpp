#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "lclab/dense_matrix.hpp"
#include "lclab/linstrand.hpp"

namespace lclab {

struct StabilizeOptions {
    unsigned window = 2;       // consecutive invertible transitions required
    unsigned t_min = 1;        // smallest candidate stage T
    unsigned t_max = 8;        // largest candidate stage T
    unsigned stage_cap = 128;  // largest stage ever built (Frobenius needs p*T)
};

/// Cochain in the stage complex: components e_S (S a set of 1-based variable indices) times a form.
struct CochainComponent {
    std::vector<int> subset;
    Poly form;
};
using Cochain = std::vector<CochainComponent>;

/// Koszul cochain complexes on (x_1^t, ..., x_n^t) with coefficients in R/I, by degree strand.
///
/// Degree-s strand at stage t: K^{j'} = sum over |S| = j' of [R/I]_{s + t j'}, the components
/// ordered by the bitmask of S. The differential sends e_S (x) u to
/// sum over i not in S of (-1)^{#{l in S : l < i}} e_{S + i} (x) x_i^t u.
template <class K>
class KoszulEngine {
public:
    using Elem = typename K::Elem;

    struct Cohomology {
        int j = 0, s = 0;
        unsigned t = 0;
        std::size_t block = 0;      // dim [R/I]_{s + t j}
        std::size_t cochain_dim = 0;
        Echelon<K> image;           // im d^{j-1}, reduced echelon
        Echelon<K> reps;            // canonical representatives of H^j, reduced mod the image
        std::size_t dim() const { return reps.rank(); }
    };

    struct Dense {
        std::size_t rows = 0, cols = 0;
        std::vector<std::vector<Elem>> data;   // data[row][col]
    };

    KoszulEngine(K field, int nvars, const std::vector<Poly>& gens, std::size_t cap = strand_cap());

    const K& field() const { return quotient_.field(); }
    int nvars() const { return n_; }
    GradedQuotient<K>& quotient() { return quotient_; }

    std::size_t cochain_dim(int jp, int s, unsigned t);
    /// Images of the basis vectors of K^{jp} in K^{jp+1}.
    std::vector<SparseVec<Elem>> differential(int jp, int s, unsigned t);
    const Cohomology& cohomology(int j, int s, unsigned t);
    /// Coordinates of a cocycle in the canonical basis of H^j.
    std::vector<Elem> coordinates(const Cohomology& h, const SparseVec<Elem>& z) const;
    /// Induced by multiplying the component e_S by x_S^{t2 - t1}.
    Dense transition(int j, int s, unsigned t1, unsigned t2);
    bool is_invertible(const Dense& m) const;
    /// True when d^{jp+1} o d^{jp} vanishes on every basis vector.
    bool check_dd_zero(int jp, int s, unsigned t);
    Cochain to_cochain(int j, int s, unsigned t, const SparseVec<Elem>& v);

    std::size_t subset_position(unsigned mask) const { return position_[mask]; }
    const std::vector<unsigned>& subsets(int size) const { return by_size_[static_cast<std::size_t>(size)]; }

private:
    int piece_degree(int jp, int s, unsigned t) const { return s + static_cast<int>(t) * jp; }

    int n_;
    GradedQuotient<K> quotient_;
    std::vector<std::vector<unsigned>> by_size_;
    std::vector<std::size_t> position_;
    std::map<std::tuple<int, int, unsigned>, std::unique_ptr<Cohomology>> cache_;
};

extern template class KoszulEngine<PrimeField>;
extern template class KoszulEngine<RationalField>;

struct StableStrand {
    int j = 0, s = 0;
    unsigned stage = 0;                          // T
    std::size_t dim = 0;
    std::vector<std::size_t> transition_dims;    // dims at stages T, ..., T + window
    std::vector<Cochain> basis;                  // representatives at stage T
    bool heuristic = true;                       // stabilization detected by the window test
};

/// Least T <= t_max whose next `window` transitions are isomorphisms; throws VerdictWithheld otherwise.
template <class K>
StableStrand stabilize(KoszulEngine<K>& engine, int j, int s, const StabilizeOptions& opts = {});

struct StrandCohomology {
    int j = 0, s = 0;
    unsigned t = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> cochain_dims;   // K^{j-1}, K^j, K^{j+1}
    std::vector<Cochain> basis;
};

StrandCohomology strand_cohomology(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, int j, int s,
                                   unsigned t);
/// Transition matrix H^j(stage t1)_s -> H^j(stage t2)_s, entries as exact rationals.
std::vector<std::vector<mpq_class>> transition(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                                               int j, int s, unsigned t1, unsigned t2);
StableStrand stabilize(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, int j, int s,
                       const StabilizeOptions& opts = {});

struct FrobeniusVerdict {
    std::uint64_t p = 0;
    int j = 0;
    unsigned stage = 0;       // T
    unsigned frobenius_stage = 0;   // pT
    std::size_t dim = 0;
    Matrix frobenius;         // over F_p, columns are images of the basis classes
    bool nilpotent = false;
    unsigned nilpotency_index = 0;
    std::vector<std::size_t> transition_dims;
    std::vector<Cochain> basis;

    std::string verdict() const { return nilpotent ? "nilpotent" : "non-nilpotent"; }
};

/// Frobenius on [H^j_m(R/I)]_0 for I over F_p: u_S -> u_S^p at stage pT, pulled back along T -> pT.
FrobeniusVerdict frobenius_matrix(std::uint64_t p, int nvars, const std::vector<Poly>& gens, int j,
                                  const StabilizeOptions& opts = {});
template <class K>
FrobeniusVerdict frobenius_matrix(KoszulEngine<K>& engine, int j, const StabilizeOptions& opts);

struct TorsionReport {
    std::uint64_t p = 0;
    int k = 0;
    int j = 0;
    std::vector<Poly> reduced_ideal;
    FrobeniusVerdict frobenius;
    std::string verdict;      // "NILPOTENT" or "NON-NILPOTENT"
    std::string conclusion;
    std::string unchecked_hypothesis;
};

/// Reduces an integer ideal mod p and decides nilpotency on [H^{n-k}_m]_0.
TorsionReport torsion_obstruction(int nvars, const std::vector<Poly>& gens_over_z, std::uint64_t p, int k,
                                  const StabilizeOptions& opts = {});

enum class AInvariantMethod { Strand, Hilbert };

struct AInvariantResult {
    int a = 0;
    AInvariantMethod method = AInvariantMethod::Hilbert;
    int krull_dim = 0;
    std::vector<std::int64_t> numerator;
    bool cm_asserted = false;
    int scan_top = 0;                // strand method: first degree examined
    std::vector<std::pair<int, std::size_t>> scanned;   // (s, dim) pairs, strand method
};

AInvariantResult a_invariant(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                             AInvariantMethod method, bool cm_asserted = false, const StabilizeOptions& opts = {});

} // namespace lclab
