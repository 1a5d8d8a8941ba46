#include "lclab/koszul.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <type_traits>

#include "lclab/ffmod.hpp"

namespace lclab {

namespace {

CoefficientRing ring_of(const PrimeField& k) { return CoefficientRing::prime_field(k.p); }
CoefficientRing ring_of(const RationalField&) { return CoefficientRing::rationals(); }

std::vector<int> subset_indices(unsigned mask)
{
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

template <class F>
auto with_field(const CoefficientRing& ring, F&& f)
{
    if (ring.kind == CoefficientRing::Kind::PrimeField) return f(PrimeField(ring.p));
    return f(RationalField{});
}

std::vector<Poly> to_ring(const std::vector<Poly>& gens, const CoefficientRing& r)
{
    std::vector<Poly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.change_ring(r));
    return out;
}

} // namespace

template <class K>
KoszulEngine<K>::KoszulEngine(K field, int nvars, const std::vector<Poly>& gens, std::size_t cap)
    : n_(nvars), quotient_(std::move(field), nvars, gens, cap)
{
    if (nvars < 1 || nvars > 20) throw InvalidInput("Koszul complexes need between 1 and 20 variables");
    by_size_.assign(static_cast<std::size_t>(n_) + 1, {});
    position_.assign(std::size_t(1) << n_, 0);
    for (unsigned mask = 0; mask < (1u << n_); ++mask) {
        auto& bucket = by_size_[static_cast<std::size_t>(std::popcount(mask))];
        position_[mask] = bucket.size();
        bucket.push_back(mask);
    }
}

template <class K>
std::size_t KoszulEngine<K>::cochain_dim(int jp, int s, unsigned t)
{
    if (jp < 0 || jp > n_) return 0;
    return subsets(jp).size() * quotient_.dim(piece_degree(jp, s, t));
}

template <class K>
std::vector<SparseVec<typename K::Elem>> KoszulEngine<K>::differential(int jp, int s, unsigned t)
{
    std::vector<SparseVec<Elem>> out;
    if (jp < 0 || jp > n_) return out;
    const int d0 = piece_degree(jp, s, t);
    const std::size_t D0 = quotient_.dim(d0);
    if (D0 == 0) return out;
    out.resize(subsets(jp).size() * D0);
    if (jp == n_) return out;
    const int d1 = piece_degree(jp + 1, s, t);
    const std::size_t D1 = quotient_.dim(d1);
    if (D1 == 0) return out;
    const auto& basis0 = quotient_.piece(d0).basis;
    const auto& k = field();
    SparseVec<Elem> tmp;
    Exponent e;
    for (std::size_t a = 0; a < subsets(jp).size(); ++a) {
        unsigned S = subsets(jp)[a];
        for (std::size_t b = 0; b < D0; ++b) {
            auto& col = out[a * D0 + b];
            for (int i = 0; i < n_; ++i) {
                if (S >> i & 1u) continue;
                bool negative = std::popcount(S & ((1u << i) - 1u)) % 2 == 1;
                e = basis0[b];
                e[static_cast<std::size_t>(i)] += static_cast<int>(t);
                tmp.clear();
                quotient_.add_monomial(e, negative ? k.neg(k.one()) : k.one(), tmp);
                auto off = static_cast<std::uint32_t>(subset_position(S | (1u << i)) * D1);
                for (auto& [c, x] : tmp) col.emplace_back(c + off, std::move(x));
            }
            canonicalize(k, col);
        }
    }
    return out;
}

template <class K>
const typename KoszulEngine<K>::Cohomology& KoszulEngine<K>::cohomology(int j, int s, unsigned t)
{
    if (t == 0) throw InvalidInput("stage must be positive");
    if (j < 0 || j > n_) throw InvalidInput("cohomological index outside 0.." + std::to_string(n_));
    auto key = std::make_tuple(j, s, t);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;

    const auto& k = field();
    auto h = std::make_unique<Cohomology>();
    h->j = j;
    h->s = s;
    h->t = t;
    h->block = quotient_.dim(piece_degree(j, s, t));
    h->cochain_dim = subsets(j).size() * h->block;
    h->image = Echelon<K>(k, h->cochain_dim);
    h->reps = Echelon<K>(k, h->cochain_dim);
    if (h->cochain_dim > 0) {
        for (const auto& col : differential(j - 1, s, t)) h->image.insert(col);
        h->image.finalize();
        auto out = differential(j, s, t);
        std::size_t rank_out = 0;
        std::vector<SparseVec<Elem>> rows(cochain_dim(j + 1, s, t));
        {
            Echelon<K> r(k, h->cochain_dim);
            // rank of d^j from the transposed rows
            for (std::size_t c = 0; c < out.size(); ++c)
                for (const auto& [row, x] : out[c]) rows[row].emplace_back(static_cast<std::uint32_t>(c), x);
            for (const auto& row : rows) r.insert(row);
            rank_out = r.rank();
        }
        if (h->cochain_dim > rank_out + h->image.rank()) {
            for (const auto& z : kernel_basis(k, h->cochain_dim, rows)) {
                auto red = h->image.reduce(z);
                if (!red.empty()) h->reps.insert(red);
            }
            h->reps.finalize();
        }
        if (h->reps.rank() + rank_out + h->image.rank() != h->cochain_dim)
            throw std::logic_error("Koszul cohomology dimension count is inconsistent");
    }
    auto& ref = *h;
    cache_.emplace(key, std::move(h));
    return ref;
}

template <class K>
std::vector<typename K::Elem> KoszulEngine<K>::coordinates(const Cohomology& h, const SparseVec<Elem>& z) const
{
    auto r = h.image.reduce(z);
    std::vector<Elem> out(h.dim(), field().zero());
    std::size_t pos = 0;
    const auto& rows = h.reps.rows();
    for (const auto& [c, x] : r) {
        while (pos < rows.size() && h.reps.pivot_of_row(pos) < c) ++pos;
        if (pos < rows.size() && h.reps.pivot_of_row(pos) == c) out[pos] = x;
    }
    if (!h.reps.reduce(r).empty()) throw std::logic_error("vector is not a cocycle of the stage complex");
    return out;
}

template <class K>
typename KoszulEngine<K>::Dense KoszulEngine<K>::transition(int j, int s, unsigned t1, unsigned t2)
{
    if (t2 < t1) throw InvalidInput("transition needs t2 >= t1");
    const auto& h1 = cohomology(j, s, t1);
    const auto& h2 = cohomology(j, s, t2);
    const auto& k = field();
    Dense m;
    m.rows = h2.dim();
    m.cols = h1.dim();
    m.data.assign(m.rows, std::vector<Elem>(m.cols, k.zero()));
    if (m.cols == 0) return m;
    const auto& basis1 = quotient_.piece(piece_degree(j, s, t1)).basis;
    const int delta = static_cast<int>(t2 - t1);
    SparseVec<Elem> z, tmp;
    Exponent e;
    for (std::size_t c = 0; c < m.cols; ++c) {
        z.clear();
        for (const auto& [idx, x] : h1.reps.rows()[c]) {
            std::size_t a = idx / h1.block, b = idx % h1.block;
            unsigned S = subsets(j)[a];
            e = basis1[b];
            for (int i = 0; i < n_; ++i)
                if (S >> i & 1u) e[static_cast<std::size_t>(i)] += delta;
            tmp.clear();
            quotient_.add_monomial(e, x, tmp);
            auto off = static_cast<std::uint32_t>(a * h2.block);
            for (auto& [cc, y] : tmp) z.emplace_back(cc + off, std::move(y));
        }
        canonicalize(k, z);
        auto coord = coordinates(h2, z);
        for (std::size_t r = 0; r < m.rows; ++r) m.data[r][c] = coord[r];
    }
    return m;
}

template <class K>
bool KoszulEngine<K>::is_invertible(const Dense& m) const
{
    if (m.rows != m.cols) return false;
    Echelon<K> e(field(), m.cols);
    for (const auto& row : m.data) {
        SparseVec<Elem> v;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!field().is_zero(row[c])) v.emplace_back(static_cast<std::uint32_t>(c), row[c]);
        e.insert(v);
    }
    return e.rank() == m.rows;
}

template <class K>
bool KoszulEngine<K>::check_dd_zero(int jp, int s, unsigned t)
{
    auto first = differential(jp, s, t);
    auto second = differential(jp + 1, s, t);
    const auto& k = field();
    for (const auto& col : first) {
        SparseVec<Elem> acc;
        for (const auto& [r, x] : col)
            for (const auto& [rr, y] : second[r]) acc.emplace_back(rr, k.mul(x, y));
        canonicalize(k, acc);
        if (!acc.empty()) return false;
    }
    return true;
}

template <class K>
Cochain KoszulEngine<K>::to_cochain(int j, int s, unsigned t, const SparseVec<Elem>& v)
{
    const int d = piece_degree(j, s, t);
    const std::size_t D = quotient_.dim(d);
    Cochain out;
    if (D == 0) return out;
    const auto& basis = quotient_.piece(d).basis;
    const auto ring = ring_of(field());
    for (const auto& [idx, x] : v) {
        std::size_t a = idx / D, b = idx % D;
        auto subset = subset_indices(subsets(j)[a]);
        if (out.empty() || out.back().subset != subset) out.push_back({subset, Poly(ring, n_)});
        out.back().form.add_term(basis[b], field().to_mpq(x));
    }
    return out;
}

template class KoszulEngine<PrimeField>;
template class KoszulEngine<RationalField>;

template <class K>
StableStrand stabilize(KoszulEngine<K>& engine, int j, int s, const StabilizeOptions& opts)
{
    if (opts.window == 0) throw InvalidInput("stabilization window must be positive");
    for (unsigned T = std::max(1u, opts.t_min); T <= opts.t_max; ++T) {
        if (T + opts.window > opts.stage_cap)
            throw VerdictWithheld("stage " + std::to_string(T + opts.window) + " exceeds the stage cap");
        std::vector<std::size_t> dims;
        for (unsigned t = T; t <= T + opts.window; ++t) dims.push_back(engine.cohomology(j, s, t).dim());
        if (std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) != dims.end()) continue;
        bool ok = true;
        for (unsigned t = T; t < T + opts.window && ok; ++t) ok = engine.is_invertible(engine.transition(j, s, t, t + 1));
        if (!ok) continue;
        StableStrand st;
        st.j = j;
        st.s = s;
        st.stage = T;
        st.dim = dims.front();
        st.transition_dims = dims;
        for (const auto& row : engine.cohomology(j, s, T).reps.rows()) st.basis.push_back(engine.to_cochain(j, s, T, row));
        return st;
    }
    throw VerdictWithheld("stabilization not detected within t_max = " + std::to_string(opts.t_max));
}

template StableStrand stabilize(KoszulEngine<PrimeField>&, int, int, const StabilizeOptions&);
template StableStrand stabilize(KoszulEngine<RationalField>&, int, int, const StabilizeOptions&);

StrandCohomology strand_cohomology(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, int j, int s,
                                   unsigned t)
{
    const auto fr = strand_field(ring);
    return with_field(fr, [&](auto k) {
        KoszulEngine<decltype(k)> eng(k, nvars, to_ring(gens, fr));
        const auto& h = eng.cohomology(j, s, t);
        StrandCohomology out;
        out.j = j;
        out.s = s;
        out.t = t;
        out.dim = h.dim();
        out.cochain_dims = {eng.cochain_dim(j - 1, s, t), eng.cochain_dim(j, s, t), eng.cochain_dim(j + 1, s, t)};
        for (const auto& row : h.reps.rows()) out.basis.push_back(eng.to_cochain(j, s, t, row));
        return out;
    });
}

std::vector<std::vector<mpq_class>> transition(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                                               int j, int s, unsigned t1, unsigned t2)
{
    const auto fr = strand_field(ring);
    return with_field(fr, [&](auto k) {
        KoszulEngine<decltype(k)> eng(k, nvars, to_ring(gens, fr));
        auto m = eng.transition(j, s, t1, t2);
        std::vector<std::vector<mpq_class>> out(m.rows, std::vector<mpq_class>(m.cols));
        for (std::size_t r = 0; r < m.rows; ++r)
            for (std::size_t c = 0; c < m.cols; ++c) out[r][c] = k.to_mpq(m.data[r][c]);
        return out;
    });
}

StableStrand stabilize(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, int j, int s,
                       const StabilizeOptions& opts)
{
    const auto fr = strand_field(ring);
    return with_field(fr, [&](auto k) {
        KoszulEngine<decltype(k)> eng(k, nvars, to_ring(gens, fr));
        return stabilize(eng, j, s, opts);
    });
}

template <class K>
FrobeniusVerdict frobenius_matrix(KoszulEngine<K>& engine, int j, const StabilizeOptions& opts)
{
    if constexpr (!std::is_same_v<K, PrimeField>) {
        throw InvalidInput("the Frobenius matrix needs a prime field of coefficients");
    } else {
        const auto& k = engine.field();
        const std::uint64_t p = k.p;
        auto st = stabilize(engine, j, 0, opts);
        FrobeniusVerdict v;
        v.p = p;
        v.j = j;
        v.stage = st.stage;
        v.dim = st.dim;
        v.transition_dims = st.transition_dims;
        v.basis = st.basis;
        v.frobenius = Matrix(st.dim, st.dim);
        if (st.dim == 0) {
            v.nilpotent = true;
            return v;
        }
        const std::uint64_t pT = p * st.stage;
        if (pT > opts.stage_cap)
            throw VerdictWithheld("Frobenius stage " + std::to_string(pT) + " exceeds the stage cap " +
                                  std::to_string(opts.stage_cap));
        const auto T = st.stage;
        const auto big = static_cast<unsigned>(pT);
        v.frobenius_stage = big;
        const auto& hT = engine.cohomology(j, 0, T);
        const auto& hP = engine.cohomology(j, 0, big);
        if (hP.dim() != hT.dim())
            throw VerdictWithheld("dimension at stage " + std::to_string(pT) + " differs from the stabilized value");
        auto tr = engine.transition(j, 0, T, big);
        if (!engine.is_invertible(tr))
            throw VerdictWithheld("transition to stage " + std::to_string(pT) + " is not invertible");

        GaloisField fp(p);
        Matrix trm(tr.rows, tr.cols), y(st.dim, st.dim);
        for (std::size_t r = 0; r < tr.rows; ++r)
            for (std::size_t c = 0; c < tr.cols; ++c) trm(r, c) = tr.data[r][c];
        const auto& basis = engine.quotient().piece(static_cast<int>(T) * j).basis;
        SparseVec<PrimeField::Elem> z, tmp;
        Exponent e;
        for (std::size_t c = 0; c < st.dim; ++c) {
            z.clear();
            for (const auto& [idx, x] : hT.reps.rows()[c]) {
                std::size_t a = idx / hT.block, b = idx % hT.block;
                e = basis[b];
                for (auto& ei : e) ei *= static_cast<int>(p);
                tmp.clear();
                engine.quotient().add_monomial(e, x, tmp);   // x^p = x in F_p
                auto off = static_cast<std::uint32_t>(a * hP.block);
                for (auto& [cc, w] : tmp) z.emplace_back(cc + off, w);
            }
            canonicalize(k, z);
            auto coord = engine.coordinates(hP, z);
            for (std::size_t r = 0; r < st.dim; ++r) y(r, c) = coord[r];
        }
        auto inv = inverse(fp, trm);
        if (!inv) throw std::logic_error("invertible transition has no inverse");
        v.frobenius = mat_mul(fp, *inv, y);
        auto nil = is_nilpotent(PLinearModule(fp, v.frobenius));
        v.nilpotent = nil.nilpotent;
        v.nilpotency_index = nil.index;
        return v;
    }
}

template FrobeniusVerdict frobenius_matrix(KoszulEngine<PrimeField>&, int, const StabilizeOptions&);
template FrobeniusVerdict frobenius_matrix(KoszulEngine<RationalField>&, int, const StabilizeOptions&);

FrobeniusVerdict frobenius_matrix(std::uint64_t p, int nvars, const std::vector<Poly>& gens, int j,
                                  const StabilizeOptions& opts)
{
    auto ring = CoefficientRing::prime_field(p);
    KoszulEngine<PrimeField> eng(PrimeField(p), nvars, to_ring(gens, ring));
    return frobenius_matrix(eng, j, opts);
}

TorsionReport torsion_obstruction(int nvars, const std::vector<Poly>& gens_over_z, std::uint64_t p, int k,
                                  const StabilizeOptions& opts)
{
    for (const auto& g : gens_over_z)
        if (g.ring().kind != CoefficientRing::Kind::Integers) throw InvalidInput("torsion needs an ideal over the integers");
    if (k < 0 || k > nvars) throw InvalidInput("index k outside 0.." + std::to_string(nvars));
    TorsionReport rep;
    rep.p = p;
    rep.k = k;
    rep.j = nvars - k;
    rep.reduced_ideal = to_ring(gens_over_z, CoefficientRing::prime_field(p));
    rep.frobenius = frobenius_matrix(p, nvars, rep.reduced_ideal, rep.j, opts);
    const std::string piece = "[H^" + std::to_string(rep.j) + "_m(R/(I+pR))]_0";
    const std::string target = "H^" + std::to_string(k + 1) + "_I(R)";
    if (rep.frobenius.nilpotent) {
        rep.verdict = "NILPOTENT";
        rep.conclusion = "Frobenius is nilpotent on " + piece + "; multiplication by p on " + target +
                         " is injective provided the unchecked hypothesis below holds";
    } else {
        rep.verdict = "NON-NILPOTENT";
        rep.conclusion = "Frobenius is not nilpotent on " + piece + "; H^" + std::to_string(k) +
                         "_I of the reduction mod p is nonzero and this strand obstructs injectivity of p on " + target;
    }
    rep.unchecked_hypothesis = "multiplication by p on H^" + std::to_string(k + 1) +
                               "_I(R_{x_i}) is injective for every variable x_i; this is not checked";
    return rep;
}

AInvariantResult a_invariant(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                             AInvariantMethod method, bool cm_asserted, const StabilizeOptions& opts)
{
    AInvariantResult out;
    out.method = method;
    out.cm_asserted = cm_asserted;
    int max_gen = 0;
    for (const auto& g : gens) max_gen = std::max(max_gen, g.degree());
    // the numerator has degree at most the sum of the generator degrees; try small cutoffs first
    for (int cutoff = 12;; cutoff *= 2) {
        try {
            out.numerator = hilbert_numerator(ring, nvars, gens, cutoff);
            break;
        } catch (const VerdictWithheld&) {
            if (cutoff >= 96) throw;
        }
    }
    out.krull_dim = krull_dimension(out.numerator, nvars);
    const int degq = static_cast<int>(out.numerator.size()) - 1;
    if (method == AInvariantMethod::Hilbert) {
        out.a = degq - nvars;
        return out;
    }
    const auto fr = strand_field(ring);
    const int d = out.krull_dim;
    out.scan_top = std::max(degq, max_gen);
    with_field(fr, [&](auto k) {
        KoszulEngine<decltype(k)> eng(k, nvars, to_ring(gens, fr));
        for (int s = out.scan_top; s >= -d - 1; --s) {
            auto st = stabilize(eng, d, s, opts);
            out.scanned.emplace_back(s, st.dim);
            if (st.dim == 0) continue;
            if (s == out.scan_top)
                throw VerdictWithheld("top local cohomology is nonzero at the top of the scan window (degree " +
                                      std::to_string(s) + ")");
            out.a = s;
            return 0;
        }
        throw VerdictWithheld("scan window exhausted without a nonzero degree");
    });
    return out;
}

} // namespace lclab
