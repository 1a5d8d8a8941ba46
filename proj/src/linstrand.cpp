#include "lclab/linstrand.hpp"

#include <cstdlib>
#include <string>

namespace lclab {

mpz_class monomial_count(int n, int d)
{
    if (d < 0 || n < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    return big_binomial(static_cast<std::uint64_t>(d + n - 1), static_cast<std::uint64_t>(n - 1));
}

std::size_t strand_cap()
{
    const char* env = std::getenv("LCLAB_STAGE_CAP");
    if (!env || !*env) return 200000;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw InvalidInput(std::string("LCLAB_STAGE_CAP must be a positive integer, got '") + env + "'");
    return static_cast<std::size_t>(v);
}

namespace {

// C(m, k) for small results; exact because each partial product is a binomial.
std::uint64_t small_binomial(std::uint64_t m, std::uint64_t k)
{
    if (k > m) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t j = 0; j < k; ++j) r = r * (m - j) / (j + 1);
    return r;
}

void enumerate_rec(int pos, int rem, Exponent& e, std::vector<Exponent>& out)
{
    const int n = static_cast<int>(e.size());
    if (pos == n - 1) {
        e[static_cast<std::size_t>(pos)] = rem;
        out.push_back(e);
        return;
    }
    for (int a = rem; a >= 0; --a) {
        e[static_cast<std::size_t>(pos)] = a;
        enumerate_rec(pos + 1, rem - a, e, out);
    }
    e[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

std::uint64_t MonomialIndex::rank(const Exponent& e) const
{
    std::uint64_t r = 0;
    int rem = exponent_degree(e);
    for (int i = 0; i + 1 < n_; ++i) {
        int ai = e[static_cast<std::size_t>(i)];
        if (rem - ai >= 1)
            r += small_binomial(static_cast<std::uint64_t>(rem - ai - 1 + n_ - i - 1), static_cast<std::uint64_t>(n_ - i - 1));
        rem -= ai;
    }
    return r;
}

std::vector<Exponent> MonomialIndex::enumerate(int d) const
{
    std::vector<Exponent> out;
    if (d < 0 || n_ == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent e(static_cast<std::size_t>(n_), 0);
    enumerate_rec(0, d, e, out);
    return out;
}

template <class K>
GradedQuotient<K>::GradedQuotient(K field, int nvars, const std::vector<Poly>& gens, std::size_t cap)
    : k_(std::move(field)), n_(nvars), cap_(cap), index_(nvars)
{
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw InvalidInput("generator has the wrong number of variables");
        if (g.is_zero()) continue;
        if (g.has_negative_exponents()) throw InvalidInput("generator with negative exponents: " + g.to_string());
        if (!g.is_homogeneous()) throw InvalidInput("inhomogeneous generator: " + g.to_string());
        std::vector<std::pair<Exponent, Elem>> terms;
        for (const auto& [e, c] : g.terms()) {
            Elem x = k_.from_mpq(c);
            if (!k_.is_zero(x)) terms.emplace_back(e, x);
        }
        if (terms.empty()) continue;
        gen_degree_.push_back(g.degree());
        gen_terms_.push_back(std::move(terms));
    }
}

template <class K>
const QuotientPiece<K>& GradedQuotient<K>::piece(int d)
{
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
    if (d < 0) throw std::logic_error("negative degree piece requested");
    mpz_class count = monomial_count(n_, d);
    if (count > cap_)
        throw VerdictWithheld("graded piece of degree " + std::to_string(d) + " has " + count.get_str() +
                              " monomials, above the cap " + std::to_string(cap_) + " (LCLAB_STAGE_CAP)");
    auto pc = std::make_unique<QuotientPiece<K>>();
    pc->degree = d;
    pc->ambient_dim = count.get_ui();
    pc->ideal = Echelon<K>(k_, pc->ambient_dim);
    typename Echelon<K>::Row row;
    Exponent prod(static_cast<std::size_t>(n_));
    for (std::size_t g = 0; g < gen_terms_.size(); ++g) {
        int md = d - gen_degree_[g];
        if (md < 0) continue;
        for (const auto& m : index_.enumerate(md)) {
            row.clear();
            for (const auto& [a, c] : gen_terms_[g]) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = m[i] + a[i];
                row.emplace_back(static_cast<std::uint32_t>(index_.rank(prod)), c);
            }
            canonicalize(k_, row);
            pc->ideal.insert(row);
            if (pc->ideal.rank() == pc->ambient_dim) break;
        }
    }
    pc->ideal.finalize();
    pc->std_index.assign(pc->ambient_dim, -1);
    auto all = index_.enumerate(d);
    for (std::size_t c = 0; c < all.size(); ++c)
        if (!pc->ideal.is_pivot(static_cast<std::uint32_t>(c))) {
            pc->std_index[c] = static_cast<std::int32_t>(pc->basis.size());
            pc->basis.push_back(all[c]);
        }
    auto& ref = *pc;
    cache_.emplace(d, std::move(pc));
    return ref;
}

template <class K>
std::size_t GradedQuotient<K>::dim(int d)
{
    if (d < 0) return 0;
    return piece(d).basis.size();
}

template <class K>
std::size_t GradedQuotient<K>::ideal_dim(int d)
{
    if (d < 0) return 0;
    return piece(d).ideal.rank();
}

template <class K>
void GradedQuotient<K>::add_monomial(const Exponent& e, const Elem& c, SparseVec<Elem>& acc)
{
    const auto& pc = piece(exponent_degree(e));
    auto col = static_cast<std::uint32_t>(index_.rank(e));
    auto si = pc.std_index[col];
    if (si >= 0) {
        acc.emplace_back(static_cast<std::uint32_t>(si), c);
        return;
    }
    const auto& row = pc.ideal.row_of_pivot(col);
    for (std::size_t i = 1; i < row.size(); ++i)
        acc.emplace_back(static_cast<std::uint32_t>(pc.std_index[row[i].first]), k_.neg(k_.mul(c, row[i].second)));
}

template <class K>
SparseVec<typename K::Elem> GradedQuotient<K>::normal_form(const Poly& g)
{
    SparseVec<Elem> acc;
    if (g.is_zero()) return acc;
    if (!g.is_homogeneous() || g.has_negative_exponents()) throw InvalidInput("normal form needs a homogeneous polynomial");
    for (const auto& [e, c] : g.terms()) add_monomial(e, k_.from_mpq(c), acc);
    canonicalize(k_, acc);
    return acc;
}

template class GradedQuotient<PrimeField>;
template class GradedQuotient<RationalField>;

CoefficientRing strand_field(const CoefficientRing& r)
{
    return r.kind == CoefficientRing::Kind::PrimeField ? r : CoefficientRing::rationals();
}

namespace {

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

StrandSpace ideal_piece(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens, int d)
{
    const auto fr = strand_field(ring);
    return with_field(fr, [&](auto k) {
        GradedQuotient<decltype(k)> q(k, nvars, to_ring(gens, fr));
        StrandSpace s;
        s.degree = d;
        if (d < 0) return s;
        const auto& pc = q.piece(d);
        s.ambient_dim = pc.ambient_dim;
        s.ideal_dim = pc.ideal.rank();
        s.quotient_dim = pc.basis.size();
        s.quotient_basis = pc.basis;
        auto all = q.index().enumerate(d);
        for (const auto& row : pc.ideal.rows()) {
            Poly p(fr, nvars);
            for (const auto& [c, x] : row) p.add_term(all[c], k.to_mpq(x));
            s.ideal_basis.push_back(std::move(p));
        }
        return s;
    });
}

StrandMap mult_matrix(const Poly& g, const std::vector<Poly>& gens, int d)
{
    if (!g.is_homogeneous() || g.has_negative_exponents()) throw InvalidInput("mult_matrix needs a homogeneous multiplier");
    const auto fr = strand_field(g.ring());
    const int n = g.nvars();
    return with_field(fr, [&](auto k) {
        using Elem = typename decltype(k)::Elem;
        GradedQuotient<decltype(k)> q(k, n, to_ring(gens, fr));
        StrandMap m;
        if (d < 0) return m;
        const int e = g.is_zero() ? 0 : g.degree();
        m.cols = q.dim(d);
        m.rows = q.dim(d + e);
        auto basis = q.piece(d).basis;
        Exponent prod(static_cast<std::size_t>(n));
        for (const auto& u : basis) {
            SparseVec<Elem> acc;
            for (const auto& [a, c] : g.terms()) {
                for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = u[i] + a[i];
                q.add_monomial(prod, k.from_mpq(c), acc);
            }
            canonicalize(k, acc);
            SparseVec<mpq_class> col;
            for (const auto& [r, x] : acc) col.emplace_back(r, k.to_mpq(x));
            m.columns.push_back(std::move(col));
        }
        return m;
    });
}

std::vector<std::uint64_t> hilbert_function(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                                            int d_max)
{
    const auto fr = strand_field(ring);
    return with_field(fr, [&](auto k) {
        GradedQuotient<decltype(k)> q(k, nvars, to_ring(gens, fr));
        std::vector<std::uint64_t> out;
        for (int d = 0; d <= d_max; ++d) out.push_back(q.dim(d));
        return out;
    });
}

std::vector<std::int64_t> hilbert_numerator(const CoefficientRing& ring, int nvars, const std::vector<Poly>& gens,
                                            int cutoff)
{
    constexpr int window = 5;
    if (cutoff < window) throw InvalidInput("hilbert_numerator: cutoff must be at least 5");
    auto h = hilbert_function(ring, nvars, gens, cutoff);
    std::vector<std::int64_t> q(static_cast<std::size_t>(cutoff) + 1, 0);
    for (int k = 0; k <= cutoff; ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i <= nvars && i <= k; ++i) {
            auto b = static_cast<std::int64_t>(small_binomial(static_cast<std::uint64_t>(nvars), static_cast<std::uint64_t>(i)));
            acc += (i % 2 ? -b : b) * static_cast<std::int64_t>(h[static_cast<std::size_t>(k - i)]);
        }
        q[static_cast<std::size_t>(k)] = acc;
    }
    for (int k = cutoff - window + 1; k <= cutoff; ++k)
        if (q[static_cast<std::size_t>(k)] != 0)
            throw VerdictWithheld("hilbert_numerator: cutoff " + std::to_string(cutoff) + " too small");
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

int krull_dimension(const std::vector<std::int64_t>& numerator, int nvars)
{
    std::vector<std::int64_t> q = numerator;
    if (q.empty()) return -1;   // zero ring
    int mult = 0;
    while (true) {
        std::int64_t at_one = 0;
        for (auto c : q) at_one += c;
        if (at_one != 0) break;
        // divide by (1 - s): coefficients of the quotient are prefix sums
        std::vector<std::int64_t> r(q.size() - 1);
        std::int64_t run = 0;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) {
            run += q[i];
            r[i] = run;
        }
        q = std::move(r);
        ++mult;
    }
    return nvars - mult;
}

namespace {

template <class K>
std::optional<MembershipCertificate> solve_membership(const K& k, const Poly& h, const std::vector<Poly>& gens, int D)
{
    using Elem = typename K::Elem;
    const int n = h.nvars();
    const auto& ring = h.ring();
    MonomialIndex index(n);

    bool homogeneous = h.is_homogeneous();
    for (const auto& g : gens)
        if (!g.is_zero() && !g.is_homogeneous()) homogeneous = false;

    struct Unknown {
        std::size_t gen;
        Exponent mono;
    };
    std::vector<Unknown> unknowns;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        const int top = D - gens[i].degree();
        for (int e = top; e >= 0; --e) {
            if (homogeneous && e != h.degree() - gens[i].degree()) continue;
            for (auto& m : index.enumerate(e)) unknowns.push_back({i, std::move(m)});
        }
    }
    const auto rhs = static_cast<std::uint32_t>(unknowns.size());
    std::map<Exponent, std::size_t, GrlexGreater> eq_id;
    std::vector<SparseVec<Elem>> eqs;
    auto equation = [&](const Exponent& e) -> SparseVec<Elem>& {
        auto [it, fresh] = eq_id.emplace(e, eqs.size());
        if (fresh) eqs.emplace_back();
        return eqs[it->second];
    };
    Exponent prod(static_cast<std::size_t>(n));
    for (std::uint32_t u = 0; u < unknowns.size(); ++u)
        for (const auto& [a, c] : gens[unknowns[u].gen].terms()) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = unknowns[u].mono[i] + a[i];
            equation(prod).emplace_back(u, k.from_mpq(c));
        }
    for (const auto& [e, c] : h.terms()) equation(e).emplace_back(rhs, k.from_mpq(c));

    Echelon<K> ech(k, unknowns.size() + 1);
    for (auto& r : eqs) {
        canonicalize(k, r);
        ech.insert(r);
    }
    ech.finalize();
    std::vector<Elem> lambda(unknowns.size(), k.zero());
    for (const auto& row : ech.rows()) {
        if (row.front().first == rhs) return std::nullopt;
        if (row.back().first == rhs) lambda[row.front().first] = row.back().second;
    }

    MembershipCertificate cert;
    cert.bound = D;
    cert.homogeneous = homogeneous;
    for (std::size_t i = 0; i < gens.size(); ++i) cert.multipliers.emplace_back(ring, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!k.is_zero(lambda[u])) cert.multipliers[unknowns[u].gen].add_term(unknowns[u].mono, k.to_mpq(lambda[u]));
    Poly check(ring, n);
    for (std::size_t i = 0; i < gens.size(); ++i) check += cert.multipliers[i] * gens[i];
    if (check != h) throw std::logic_error("membership certificate failed re-verification");
    return cert;
}

} // namespace

std::optional<MembershipCertificate> membership_solve(const Poly& h, const std::vector<Poly>& gens, int D)
{
    for (const auto& g : gens)
        if (!(g.ring() == h.ring()) || g.nvars() != h.nvars()) throw InvalidInput("membership_solve: ring mismatch");
    if (h.has_negative_exponents()) throw InvalidInput("membership_solve: negative exponents");
    const auto fr = strand_field(h.ring());
    Poly hf = h.change_ring(fr);
    auto gf = to_ring(gens, fr);
    if (!hf.is_zero() && hf.degree() > D) return std::nullopt;
    if (hf.is_zero()) {
        MembershipCertificate cert;
        cert.bound = D;
        for (std::size_t i = 0; i < gf.size(); ++i) cert.multipliers.emplace_back(fr, h.nvars());
        return cert;
    }
    return with_field(fr, [&](auto k) { return solve_membership(k, hf, gf, D); });
}

} // namespace lclab
