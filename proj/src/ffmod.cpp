#include "lclab/ffmod.hpp"

#include <stdexcept>

namespace lclab {

PLinearModule::PLinearModule(GaloisField f, Matrix a) : field(std::move(f)), A(std::move(a))
{
    if (A.rows != A.cols) throw InvalidInput("Frobenius matrix must be square");
    for (auto x : A.data)
        if (x >= field.order()) throw InvalidInput("matrix entry outside the field");
}

std::vector<GaloisField::Elem> PLinearModule::apply(const std::vector<GaloisField::Elem>& v) const
{
    std::vector<GaloisField::Elem> fv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) fv[i] = field.frob(v[i]);
    return mat_vec(field, A, fv);
}

PLinearModule PLinearModule::base_change(const FieldEmbedding& e) const
{
    if (e.source != field) throw std::logic_error("base_change: embedding from a different field");
    return {e.target, mat_map(e, A)};
}

Matrix iterate(const PLinearModule& m, unsigned e)
{
    Matrix b = Matrix::identity(m.dim());
    for (unsigned i = 0; i < e; ++i) b = mat_mul(m.field, m.A, mat_frob(m.field, b));
    return b;
}

Matrix stable_image(const PLinearModule& m)
{
    const auto& f = m.field;
    Matrix b = Matrix::identity(m.dim());
    std::size_t prev = m.dim();
    while (true) {
        b = mat_mul(f, m.A, mat_frob(f, b));
        std::size_t r = rank(f, b);
        if (r == prev) return column_space(f, b);
        prev = r;
    }
}

namespace {

// phi^{-e}(ker B_e) as rows in reduced echelon form.
Matrix kernel_preimage(const GaloisField& f, const Matrix& b, unsigned e)
{
    Matrix rows = mat_transpose(kernel(f, b));
    for (unsigned i = 0; i < e; ++i) rows = mat_frob_inv(f, rows);
    return rref(f, rows).reduced;
}

} // namespace

Matrix nilpotent_part(const PLinearModule& m)
{
    const auto& f = m.field;
    Matrix b = Matrix::identity(m.dim());
    std::size_t prev = 0;
    for (unsigned e = 1;; ++e) {
        b = mat_mul(f, m.A, mat_frob(f, b));
        Matrix k = kernel_preimage(f, b, e);
        if (k.rows == prev) return k;
        prev = k.rows;
    }
}

ReducedModule reduced(const PLinearModule& m)
{
    const auto& f = m.field;
    const std::size_t r = m.dim();
    Matrix nil = nilpotent_part(m);
    auto ech = rref(f, nil);
    std::vector<bool> is_pivot(r, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    ReducedModule out;
    std::vector<std::size_t> pos(r, 0);
    for (std::size_t j = 0; j < r; ++j)
        if (!is_pivot[j]) {
            pos[j] = out.kept.size();
            out.kept.push_back(j);
        }
    Matrix proj(out.kept.size(), r);
    for (auto j : out.kept) proj(pos[j], j) = 1;
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
        for (auto c : out.kept) proj(pos[c], ech.pivots[k]) = f.neg(ech.reduced(k, c));
    Matrix cols(r, out.kept.size());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < out.kept.size(); ++c) cols(i, c) = m.A(i, out.kept[c]);
    out.module = PLinearModule(f, mat_mul(f, proj, cols));
    out.projection = std::move(proj);
    return out;
}

Nilpotency is_nilpotent(const PLinearModule& m)
{
    if (m.dim() == 0) return {true, 0};
    Matrix b = Matrix::identity(m.dim());
    for (unsigned e = 1; e <= m.dim(); ++e) {
        b = mat_mul(m.field, m.A, mat_frob(m.field, b));
        if (b.is_zero()) return {true, e};
    }
    return {false, 0};
}

Matrix fixed_points(const PLinearModule& m)
{
    const auto& f = m.field;
    const std::size_t r = m.dim();
    const std::size_t k = f.degree();
    const std::uint64_t p = f.characteristic();
    GaloisField fp(p);
    // unknown (i, l): coefficient of a^l in coordinate i
    Matrix lin(r * k, r * k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            GaloisField::Elem beta = f.pow(k > 1 ? f.generator() : 1, l);
            GaloisField::Elem bp = f.frob(beta);
            for (std::size_t row = 0; row < r; ++row) {
                GaloisField::Elem val = f.mul(m.A(row, i), bp);
                if (row == i) val = f.sub(val, beta);
                auto d = f.digits(val);
                for (std::size_t t = 0; t < k; ++t) lin(row * k + t, i * k + l) = d[t];
            }
        }
    Matrix ker = kernel(fp, lin);
    Matrix out(ker.cols, r);
    for (std::size_t c = 0; c < ker.cols; ++c)
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::uint64_t> d(k);
            for (std::size_t l = 0; l < k; ++l) d[l] = ker(i * k + l, c);
            out(c, i) = f.from_digits(d);
        }
    for (std::size_t c = 0; c < out.rows; ++c)
        if (m.apply(out.row(c)) != out.row(c)) throw std::logic_error("fixed point failed verification");
    return out;
}

FixedBasis fixed_basis(const PLinearModule& m, unsigned max_ext_steps)
{
    if (nilpotent_part(m).rows != 0) throw InvalidInput("fixed_basis requires an injective Frobenius action");
    const auto& base = m.field;
    FixedBasis out;
    for (unsigned step = 0; step <= max_ext_steps; ++step) {
        FieldEmbedding emb = FieldEmbedding::identity(base);
        if (step > 0) {
            try {
                auto big = GaloisField::extension(base.characteristic(), base.degree() * (step + 1));
                emb = FieldEmbedding::find(base, big);
            } catch (const InvalidInput& e) {
                out.failure = std::string("extension ladder stopped: ") + e.what();
                return out;
            }
        }
        auto mm = m.base_change(emb);
        Matrix fp = fixed_points(mm);
        if (fp.rows == m.dim()) {
            out.ok = true;
            out.embedding = emb;
            out.basis = mat_transpose(fp);
            out.extension_steps = step;
            if (rank(emb.target, out.basis) != m.dim()) throw std::logic_error("fixed vectors are dependent");
            return out;
        }
    }
    out.failure = "no fixed basis within " + std::to_string(max_ext_steps) + " extension steps";
    return out;
}

SplitResult split_surjection(const PLinearModule& M, const PLinearModule& N, const Matrix& proj, unsigned max_ext_steps)
{
    const auto& base = M.field;
    if (N.field != base) throw InvalidInput("split_surjection: modules over different fields");
    if (proj.rows != N.dim() || proj.cols != M.dim()) throw InvalidInput("split_surjection: projection has the wrong shape");
    if (mat_mul(base, proj, M.A) != mat_mul(base, N.A, mat_frob(base, proj)))
        throw InvalidInput("split_surjection: projection does not commute with the Frobenius actions");
    if (rank(base, proj) != N.dim()) throw InvalidInput("split_surjection: projection is not surjective");

    SplitResult out;
    FieldEmbedding emb = FieldEmbedding::identity(base);
    unsigned steps = 0;
    auto extend_with = [&](const FieldEmbedding& next) {
        emb = emb.then(next);
        out.extensions.push_back(emb.target.descriptor());
    };

    while (true) {
        const GaloisField& F = emb.target;
        auto Mf = M.base_change(emb);
        auto Nf = N.base_change(emb);
        Matrix pf = mat_map(emb, proj);

        FixedBasis nb;
        try {
            nb = fixed_basis(Nf, max_ext_steps - steps);
        } catch (const InvalidInput&) {
            out.failure = "the Frobenius action on N has a nilpotent part";
            return out;
        }
        if (!nb.ok) {
            out.failure = "N has no fixed basis: " + nb.failure;
            return out;
        }
        if (nb.extension_steps > 0) {
            steps += nb.extension_steps;
            extend_with(nb.embedding);
            continue;
        }

        Matrix K = kernel(F, pf);
        Matrix AL(K.cols, K.cols);
        for (std::size_t i = 0; i < K.cols; ++i) {
            auto img = Mf.apply(K.column(i));
            auto x = solve(F, K, img);
            if (!x) throw std::logic_error("kernel is not Frobenius-stable");
            for (std::size_t r = 0; r < K.cols; ++r) AL(r, i) = (*x)[r];
        }
        PLinearModule L(F, AL);
        FixedBasis lb;
        try {
            lb = fixed_basis(L, max_ext_steps - steps);
        } catch (const InvalidInput&) {
            out.failure = "the kernel of the projection has a nilpotent part";
            return out;
        }
        if (!lb.ok) {
            out.failure = "the kernel has no fixed basis: " + lb.failure;
            return out;
        }
        if (lb.extension_steps > 0) {
            steps += lb.extension_steps;
            extend_with(lb.embedding);
            continue;
        }
        Matrix E = mat_mul(F, K, lb.basis);   // fixed basis of the kernel, in M coordinates

        Matrix W(M.dim(), N.dim());
        bool restarted = false;
        for (std::size_t j = 0; j < N.dim() && !restarted; ++j) {
            auto vt = solve(F, pf, nb.basis.column(j));
            auto diff = Mf.apply(*vt);
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = F.sub(diff[i], (*vt)[i]);
            auto c = solve(F, E, diff);
            if (!c) throw std::logic_error("lift defect outside the kernel");
            std::vector<GaloisField::Elem> w = *vt;
            for (std::size_t i = 0; i < c->size(); ++i) {
                auto t = artin_schreier_solve(F, (*c)[i]);
                if (!t) {
                    if (steps >= max_ext_steps) {
                        out.failure = "T^p - T + " + F.format((*c)[i]) + " has no root in " + F.descriptor() +
                                      " and the extension budget is exhausted";
                        return out;
                    }
                    auto ext = extend_by_artin_schreier(F, (*c)[i]);
                    ++steps;
                    extend_with(ext.embedding);
                    restarted = true;
                    break;
                }
                for (std::size_t r = 0; r < w.size(); ++r) w[r] = F.add(w[r], F.mul(*t, E(r, i)));
            }
            if (!restarted)
                for (std::size_t r = 0; r < w.size(); ++r) W(r, j) = w[r];
        }
        if (restarted) continue;

        auto vinv = inverse(F, nb.basis);
        if (!vinv) throw std::logic_error("fixed basis of N is singular");
        Matrix sigma = mat_mul(F, W, *vinv);
        if (mat_mul(F, pf, sigma) != Matrix::identity(N.dim()) ||
            mat_mul(F, sigma, Nf.A) != mat_mul(F, Mf.A, mat_frob(F, sigma)))
            throw std::logic_error("section failed verification");
        out.ok = true;
        out.embedding = emb;
        out.section = std::move(sigma);
        out.extension_steps = steps;
        return out;
    }
}

} // namespace lclab
