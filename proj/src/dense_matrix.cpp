#include "lclab/dense_matrix.hpp"

#include <sstream>

namespace lclab {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (auto x : data)
        if (x != 0) return false;
    return true;
}

std::vector<GaloisField::Elem> Matrix::column(std::size_t j) const
{
    std::vector<GaloisField::Elem> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<GaloisField::Elem> Matrix::row(std::size_t i) const
{
    return {data.begin() + static_cast<std::ptrdiff_t>(i * cols),
            data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
}

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b)
{
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t l = 0; l < a.cols; ++l) {
            auto x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (b(l, j) != 0) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
        }
    return c;
}

Matrix mat_add(const GaloisField& f, const Matrix& a, const Matrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_add: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
    return c;
}

Matrix mat_sub(const GaloisField& f, const Matrix& a, const Matrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_sub: shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] = f.sub(a.data[i], b.data[i]);
    return c;
}

Matrix mat_scale(const GaloisField& f, GaloisField::Elem s, const Matrix& a)
{
    Matrix c = a;
    for (auto& x : c.data) x = f.mul(s, x);
    return c;
}

Matrix mat_frob(const GaloisField& f, const Matrix& a)
{
    Matrix c = a;
    if (f.is_prime_field()) return c;
    for (auto& x : c.data) x = f.frob(x);
    return c;
}

Matrix mat_frob_inv(const GaloisField& f, const Matrix& a)
{
    Matrix c = a;
    if (f.is_prime_field()) return c;
    for (auto& x : c.data) x = f.frob_inv(x);
    return c;
}

Matrix mat_transpose(const Matrix& a)
{
    Matrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Matrix mat_map(const FieldEmbedding& e, const Matrix& a)
{
    Matrix c = a;
    for (auto& x : c.data) x = e(x);
    return c;
}

std::vector<GaloisField::Elem> mat_vec(const GaloisField& f, const Matrix& a,
                                       const std::vector<GaloisField::Elem>& v)
{
    if (a.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<GaloisField::Elem> out(a.rows, 0);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            if (a(i, j) != 0 && v[j] != 0) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
    return out;
}

RowEchelon rref(const GaloisField& f, Matrix a)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t piv = r;
        while (piv < a.rows && a(piv, c) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(piv, j), a(r, j));
        auto inv = f.inv(a(r, c));
        for (std::size_t j = c; j < a.cols; ++j) a(r, j) = f.mul(inv, a(r, j));
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            auto factor = a(i, c);
            for (std::size_t j = c; j < a.cols; ++j)
                if (a(r, j) != 0) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = Matrix(r, a.cols);
    std::copy(a.data.begin(), a.data.begin() + static_cast<std::ptrdiff_t>(r * a.cols), out.reduced.data.begin());
    return out;
}

std::size_t rank(const GaloisField& f, const Matrix& a)
{
    return rref(f, a).rank();
}

Matrix kernel(const GaloisField& f, const Matrix& a)
{
    auto e = rref(f, a);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix k(a.cols, free.size());
    for (std::size_t idx = 0; idx < free.size(); ++idx) {
        std::size_t fc = free[idx];
        k(fc, idx) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], idx) = f.neg(e.reduced(r, fc));
    }
    return k;
}

std::optional<Matrix> inverse(const GaloisField& f, const Matrix& a)
{
    if (a.rows != a.cols) return std::nullopt;
    const std::size_t n = a.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto e = rref(f, aug);
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<std::vector<GaloisField::Elem>> solve(const GaloisField& f, const Matrix& a,
                                                    const std::vector<GaloisField::Elem>& b)
{
    if (b.size() != a.rows) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        aug(i, a.cols) = b[i];
    }
    auto e = rref(f, aug);
    std::vector<GaloisField::Elem> x(a.cols, 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols);
    }
    return x;
}

Matrix column_space(const GaloisField& f, const Matrix& a)
{
    return rref(f, mat_transpose(a)).reduced;
}

Matrix span_sum(const GaloisField& f, const Matrix& rows, const Matrix& extra)
{
    if (rows.rows == 0) return rref(f, extra).reduced;
    if (extra.rows == 0) return rref(f, rows).reduced;
    if (rows.cols != extra.cols) throw std::invalid_argument("span_sum: shape mismatch");
    Matrix all(rows.rows + extra.rows, rows.cols);
    std::copy(rows.data.begin(), rows.data.end(), all.data.begin());
    std::copy(extra.data.begin(), extra.data.end(), all.data.begin() + static_cast<std::ptrdiff_t>(rows.data.size()));
    return rref(f, all).reduced;
}

Matrix span_intersection(const GaloisField& f, const Matrix& a, const Matrix& b)
{
    // v = x a = y b  <=>  [a; -b]^T [x; y] = 0
    const std::size_t n = a.rows > 0 ? a.cols : b.cols;
    if (a.rows == 0 || b.rows == 0) return Matrix(0, n);
    Matrix stacked(n, a.rows + b.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(j, a.rows + i) = f.neg(b(i, j));
    Matrix k = kernel(f, stacked);
    Matrix vecs(k.cols, n);
    for (std::size_t c = 0; c < k.cols; ++c)
        for (std::size_t i = 0; i < a.rows; ++i) {
            auto x = k(i, c);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) vecs(c, j) = f.add(vecs(c, j), f.mul(x, a(i, j)));
        }
    return rref(f, vecs).reduced;
}

Matrix parse_matrix(const GaloisField& f, const std::string& text)
{
    std::vector<std::vector<GaloisField::Elem>> rows;
    std::stringstream rs(text);
    std::string row_text;
    while (std::getline(rs, row_text, ';')) {
        if (row_text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::vector<GaloisField::Elem> row;
        std::stringstream es(row_text);
        std::string cell;
        while (std::getline(es, cell, ',')) row.push_back(f.parse_elem(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::string format_matrix(const GaloisField& f, const Matrix& a)
{
    std::string out;
    for (std::size_t i = 0; i < a.rows; ++i) {
        if (i) out += ";";
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (j) out += ",";
            out += f.format(a(i, j));
        }
    }
    return out;
}

} // namespace lclab
