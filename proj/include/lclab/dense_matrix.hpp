#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lclab/galois_field.hpp"

namespace lclab {

/// Dense row-major matrix over a GaloisField (no field stored).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GaloisField::Elem> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    static Matrix identity(std::size_t n);

    GaloisField::Elem& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    GaloisField::Elem operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool is_zero() const;
    std::vector<GaloisField::Elem> column(std::size_t j) const;
    std::vector<GaloisField::Elem> row(std::size_t i) const;

    bool operator==(const Matrix&) const = default;
};

Matrix mat_mul(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const GaloisField& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const GaloisField& f, GaloisField::Elem c, const Matrix& a);
/// Entrywise x -> x^p.
Matrix mat_frob(const GaloisField& f, const Matrix& a);
Matrix mat_frob_inv(const GaloisField& f, const Matrix& a);
Matrix mat_transpose(const Matrix& a);
Matrix mat_map(const FieldEmbedding& e, const Matrix& a);
std::vector<GaloisField::Elem> mat_vec(const GaloisField& f, const Matrix& a,
                                       const std::vector<GaloisField::Elem>& v);

struct RowEchelon {
    Matrix reduced;                 // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form; pivots on the first nonzero column.
RowEchelon rref(const GaloisField& f, Matrix a);
std::size_t rank(const GaloisField& f, const Matrix& a);
/// Columns form a basis of the right kernel {v : a v = 0}, one per free column.
Matrix kernel(const GaloisField& f, const Matrix& a);
std::optional<Matrix> inverse(const GaloisField& f, const Matrix& a);
/// Some solution of a x = b (free variables zero), or none.
std::optional<std::vector<GaloisField::Elem>> solve(const GaloisField& f, const Matrix& a,
                                                    const std::vector<GaloisField::Elem>& b);

/// Rows of the RREF of the column span of `a` (a canonical basis of the span).
Matrix column_space(const GaloisField& f, const Matrix& a);
/// Rows `rows` in RREF; returns the rows of RREF(span(rows) + span(extra)).
Matrix span_sum(const GaloisField& f, const Matrix& rows, const Matrix& extra);
/// Rows of RREF of the intersection of two row spaces.
Matrix span_intersection(const GaloisField& f, const Matrix& a, const Matrix& b);

/// Matrix text form: rows separated by ';', entries by ','.
Matrix parse_matrix(const GaloisField& f, const std::string& text);
std::string format_matrix(const GaloisField& f, const Matrix& a);

} // namespace lclab
