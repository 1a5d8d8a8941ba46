#pragma once

#include <optional>
#include <string>

#include "lclab/dense_matrix.hpp"

namespace lclab {

/// F^r with the p-semilinear map f(v) = A * phi(v), phi the entrywise p-th power.
struct PLinearModule {
    GaloisField field;
    Matrix A;

    PLinearModule() = default;
    PLinearModule(GaloisField f, Matrix a);

    std::size_t dim() const { return A.rows; }
    std::vector<GaloisField::Elem> apply(const std::vector<GaloisField::Elem>& v) const;
    /// The same map after extending scalars along `e` (e.source must be this field).
    PLinearModule base_change(const FieldEmbedding& e) const;
};

/// Matrix B_e with f^e(v) = B_e * phi^e(v).
Matrix iterate(const PLinearModule& m, unsigned e);

/// Rows of the reduced echelon basis of the intersection of the images of f^e.
Matrix stable_image(const PLinearModule& m);
/// Rows of the reduced echelon basis of the union of the kernels of f^e.
Matrix nilpotent_part(const PLinearModule& m);

/// M / M_nil in the basis of standard vectors off the pivots of M_nil.
struct ReducedModule {
    PLinearModule module;
    Matrix projection;                 // dim M_red x dim M, coordinates of the image
    std::vector<std::size_t> kept;     // coordinates of M spanning the quotient
};
ReducedModule reduced(const PLinearModule& m);

struct Nilpotency {
    bool nilpotent = false;
    unsigned index = 0;   // least e with f^e = 0; 0 when not nilpotent
};
Nilpotency is_nilpotent(const PLinearModule& m);

/// F_p-basis (as rows) of the fixed vectors {v : f(v) = v}.
Matrix fixed_points(const PLinearModule& m);

struct FixedBasis {
    bool ok = false;
    FieldEmbedding embedding;   // base field -> field of the basis
    Matrix basis;               // columns e_i with f(e_i) = e_i
    unsigned extension_steps = 0;
    std::string failure;
};
/// Fixed basis over the base field, or over F_{p^{kL}} for L = 2, 3, ... up to the step budget.
/// Requires f injective.
FixedBasis fixed_basis(const PLinearModule& m, unsigned max_ext_steps = 3);

struct SplitResult {
    bool ok = false;
    FieldEmbedding embedding;   // base field -> field of the section
    Matrix section;             // dim M x dim N
    unsigned extension_steps = 0;
    std::vector<std::string> extensions;   // descriptors of the fields passed through
    std::string failure;
};
/// Equivariant section of a surjective F{f}-map proj: M -> N, lifting a fixed basis of N and
/// correcting along a fixed basis of ker(proj) by roots of T^p - T + c.
/// Throws InvalidInput when proj is not an equivariant surjection.
SplitResult split_surjection(const PLinearModule& M, const PLinearModule& N, const Matrix& proj,
                             unsigned max_ext_steps = 3);

} // namespace lclab
