#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lclab/poly.hpp"

namespace lclab {

/// A face as a bitmask: bit i-1 set when vertex i belongs to it.
using Face = std::uint32_t;

/// Face lists such as `123,124,{10}{11}1`: one token per face, a digit per vertex,
/// braces around vertices above 9. Surrounding brackets are optional.
std::vector<Face> parse_face_list(const std::string& text, int n);
std::string format_face_list(const std::vector<Face>& faces);
std::vector<int> face_vertices(Face f);

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Faces are the subsets of {1..n} containing no listed nonface.
    static SimplicialComplex from_nonfaces(int n, const std::vector<Face>& nonfaces);
    /// The complex of a squarefree monomial ideal; throws InvalidInput otherwise.
    static SimplicialComplex from_ideal(int n, const std::vector<Poly>& gens);
    /// `n=6; nonfaces=123,124,...`
    static SimplicialComplex parse(const std::string& text);

    int nvertices() const { return n_; }
    /// Minimal nonfaces, sorted by size then bitmask.
    const std::vector<Face>& nonfaces() const { return nonfaces_; }
    /// All faces (including the empty face when the complex is nonempty), sorted by size then bitmask.
    const std::vector<Face>& faces() const { return faces_; }
    std::vector<Face> faces_of_dim(int k) const;
    std::vector<Face> facets() const;
    /// f_{-1}, f_0, ..., f_{n-1}
    std::vector<std::uint64_t> f_vector() const;
    bool contains(Face f) const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Face> nonfaces_;
    std::vector<Face> faces_;
};

/// dim over F_p of the reduced simplicial cohomology in degree i, -1 <= i <= n-1.
std::size_t reduced_cohomology(const SimplicialComplex& c, int i, std::uint64_t p);

/// dim [H^j_m(R/I)]_0 for squarefree monomial I over F_p, as reduced cohomology in degree j-1.
std::size_t hochster_degree_zero(int n, const std::vector<Poly>& gens, int j, std::uint64_t p);

} // namespace lclab
