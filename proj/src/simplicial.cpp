#include "lclab/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>

#include "lclab/scalar_field.hpp"
#include "lclab/sparse.hpp"

namespace lclab {

namespace {

bool size_then_mask(Face a, Face b)
{
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<int> face_vertices(Face f)
{
    std::vector<int> out;
    for (int i = 0; f >> i; ++i)
        if (f >> i & 1u) out.push_back(i + 1);
    return out;
}

std::vector<Face> parse_face_list(const std::string& text, int n)
{
    if (n < 0 || n > 31) throw InvalidInput("vertex count must be between 0 and 31");
    std::string s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw InvalidInput("unbalanced brackets in face list");
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<Face> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        auto comma = s.find(',', pos);
        std::string tok = trim(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (tok.empty()) throw InvalidInput("empty face in list");
        Face f = 0;
        for (std::size_t i = 0; i < tok.size();) {
            int v = 0;
            if (tok[i] == '{') {
                auto close = tok.find('}', i);
                if (close == std::string::npos || close == i + 1) throw InvalidInput("bad vertex in face " + tok);
                for (std::size_t k = i + 1; k < close; ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw InvalidInput("bad vertex in face " + tok);
                    v = v * 10 + (tok[k] - '0');
                    if (v > 99) throw InvalidInput("vertex out of range in face " + tok);
                }
                i = close + 1;
            } else if (std::isdigit(static_cast<unsigned char>(tok[i]))) {
                v = tok[i] - '0';
                ++i;
            } else {
                throw InvalidInput("bad character in face " + tok);
            }
            if (v < 1 || v > n) throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            Face bit = Face(1) << (v - 1);
            if (f & bit) throw InvalidInput("repeated vertex in face " + tok + " (faces are squarefree)");
            f |= bit;
        }
        out.push_back(f);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_face_list(const std::vector<Face>& faces)
{
    std::string out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (i) out += ',';
        for (int v : face_vertices(faces[i])) out += v <= 9 ? std::to_string(v) : "{" + std::to_string(v) + "}";
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_nonfaces(int n, const std::vector<Face>& nonfaces)
{
    if (n < 0 || n > 24) throw InvalidInput("simplicial complexes support at most 24 vertices");
    SimplicialComplex c;
    c.n_ = n;
    const Face all = n == 0 ? 0 : (Face(1) << n) - 1;
    for (Face f : nonfaces)
        if (f & ~all) throw InvalidInput("nonface uses a vertex outside 1.." + std::to_string(n));
    // keep the minimal ones
    std::vector<Face> sorted = nonfaces;
    std::sort(sorted.begin(), sorted.end(), size_then_mask);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Face f : sorted) {
        bool redundant = false;
        for (Face g : c.nonfaces_)
            if ((g & f) == g) redundant = true;
        if (!redundant) c.nonfaces_.push_back(f);
    }
    for (Face f = 0;; ++f) {
        bool ok = true;
        for (Face g : c.nonfaces_)
            if ((g & f) == g) {
                ok = false;
                break;
            }
        if (ok) c.faces_.push_back(f);
        if (f == all) break;
    }
    std::sort(c.faces_.begin(), c.faces_.end(), size_then_mask);
    return c;
}

SimplicialComplex SimplicialComplex::from_ideal(int n, const std::vector<Poly>& gens)
{
    std::vector<Face> nf;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.size() != 1) throw InvalidInput("not a monomial: " + g.to_string());
        const auto& [e, c] = *g.terms().begin();
        (void)c;
        Face f = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] > 1) throw InvalidInput("not squarefree: " + g.to_string());
            if (e[i] == 1) f |= Face(1) << i;
        }
        nf.push_back(f);
    }
    return from_nonfaces(n, nf);
}

SimplicialComplex SimplicialComplex::parse(const std::string& text)
{
    auto semi = text.find(';');
    if (semi == std::string::npos) throw InvalidInput("complex text must read `n=<int>; nonfaces=<list>`");
    std::string head = trim(text.substr(0, semi)), tail = trim(text.substr(semi + 1));
    if (head.rfind("n=", 0) != 0 || tail.rfind("nonfaces=", 0) != 0)
        throw InvalidInput("complex text must read `n=<int>; nonfaces=<list>`");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(head.substr(2), &used);
        if (used != head.size() - 2) throw InvalidInput("bad vertex count");
    } catch (const std::logic_error&) {
        throw InvalidInput("bad vertex count in `" + head + "`");
    }
    return from_nonfaces(n, parse_face_list(tail.substr(9), n));
}

std::vector<Face> SimplicialComplex::faces_of_dim(int k) const
{
    std::vector<Face> out;
    for (Face f : faces_)
        if (std::popcount(f) == k + 1) out.push_back(f);
    return out;
}

std::vector<Face> SimplicialComplex::facets() const
{
    std::vector<Face> out;
    for (Face f : faces_) {
        bool maximal = true;
        for (int i = 0; i < n_ && maximal; ++i) {
            Face bit = Face(1) << i;
            if (!(f & bit) && contains(f | bit)) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const
{
    std::vector<std::uint64_t> f(static_cast<std::size_t>(n_) + 1, 0);
    for (Face x : faces_) ++f[static_cast<std::size_t>(std::popcount(x))];
    return f;
}

bool SimplicialComplex::contains(Face f) const
{
    return std::binary_search(faces_.begin(), faces_.end(), f, size_then_mask);
}

std::string SimplicialComplex::to_string() const
{
    return "n=" + std::to_string(n_) + "; nonfaces=" + format_face_list(nonfaces_);
}

std::size_t reduced_cohomology(const SimplicialComplex& c, int i, std::uint64_t p)
{
    if (i < -1 || i > c.nvertices() - 1) throw InvalidInput("cohomological degree outside -1..n-1");
    PrimeField k(p);
    // rank of the coboundary C^{a} -> C^{a+1}
    auto coboundary_rank = [&](int a) -> std::size_t {
        if (a < -1 || a + 1 > c.nvertices() - 1) return 0;
        auto src = c.faces_of_dim(a);
        auto dst = c.faces_of_dim(a + 1);
        if (src.empty() || dst.empty()) return 0;
        std::map<Face, std::uint32_t> pos;
        for (std::size_t x = 0; x < src.size(); ++x) pos[src[x]] = static_cast<std::uint32_t>(x);
        Echelon<PrimeField> e(k, src.size());
        for (Face sigma : dst) {
            // (delta phi)(sigma) = sum_l (-1)^l phi(sigma minus its l-th vertex)
            SparseVec<PrimeField::Elem> row;
            int l = 0;
            for (int v : face_vertices(sigma)) {
                Face tau = sigma & ~(Face(1) << (v - 1));
                row.emplace_back(pos.at(tau), l % 2 ? k.neg(1) : 1u);
                ++l;
            }
            canonicalize(k, row);
            e.insert(row);
        }
        return e.rank();
    };
    std::size_t dim = c.faces_of_dim(i).size();
    return dim - coboundary_rank(i) - coboundary_rank(i - 1);
}

std::size_t hochster_degree_zero(int n, const std::vector<Poly>& gens, int j, std::uint64_t p)
{
    if (j < 0 || j > n) throw InvalidInput("cohomological index outside 0..n");
    return reduced_cohomology(SimplicialComplex::from_ideal(n, gens), j - 1, p);
}

} // namespace lclab
