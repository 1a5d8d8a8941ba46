#pragma once

#include <string>
#include <vector>

#include "lclab/poly.hpp"

namespace fixtures {

inline const std::vector<std::string> rp2_triples = {"123", "124", "135", "146", "156",
                                                     "236", "245", "256", "345", "346"};

inline std::vector<lclab::Poly> rp2_ideal(const lclab::CoefficientRing& r)
{
    std::vector<lclab::Poly> g;
    for (const auto& t : rp2_triples) {
        std::string s;
        for (char c : t) s += (s.empty() ? "x" : "*x") + std::string(1, c);
        g.push_back(lclab::Poly::parse(s, r, 6));
    }
    return g;
}

inline std::vector<lclab::Poly> parse_all(const std::vector<std::string>& src, const lclab::CoefficientRing& r, int n)
{
    std::vector<lclab::Poly> out;
    for (const auto& s : src) out.push_back(lclab::Poly::parse(s, r, n));
    return out;
}

// 2x2 minors of [[x1,x2,x3],[x4,x5,x6]]
inline std::vector<lclab::Poly> minors_2x3(const lclab::CoefficientRing& r)
{
    return parse_all({"x1*x5 - x2*x4", "x1*x6 - x3*x4", "x2*x6 - x3*x5"}, r, 6);
}

} // namespace fixtures
