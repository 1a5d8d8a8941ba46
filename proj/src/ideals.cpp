#include "lclab/ideals.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lclab/linstrand.hpp"

namespace lclab {

namespace {

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::int64_t binom(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < k) return 0;
    return big_binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)).get_si();
}

// lex-ordered k-subsets of {0..n-1}
std::vector<std::vector<int>> subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int l = i + 1; l < k; ++l) cur[static_cast<std::size_t>(l)] = cur[static_cast<std::size_t>(l - 1)] + 1;
    }
    return out;
}

std::vector<std::vector<Poly>> submatrix(const std::vector<std::vector<Poly>>& a, const std::vector<int>& rows,
                                         const std::vector<int>& cols)
{
    std::vector<std::vector<Poly>> out;
    for (int r : rows) {
        std::vector<Poly> row;
        for (int c : cols) row.push_back(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<int> all_but(int n, std::initializer_list<int> drop)
{
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
    return out;
}

int parse_int_value(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size()) throw InvalidInput("");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("bad integer for " + key + ": `" + value + "`");
    }
}

} // namespace

int generic_variable(int n, int i, int j) { return (i - 1) * n + j; }

int alternating_variable(int n, int i, int j)
{
    if (i >= j) throw InvalidInput("alternating entries need i < j");
    // rows 1..i-1 contribute n-1, n-2, ... entries
    return (i - 1) * n - i * (i - 1) / 2 + (j - i);
}

int symmetric_variable(int n, int i, int j)
{
    if (i > j) std::swap(i, j);
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i + 1);
}

Poly determinant(const std::vector<std::vector<Poly>>& a)
{
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("determinant of an empty matrix");
    for (const auto& r : a)
        if (r.size() != n) throw InvalidInput("determinant of a non-square matrix");
    if (n == 1) return a[0][0];
    Poly sum(a[0][0].ring(), a[0][0].nvars());
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<int> rows, cols;
        for (std::size_t r = 1; r < n; ++r) rows.push_back(static_cast<int>(r));
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(static_cast<int>(c));
        Poly term = a[0][j] * determinant(submatrix(a, rows, cols));
        if (j % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

Poly pfaffian(const std::vector<std::vector<Poly>>& a)
{
    const int n = static_cast<int>(a.size());
    if (n == 0) throw InvalidInput("Pfaffian of an empty matrix");
    if (n % 2) throw InvalidInput("Pfaffian of an odd-sized matrix");
    if (n == 2) return a[0][1];
    Poly sum(a[0][1].ring(), a[0][1].nvars());
    // 1-based j = c + 1, sign (-1)^j
    for (int c = 1; c < n; ++c) {
        auto rest = all_but(n, {0, c});
        Poly term = a[0][static_cast<std::size_t>(c)] * pfaffian(submatrix(a, rest, rest));
        if ((c + 1) % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

std::vector<std::vector<Poly>> generic_matrix(int m, int n, const CoefficientRing& ring)
{
    if (m < 1 || n < 1) throw InvalidInput("matrix dimensions must be positive");
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) a[static_cast<std::size_t>(i - 1)].push_back(Poly::variable(ring, m * n, generic_variable(n, i, j)));
    return a;
}

std::vector<std::vector<Poly>> alternating_matrix(int n, const CoefficientRing& ring)
{
    if (n < 2) throw InvalidInput("alternating matrices need n >= 2");
    const int nv = static_cast<int>(choose2(n));
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n), Poly(ring, nv)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly x = Poly::variable(ring, nv, alternating_variable(n, i, j));
            a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -x;
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(x);
        }
    return a;
}

std::vector<std::vector<Poly>> symmetric_matrix(int n, const CoefficientRing& ring)
{
    if (n < 1) throw InvalidInput("symmetric matrices need n >= 1");
    const int nv = static_cast<int>(choose2(n + 1));
    std::vector<std::vector<Poly>> a(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = Poly::variable(ring, nv, symmetric_variable(n, i, j));
    return a;
}

std::vector<Poly> minors(const std::vector<std::vector<Poly>>& a, int t)
{
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    if (t < 1 || t > std::min(m, n)) throw InvalidInput("minor size outside 1..min(m, n)");
    std::vector<Poly> out;
    for (const auto& rows : subsets(m, t))
        for (const auto& cols : subsets(n, t)) out.push_back(determinant(submatrix(a, rows, cols)));
    return out;
}

std::vector<Poly> minors_ideal(int m, int n, int t, const CoefficientRing& ring)
{
    if (t < 1 || t > std::min(m, n)) throw InvalidInput("minor size t must satisfy 1 <= t <= min(m, n)");
    return minors(generic_matrix(m, n, ring), t);
}

std::vector<Poly> pfaffians_ideal(int n, int t, const CoefficientRing& ring)
{
    if (t % 2 || t < 2 || t > n) throw InvalidInput("Pfaffian size t must be even with 2 <= t <= n");
    auto a = alternating_matrix(n, ring);
    std::vector<Poly> out;
    for (const auto& s : subsets(n, t)) out.push_back(pfaffian(submatrix(a, s, s)));
    return out;
}

std::vector<Poly> symmetric_minors_ideal(int n, int t, const CoefficientRing& ring)
{
    if (t < 1 || t > n) throw InvalidInput("minor size t must satisfy 1 <= t <= n");
    return minors(symmetric_matrix(n, ring), t);
}

std::vector<Poly> stanley_reisner(int n, const std::vector<Face>& nonfaces, const CoefficientRing& ring)
{
    if (n < 1 || n > 31) throw InvalidInput("vertex count must be between 1 and 31");
    std::vector<Poly> out;
    for (Face f : nonfaces) {
        if (f == 0) throw InvalidInput("the empty set cannot be a nonface");
        if (f >> n) throw InvalidInput("nonface uses a vertex outside 1.." + std::to_string(n));
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int v : face_vertices(f)) e[static_cast<std::size_t>(v - 1)] = 1;
        out.push_back(Poly::monomial(ring, n, e));
    }
    return out;
}

Poly hypersurface_Bdt(int d, int t)
{
    if (d < 1 || t < 1) throw InvalidInput("B_{d,t} needs d >= 1 and t >= 1");
    const auto zz = CoefficientRing::integers();
    Exponent top(static_cast<std::size_t>(2 * d), 0);
    for (int i = 0; i < d; ++i) top[static_cast<std::size_t>(i)] = t;
    Poly f = Poly::monomial(zz, 2 * d, top);
    for (int i = 0; i < d; ++i) {
        Exponent e(static_cast<std::size_t>(2 * d), 0);
        e[static_cast<std::size_t>(i)] = t + 1;
        e[static_cast<std::size_t>(d + i)] = 1;
        f.add_term(e, -1);
    }
    return f;
}

const std::vector<Face>& rp2_nonfaces()
{
    static const std::vector<Face> f = parse_face_list("123,124,135,146,156,236,245,256,345,346", 6);
    return f;
}

IdealFamilySpec IdealFamilySpec::parse(const std::string& text)
{
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    IdealFamilySpec s;
    if (tag == "generic") s.family = Family::Generic;
    else if (tag == "alternating") s.family = Family::Alternating;
    else if (tag == "symmetric") s.family = Family::Symmetric;
    else if (tag == "sr") s.family = Family::StanleyReisner;
    else if (tag == "bdt") s.family = Family::HypersurfaceBdt;
    else throw InvalidInput("unknown family `" + tag + "`");
    std::map<std::string, std::string> kv;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) throw InvalidInput("expected key=value, got `" + tok + "`");
        std::string key = tok.substr(0, eq);
        if (kv.count(key)) throw InvalidInput("repeated key `" + key + "`");
        kv[key] = tok.substr(eq + 1);
    }
    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw InvalidInput("family `" + tag + "` needs " + key + "=");
        int v = parse_int_value(key, it->second);
        kv.erase(it);
        return v;
    };
    switch (s.family) {
    case Family::Generic:
        s.m = take("m");
        s.n = take("n");
        s.t = take("t");
        if (s.m < 1 || s.n < 1 || s.t < 1 || s.t > std::min(s.m, s.n))
            throw InvalidInput("generic family needs m, n >= 1 and 1 <= t <= min(m, n)");
        break;
    case Family::Alternating:
        s.n = take("n");
        s.t = take("t");
        if (s.t % 2 || s.t < 2 || s.t > s.n) throw InvalidInput("alternating family needs t even with 2 <= t <= n");
        break;
    case Family::Symmetric:
        s.n = take("n");
        s.t = take("t");
        if (s.t < 1 || s.t > s.n) throw InvalidInput("symmetric family needs 1 <= t <= n");
        break;
    case Family::StanleyReisner: {
        s.n = take("n");
        if (s.n < 1 || s.n > 24) throw InvalidInput("sr family needs 1 <= n <= 24");
        auto it = kv.find("nonfaces");
        if (it == kv.end()) throw InvalidInput("family `sr` needs nonfaces=");
        if (it->second == "RP2" || it->second == "<RP2>") {
            if (s.n != 6) throw InvalidInput("the RP2 nonfaces need n=6");
            s.nonfaces = rp2_nonfaces();
        } else {
            s.nonfaces = parse_face_list(it->second, s.n);
        }
        for (Face f : s.nonfaces)
            if (f == 0) throw InvalidInput("the empty set cannot be a nonface");
        kv.erase(it);
        break;
    }
    case Family::HypersurfaceBdt:
        s.d = take("d");
        s.t = take("t");
        if (s.d < 1 || s.t < 1) throw InvalidInput("bdt family needs d >= 1 and t >= 1");
        break;
    }
    if (!kv.empty()) throw InvalidInput("unexpected key `" + kv.begin()->first + "` for family `" + tag + "`");
    return s;
}

std::string IdealFamilySpec::tag() const
{
    switch (family) {
    case Family::Generic: return "generic";
    case Family::Alternating: return "alternating";
    case Family::Symmetric: return "symmetric";
    case Family::StanleyReisner: return "sr";
    case Family::HypersurfaceBdt: return "bdt";
    }
    return "";
}

std::string IdealFamilySpec::to_string() const
{
    switch (family) {
    case Family::Generic:
        return "generic m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
    case Family::Alternating:
    case Family::Symmetric:
        return tag() + " n=" + std::to_string(n) + " t=" + std::to_string(t);
    case Family::StanleyReisner:
        return "sr n=" + std::to_string(n) + " nonfaces=[" + format_face_list(nonfaces) + "]";
    case Family::HypersurfaceBdt:
        return "bdt d=" + std::to_string(d) + " t=" + std::to_string(t);
    }
    return "";
}

int IdealFamilySpec::nvars() const
{
    switch (family) {
    case Family::Generic: return m * n;
    case Family::Alternating: return static_cast<int>(choose2(n));
    case Family::Symmetric: return static_cast<int>(choose2(n + 1));
    case Family::StanleyReisner: return n;
    case Family::HypersurfaceBdt: return 2 * d;
    }
    return 0;
}

std::vector<Poly> IdealFamilySpec::generators(const CoefficientRing& ring) const
{
    switch (family) {
    case Family::Generic: return minors_ideal(m, n, t, ring);
    case Family::Alternating: return pfaffians_ideal(n, t, ring);
    case Family::Symmetric: return symmetric_minors_ideal(n, t, ring);
    case Family::StanleyReisner: return stanley_reisner(n, nonfaces, ring);
    case Family::HypersurfaceBdt: return {hypersurface_Bdt(d, t).change_ring(ring)};
    }
    return {};
}

FamilyInvariants family_invariants(const IdealFamilySpec& spec, std::uint64_t characteristic)
{
    FamilyInvariants f;
    const std::int64_t m = spec.m, n = spec.n, t = spec.t;
    switch (spec.family) {
    case Family::Generic:
        f.height = (m - t + 1) * (n - t + 1);
        f.ara = m * n - t * t + 1;
        break;
    case Family::Alternating:
        f.height = binom(n - t + 2, 2);
        f.ara = choose2(n) - choose2(t) + 1;
        break;
    case Family::Symmetric:
        f.height = binom(n - t + 2, 2);
        f.ara = characteristic == 2 && t % 2 == 0 ? choose2(n) - choose2(t) + 1 : choose2(n + 1) - choose2(t + 1) + 1;
        break;
    default:
        throw InvalidInput("closed-form invariants exist only for the generic, alternating and symmetric families");
    }
    f.critical_index = f.ara;
    return f;
}

VanishingPrediction vanishing_predict(std::int64_t dimA, const IdealFamilySpec& spec)
{
    if (dimA < 0) throw InvalidInput("dimension must be nonnegative");
    VanishingPrediction v;
    const std::int64_t m = spec.m, n = spec.n, t = spec.t;
    switch (spec.family) {
    case Family::Generic:
        if (t < 1 || t > std::min(m, n) || (t == m && t == n)) {
            v.reason = "theorem inapplicable: needs 1 <= t <= min(m, n) with t different from m or from n";
            return v;
        }
        v.index = m * n - t * t + 1;
        v.threshold = m * n;
        break;
    case Family::Alternating:
        if (t % 2 || t <= 2 || t >= n) {
            v.reason = "theorem inapplicable: needs t even with 2 < t < n";
            return v;
        }
        v.index = choose2(n) - choose2(t) + 1;
        v.threshold = choose2(n);
        break;
    case Family::Symmetric:
        if (t % 2 == 0) {
            v.reason = "theorem inapplicable: no vanishing statement for even-sized symmetric minors";
            return v;
        }
        if (t <= 1 || t >= n) {
            v.reason = "theorem inapplicable: needs t odd with 1 < t < n";
            return v;
        }
        v.index = choose2(n + 1) - choose2(t + 1) + 1;
        v.threshold = choose2(n + 1);
        break;
    default:
        v.reason = "theorem inapplicable: no vanishing statement for this family";
        return v;
    }
    v.applicable = true;
    v.vanishes = dimA < v.threshold;
    v.reason = v.vanishes ? "dim A = " + std::to_string(dimA) + " < " + std::to_string(v.threshold)
                          : "dim A = " + std::to_string(dimA) + " is not below " + std::to_string(v.threshold);
    return v;
}

MembershipRecord certify_membership(const std::string& claim, const Poly& target, const std::vector<Poly>& gens,
                                    unsigned first, unsigned last, int D)
{
    MembershipRecord r;
    r.claim = claim;
    r.target = target;
    r.generators = gens;
    r.bound = D;
    for (unsigned N = first; N <= last; ++N) {
        Poly h = target.pow(N);
        r.power = N;
        auto cert = membership_solve(h, gens, D);
        if (!cert) continue;
        Poly sum(cert->multipliers.empty() ? h.ring() : cert->multipliers[0].ring(), h.nvars());
        for (std::size_t i = 0; i < gens.size(); ++i) sum += cert->multipliers[i] * gens[i].change_ring(sum.ring());
        r.found = true;
        r.multipliers = cert->multipliers;
        r.verified = sum == h.change_ring(sum.ring());
        return r;
    }
    return r;
}

LocalizationReport localization_check(int m, int n, int t, int N, int D)
{
    if (t < 2 || t > std::min(m, n)) throw InvalidInput("localization check needs 2 <= t <= min(m, n)");
    if (N < 0 || D < 0) throw InvalidInput("N and D must be nonnegative");
    const auto qq = CoefficientRing::rationals();
    LocalizationReport rep;
    rep.m = m;
    rep.n = n;
    rep.t = t;
    rep.N = N;
    rep.D = D;
    auto x = generic_matrix(m, n, qq);
    std::vector<std::vector<Poly>> y(static_cast<std::size_t>(m - 1));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < n; ++j)
            y[static_cast<std::size_t>(i - 1)].push_back(x[0][0] * x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                                         x[static_cast<std::size_t>(i)][0] * x[0][static_cast<std::size_t>(j)]);
    rep.y_minors = minors(y, t - 1);
    auto it = minors(x, t);
    Poly clear = x[0][0].pow(static_cast<std::uint64_t>(N));
    for (const auto& delta : it) {
        auto r = certify_membership("x1^" + std::to_string(N) + " * (" + delta.to_string() + ") in I_{t-1}(Y')",
                                    clear * delta, rep.y_minors, 1, 1, D);
        if (!r.found && rep.failure.empty()) rep.failure = "no certificate within degree " + std::to_string(D) + " for " + r.claim;
        rep.forward.push_back(std::move(r));
    }
    for (const auto& ym : rep.y_minors) {
        auto r = certify_membership("x1^" + std::to_string(N) + " * (" + ym.to_string() + ") in I_t(X)", clear * ym, it, 1,
                                    1, D);
        if (!r.found && rep.failure.empty()) rep.failure = "no certificate within degree " + std::to_string(D) + " for " + r.claim;
        rep.backward.push_back(std::move(r));
    }
    rep.success = rep.failure.empty();
    for (const auto& r : rep.forward) rep.success = rep.success && r.verified;
    for (const auto& r : rep.backward) rep.success = rep.success && r.verified;
    return rep;
}

} // namespace lclab
