#include "lclab/poly.hpp"

#include <cctype>
#include <unordered_map>

namespace lclab {

namespace {

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (int x : e) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ULL;
        return h;
    }
};

std::string format_exponent(const Exponent& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

CoefficientRing CoefficientRing::prime_field(std::uint64_t p)
{
    require_prime(p, "coefficient ring");
    if (p >= (1ULL << 31)) throw InvalidInput("prime too large for polynomial coefficients");
    return {Kind::PrimeField, p};
}

CoefficientRing CoefficientRing::from_characteristic(std::uint64_t c)
{
    return c == 0 ? integers() : prime_field(c);
}

mpq_class CoefficientRing::normalize(const mpq_class& c) const
{
    switch (kind) {
    case Kind::Integers:
        if (c.get_den() != 1) throw InvalidInput("non-integer coefficient in integer ring");
        return c;
    case Kind::Rationals:
        return c;
    case Kind::PrimeField: {
        std::uint64_t den = reduce_mod(c.get_den(), p);
        if (den == 0) throw InvalidInput("denominator divisible by the characteristic");
        std::uint64_t num = reduce_mod(c.get_num(), p);
        return mpq_class(static_cast<unsigned long>(num * mod_inverse(den, p) % p));
    }
    }
    return c;
}

std::string CoefficientRing::descriptor() const
{
    switch (kind) {
    case Kind::Integers: return "ZZ";
    case Kind::Rationals: return "QQ";
    case Kind::PrimeField: return "GF(" + std::to_string(p) + ")";
    }
    return "";
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    int da = exponent_degree(a), db = exponent_degree(b);
    if (da != db) return da > db;
    return a > b;
}

int exponent_degree(const Exponent& e)
{
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Poly Poly::constant(CoefficientRing ring, int nvars, const mpq_class& c)
{
    return monomial(ring, nvars, Exponent(static_cast<std::size_t>(nvars), 0), c);
}

Poly Poly::variable(CoefficientRing ring, int nvars, int i)
{
    if (i < 1 || i > nvars) throw InvalidInput("variable index out of range: x" + std::to_string(i));
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(ring, nvars, std::move(e), 1);
}

Poly Poly::monomial(CoefficientRing ring, int nvars, Exponent e, const mpq_class& c)
{
    if (static_cast<int>(e.size()) != nvars) throw InvalidInput("exponent length does not match variable count");
    Poly out(ring, nvars);
    out.add_term(e, c);
    return out;
}

void Poly::add_term(const Exponent& e, const mpq_class& c)
{
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        mpq_class v = ring_.normalize(c);
        if (v != 0) terms_.emplace(e, std::move(v));
        return;
    }
    it->second = ring_.normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
}

void Poly::require_compatible(const Poly& o) const
{
    if (!(ring_ == o.ring_) || nvars_ != o.nvars_)
        throw InvalidInput("ring mismatch: " + ring_.descriptor() + "[" + std::to_string(nvars_) + "] vs " +
                           o.ring_.descriptor() + "[" + std::to_string(o.nvars_) + "]");
}

Poly& Poly::operator+=(const Poly& o)
{
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    require_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const
{
    return scale(-1);
}

Poly Poly::operator*(const Poly& o) const
{
    require_compatible(o);
    std::unordered_map<Exponent, mpq_class, ExponentHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
            acc[e] += ca * cb;
        }
    Poly r(ring_, nvars_);
    for (auto& [x, c] : acc) {
        mpq_class v = ring_.normalize(c);
        if (v != 0) r.terms_.emplace(x, std::move(v));
    }
    return r;
}

Poly Poly::scale(const mpq_class& c) const
{
    Poly r(ring_, nvars_);
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

Poly Poly::pow(std::uint64_t e) const
{
    Poly result = constant(ring_, nvars_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::shift(const Exponent& s) const
{
    Poly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponent x = e;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += s[i];
        r.terms_.emplace(std::move(x), c);
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const
{
    if (static_cast<int>(images.size()) != nvars_) throw InvalidInput("substitute: need one image per variable");
    if (images.empty()) return *this;
    const auto& tr = images[0].ring();
    const int tn = images[0].nvars();
    for (const auto& g : images)
        if (!(g.ring() == tr) || g.nvars() != tn) throw InvalidInput("substitute: images in different rings");
    Poly out(tr, tn);
    for (const auto& [e, c] : terms_) {
        Poly t = constant(tr, tn, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw InvalidInput("substitute: negative exponent");
            if (e[i] > 0) t = t * images[i].pow(static_cast<std::uint64_t>(e[i]));
        }
        out += t;
    }
    return out;
}

bool Poly::operator==(const Poly& o) const
{
    return ring_ == o.ring_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

int Poly::degree() const
{
    return terms_.empty() ? 0 : exponent_degree(terms_.begin()->first);
}

int Poly::min_degree() const
{
    return terms_.empty() ? 0 : exponent_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous() const
{
    return degree() == min_degree();
}

bool Poly::has_negative_exponents() const
{
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

const Exponent& Poly::leading_exponent() const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const mpq_class& Poly::leading_coefficient() const
{
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Poly Poly::change_ring(CoefficientRing target) const
{
    Poly r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

Poly Poly::widen(int nvars) const
{
    if (nvars < nvars_) throw InvalidInput("widen: fewer variables");
    Poly r(ring_, nvars);
    for (const auto& [e, c] : terms_) {
        Exponent x = e;
        x.resize(static_cast<std::size_t>(nvars), 0);
        r.terms_.emplace(std::move(x), c);
    }
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono = format_exponent(e);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

Poly Poly::parse(const std::string& text, CoefficientRing ring, int nvars)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidInput("empty polynomial");
    Poly out(ring, nvars);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw InvalidInput("cannot parse polynomial '" + text + "': " + why);
    };
    auto read_int = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected a number at position " + std::to_string(start));
        return s.substr(start, i - start);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected '+' or '-' at position " + std::to_string(i));
        }
        mpq_class coef = sign;
        Exponent e(static_cast<std::size_t>(nvars), 0);
        bool any = false;
        while (true) {
            if (i < s.size() && s[i] == 'x') {
                ++i;
                int v = std::stoi(read_int());
                if (v < 1 || v > nvars) fail("variable x" + std::to_string(v) + " out of range");
                long ex = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    bool negexp = false;
                    if (i < s.size() && s[i] == '-') {
                        negexp = true;
                        ++i;
                    }
                    ex = std::stol(read_int());
                    if (negexp) ex = -ex;
                }
                e[static_cast<std::size_t>(v - 1)] += static_cast<int>(ex);
            } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                mpq_class c{mpz_class(read_int())};
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    mpz_class den{read_int()};
                    if (den == 0) fail("zero denominator");
                    c /= den;
                }
                coef *= c;
            } else {
                fail("unexpected character at position " + std::to_string(i));
            }
            any = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        out.add_term(e, coef);
    }
    return out;
}

Poly apply_divided_power(int i, unsigned t, const Poly& g)
{
    if (i < 1 || i > g.nvars()) throw InvalidInput("divided power: variable index out of range");
    const std::size_t v = static_cast<std::size_t>(i - 1);
    Poly out(g.ring(), g.nvars());
    for (const auto& [e, c] : g.terms()) {
        mpz_class b = generalized_binomial(mpz_class(e[v]), t);
        if (b == 0) continue;
        Exponent x = e;
        x[v] -= static_cast<int>(t);
        out.add_term(x, c * b);
    }
    return out;
}

namespace {

void euler_rec(unsigned k, std::size_t pos, Exponent& t, const Poly& g, Poly& acc)
{
    const std::size_t n = t.size();
    if (pos + 1 == n) {
        t[pos] = static_cast<int>(k);
        Poly h = g;
        for (std::size_t i = 0; i < n && !h.is_zero(); ++i)
            if (t[i] > 0) h = apply_divided_power(static_cast<int>(i + 1), static_cast<unsigned>(t[i]), h);
        acc += h.shift(t);
        t[pos] = 0;
        return;
    }
    for (unsigned a = 0; a <= k; ++a) {
        t[pos] = static_cast<int>(a);
        euler_rec(k - a, pos + 1, t, g, acc);
    }
    t[pos] = 0;
}

} // namespace

Poly euler_apply(unsigned k, const Poly& g)
{
    if (k == 0) throw InvalidInput("Euler operator index must be positive");
    Poly acc(g.ring(), g.nvars());
    if (g.nvars() == 0) return acc;
    Exponent t(static_cast<std::size_t>(g.nvars()), 0);
    euler_rec(k, 0, t, g, acc);
    return acc;
}

std::vector<Poly> bracket_power(const std::vector<Poly>& gens, std::uint64_t q)
{
    if (q == 0) throw InvalidInput("bracket power exponent must be positive");
    std::vector<Poly> out;
    out.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.ring().kind == CoefficientRing::Kind::PrimeField) {
            if (p_power_exponent(q, g.ring().p) < 0)
                throw InvalidInput(std::to_string(q) + " is not a power of the characteristic " +
                                   std::to_string(g.ring().p));
            // (sum c m)^q = sum c m^q since c^q = c in F_p
            Poly r(g.ring(), g.nvars());
            for (const auto& [e, c] : g.terms()) {
                Exponent x = e;
                for (int& a : x) a *= static_cast<int>(q);
                r.add_term(x, c);
            }
            out.push_back(std::move(r));
        } else {
            out.push_back(g.pow(q));
        }
    }
    return out;
}

} // namespace lclab
