#include "lclab/galois_field.hpp"

#include <algorithm>
#include <cctype>

#include "lclab/dense_matrix.hpp"

namespace lclab {

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((unsigned __int128)a * b % p);
}

void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic m
Coeffs poly_rem(Coeffs a, const Coeffs& m, std::uint64_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i <= dm; ++i)
                a[shift + i] = (a[shift + i] + p - mulmod(lead, m[i], p)) % p;
        a.pop_back();
        trim(a);
    }
    return a;
}

bool divides(const Coeffs& g, const Coeffs& f, std::uint64_t p)
{
    return poly_rem(f, g, p).empty();
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of code.
Coeffs monic_from_code(std::uint64_t code, unsigned d, std::uint64_t p)
{
    Coeffs c(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        c[i] = code % p;
        code /= p;
    }
    c[d] = 1;
    return c;
}

std::uint64_t checked_order(std::uint64_t p, unsigned k)
{
    std::uint64_t q = checked_pow(p, k);
    if (k > 1 && q > (std::uint64_t(1) << 40))
        throw InvalidInput("extension field too large: p^k must not exceed 2^40");
    return q;
}

std::string format_poly_in_a(const Coeffs& c)
{
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
        if (mono.empty())
            out += std::to_string(c[i]);
        else if (c[i] == 1)
            out += mono;
        else
            out += std::to_string(c[i]) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

// Integer-coefficient polynomial in `a`, e.g. "2*a^2 - a + 1".
std::vector<std::pair<unsigned, std::int64_t>> parse_poly_in_a(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidInput("empty field element");
    std::vector<std::pair<unsigned, std::int64_t>> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            throw InvalidInput("bad field element: " + text);
        }
        std::int64_t coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coef = std::stoll(s.substr(i, j - i));
            have_coef = true;
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
            else if (i < s.size() && s[i] == 'a') throw InvalidInput("missing '*' in: " + text);
        }
        unsigned power = 0;
        if (i < s.size() && s[i] == 'a') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                std::size_t j = ++i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw InvalidInput("bad exponent in: " + text);
                power = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
                i = j;
            }
        } else if (!have_coef) {
            throw InvalidInput("bad field element: " + text);
        }
        terms.emplace_back(power, sign * coef);
    }
    return terms;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p)
{
    if (f.size() < 2 || f.back() != 1) throw InvalidInput("modulus must be monic of positive degree");
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= k / 2; ++d) {
        const std::uint64_t count = checked_pow(p, d);
        for (std::uint64_t code = 0; code < count; ++code)
            if (divides(monic_from_code(code, d, p), f, p)) return false;
    }
    return true;
}

GaloisField::GaloisField(std::uint64_t p) : p_(p), k_(1), q_(p), mod_{0, 1}
{
    require_prime(p, "GF");
}

GaloisField::GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(0), q_(0), mod_(std::move(modulus))
{
    require_prime(p, "GF");
    for (auto& c : mod_) c %= p;
    trim(mod_);
    if (mod_.size() < 2 || mod_.back() != 1) throw InvalidInput("modulus must be monic of positive degree");
    k_ = static_cast<unsigned>(mod_.size() - 1);
    if (k_ > max_degree)
        throw InvalidInput("extension degree " + std::to_string(k_) + " exceeds the cap of 12");
    q_ = checked_order(p, k_);
    if (k_ == 1) {
        mod_ = {0, 1};
        return;
    }
    if (!is_irreducible_mod_p(mod_, p)) throw InvalidInput("modulus is reducible over F_" + std::to_string(p));
}

GaloisField GaloisField::extension(std::uint64_t p, unsigned k)
{
    require_prime(p, "GF");
    if (k == 0) throw InvalidInput("extension degree must be positive");
    if (k == 1) return GaloisField(p);
    if (k > max_degree)
        throw InvalidInput("extension degree " + std::to_string(k) + " exceeds the cap of 12");
    const std::uint64_t count = checked_order(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
        Coeffs cand = monic_from_code(code, k, p);
        if (cand[0] == 0) continue;
        if (is_irreducible_mod_p(cand, p)) return GaloisField(p, cand);
    }
    throw std::logic_error("no irreducible polynomial found");
}

GaloisField GaloisField::parse(const std::string& raw)
{
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 4 || s.compare(0, 3, "GF(") != 0 || s.back() != ')')
        throw InvalidInput("bad field descriptor: " + raw);
    std::string body = s.substr(3, s.size() - 4);
    std::string modulus_text;
    auto semi = body.find(';');
    if (semi != std::string::npos) {
        std::string rest = body.substr(semi + 1);
        body = body.substr(0, semi);
        if (rest.compare(0, 8, "modulus=") != 0) throw InvalidInput("bad field descriptor: " + raw);
        modulus_text = rest.substr(8);
    }
    std::uint64_t p = 0;
    unsigned k = 1;
    try {
        auto caret = body.find('^');
        p = std::stoull(body.substr(0, caret));
        if (caret != std::string::npos) k = static_cast<unsigned>(std::stoul(body.substr(caret + 1)));
    } catch (const std::logic_error&) {
        throw InvalidInput("bad field descriptor: " + raw);
    }
    if (!is_prime(p)) {
        // allow GF(q) with q a prime power
        for (std::uint64_t f = 2; f <= p; ++f)
            if (p % f == 0) {
                int e = p_power_exponent(p, f);
                if (e < 1 || !is_prime(f) || k != 1) throw InvalidInput("bad field order in: " + raw);
                p = f;
                k = static_cast<unsigned>(e);
                break;
            }
    }
    if (modulus_text.empty()) return extension(p, k);
    Coeffs m(1, 0);
    for (auto [pow, c] : parse_poly_in_a(modulus_text)) {
        if (m.size() <= pow) m.resize(pow + 1, 0);
        std::int64_t r = c % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        m[pow] = (m[pow] + static_cast<std::uint64_t>(r)) % p;
    }
    trim(m);
    GaloisField f(p, m);
    if (f.degree() != k) throw InvalidInput("modulus degree does not match field order in: " + raw);
    return f;
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::from_digits(const std::vector<std::uint64_t>& c) const
{
    Coeffs r = c;
    for (auto& x : r) x %= p_;
    if (r.size() > k_) r = poly_rem(r, mod_, p_);
    Elem code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return code;
}

std::vector<std::uint64_t> GaloisField::digits(Elem x) const
{
    std::vector<std::uint64_t> c(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

GaloisField::Elem GaloisField::add(Elem x, Elem y) const
{
    if (k_ == 1) return (x + y) % p_;
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return out;
}

GaloisField::Elem GaloisField::neg(Elem x) const
{
    if (k_ == 1) return x == 0 ? 0 : p_ - x;
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        Elem d = x % p_;
        out += ((p_ - d) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return out;
}

GaloisField::Elem GaloisField::sub(Elem x, Elem y) const
{
    return add(x, neg(y));
}

GaloisField::Elem GaloisField::mul(Elem x, Elem y) const
{
    if (k_ == 1) return mulmod(x, y, p_);
    if (x == 0 || y == 0) return 0;
    auto a = digits(x), b = digits(y);
    Coeffs prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p_)) % p_;
    }
    return from_digits(prod);
}

GaloisField::Elem GaloisField::pow(Elem x, std::uint64_t e) const
{
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

GaloisField::Elem GaloisField::inv(Elem x) const
{
    if (x == 0) throw std::domain_error("GF: zero has no inverse");
    if (k_ == 1) return mod_inverse(x, p_);
    return pow(x, q_ - 2);
}

GaloisField::Elem GaloisField::frob_inv(Elem x) const
{
    Elem r = x;
    for (unsigned i = 1; i < k_; ++i) r = frob(r);
    return r;
}

std::string GaloisField::format(Elem x) const
{
    if (k_ == 1) return std::to_string(x);
    return format_poly_in_a(digits(x));
}

GaloisField::Elem GaloisField::parse_elem(const std::string& text) const
{
    Elem acc = 0;
    const Elem a = k_ > 1 ? p_ : 0;
    for (auto [pow_a, c] : parse_poly_in_a(text)) {
        if (pow_a > 0 && k_ == 1) throw InvalidInput("prime field element cannot mention 'a': " + text);
        acc = add(acc, mul(from_int(c), pow(a, pow_a)));
    }
    return acc;
}

std::string GaloisField::descriptor() const
{
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + "; modulus=" + format_poly_in_a(mod_) + ")";
}

GaloisField::Elem FieldEmbedding::operator()(GaloisField::Elem x) const
{
    if (source.degree() == 1) return x;
    auto c = source.digits(x);
    GaloisField::Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = target.add(target.mul(acc, generator_image), c[i]);
    return acc;
}

FieldEmbedding FieldEmbedding::find(const GaloisField& source, const GaloisField& target)
{
    if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0)
        throw InvalidInput("no embedding " + source.descriptor() + " -> " + target.descriptor());
    if (source == target) return identity(source);
    if (source.degree() == 1) return {source, target, 0};
    const auto& m = source.modulus();
    if (target.order() > 20'000'000ULL) throw InvalidInput("embedding search space too large");
    for (GaloisField::Elem x = 0; x < target.order(); ++x) {
        GaloisField::Elem acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = target.add(target.mul(acc, x), m[i]);
        if (acc == 0) return {source, target, x};
    }
    throw std::logic_error("embedding not found");
}

FieldEmbedding FieldEmbedding::then(const FieldEmbedding& next) const
{
    if (target != next.source) throw std::logic_error("embedding composition mismatch");
    return {source, next.target, next(generator_image)};
}

std::optional<GaloisField::Elem> artin_schreier_solve(const GaloisField& field, GaloisField::Elem c)
{
    const GaloisField fp(field.characteristic());
    const unsigned k = field.degree();
    // t -> t^p - t is F_p-linear on F = F_p^k
    Matrix lin(k, k);
    for (unsigned i = 0; i < k; ++i) {
        auto basis = field.pow(field.degree() > 1 ? field.generator() : 1, i);
        auto img = field.sub(field.frob(basis), basis);
        auto d = field.digits(img);
        for (unsigned r = 0; r < k; ++r) lin(r, i) = d[r];
    }
    auto rhs = field.digits(field.neg(c));
    auto sol = solve(fp, lin, rhs);
    if (!sol) return std::nullopt;
    // kernel of t -> t^p - t is F_p, so the least root has zero constant coordinate
    std::vector<std::uint64_t> d(sol->begin(), sol->end());
    d[0] = 0;
    GaloisField::Elem t = field.from_digits(d);
    if (field.add(field.sub(field.frob(t), t), c) != 0)
        throw std::logic_error("artin_schreier_solve: root check failed");
    return t;
}

ArtinSchreierExtension extend_by_artin_schreier(const GaloisField& field, GaloisField::Elem c)
{
    if (artin_schreier_solve(field, c))
        throw InvalidInput("T^p - T + c already has a root in " + field.descriptor());
    const std::uint64_t p = field.characteristic();
    if (field.degree() == 1) {
        Coeffs m(p + 1, 0);
        m[0] = c % p;
        m[1] = p - 1;
        m[p] = 1;
        if (p > GaloisField::max_degree)
            throw InvalidInput("extension degree " + std::to_string(p) + " exceeds the cap of 12");
        GaloisField ext(p, m);
        return {FieldEmbedding{field, ext, 0}, ext.generator()};
    }
    const unsigned k = field.degree() * static_cast<unsigned>(p);
    if (k > GaloisField::max_degree)
        throw InvalidInput("extension degree " + std::to_string(k) + " exceeds the cap of 12");
    GaloisField ext = GaloisField::extension(p, k);
    FieldEmbedding emb = FieldEmbedding::find(field, ext);
    auto root = artin_schreier_solve(ext, emb(c));
    if (!root) throw std::logic_error("Artin-Schreier root missing in degree-p extension");
    return {emb, *root};
}

} // namespace lclab
