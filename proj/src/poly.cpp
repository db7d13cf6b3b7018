#include "yangian/poly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>

#include "yangian/errors.hpp"

namespace yangian {

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (auto e : exp)
        d += e;
    return d;
}

int grlex_compare(const Monomial& a, const Monomial& b)
{
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    for (std::size_t i = 0; i < kParamCount; ++i) {
        if (a.exp[i] != b.exp[i])
            return a.exp[i] < b.exp[i] ? -1 : 1;
    }
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (std::size_t i = 0; i < kParamCount; ++i) {
        const unsigned e = unsigned(a.exp[i]) + b.exp[i];
        if (e > 255)
            throw CapacityError("monomial exponent overflow");
        m.exp[i] = static_cast<std::uint8_t>(e);
    }
    return m;
}

bool divides(const Monomial& d, const Monomial& m)
{
    for (std::size_t i = 0; i < kParamCount; ++i) {
        if (d.exp[i] > m.exp[i])
            return false;
    }
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& d)
{
    Monomial q;
    for (std::size_t i = 0; i < kParamCount; ++i)
        q.exp[i] = static_cast<std::uint8_t>(m.exp[i] - d.exp[i]);
    return q;
}

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b)
{
    return grlex_compare(a.mono, b.mono) > 0;
}

} // namespace

Poly::Poly(long c)
{
    if (c != 0)
        terms_.push_back({Monomial{}, mpz_class(c)});
}

Poly::Poly(mpz_class c)
{
    if (c != 0)
        terms_.push_back({Monomial{}, std::move(c)});
}

Poly Poly::variable(ParamId id, unsigned power)
{
    Monomial m;
    m.exp[id.index] = static_cast<std::uint8_t>(power);
    return monomial(m, 1);
}

Poly Poly::monomial(const Monomial& m, mpz_class c)
{
    Poly out;
    if (c != 0)
        out.terms_.push_back({m, std::move(c)});
    return out;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), term_greater);
    Poly out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono)
            out.terms_.back().coeff += t.coeff;
        else
            out.terms_.push_back(std::move(t));
        if (out.terms_.back().coeff == 0)
            out.terms_.pop_back();
    }
    return out;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const
{
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

mpz_class Poly::constant_value() const
{
    if (terms_.empty())
        return 0;
    return terms_.back().mono.is_one() ? terms_.back().coeff : mpz_class(0);
}

int Poly::degree_in(ParamId id) const
{
    int d = 0;
    for (const auto& t : terms_)
        d = std::max(d, int(t.mono.exp[id.index]));
    return d;
}

int Poly::valuation_in(ParamId id) const
{
    if (terms_.empty())
        return 0;
    int v = 255;
    for (const auto& t : terms_)
        v = std::min(v, int(t.mono.exp[id.index]));
    return v;
}

bool Poly::contains_any() const
{
    for (const auto& t : terms_) {
        if (!t.mono.is_one())
            return true;
    }
    return false;
}

unsigned Poly::total_degree() const
{
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

mpz_class Poly::content() const
{
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Poly Poly::scaled(const mpz_class& c) const
{
    if (c == 0)
        return {};
    Poly out = *this;
    for (auto& t : out.terms_)
        t.coeff *= c;
    return out;
}

Poly Poly::times_monomial(const Monomial& m, const mpz_class& c) const
{
    if (c == 0)
        return {};
    Poly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& t : out.terms_)
        t.coeff = -t.coeff;
    return out;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, bool negate_b)
{
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = grlex_compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (negate_b)
                out.back().coeff = -out.back().coeff;
        } else {
            mpz_class s = negate_b ? mpz_class(a[i].coeff - b[j].coeff)
                                   : mpz_class(a[i].coeff + b[j].coeff);
            if (s != 0)
                out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly& Poly::operator+=(const Poly& o)
{
    if (o.terms_.empty())
        return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.terms_.empty())
        return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.is_constant())
        return b.scaled(a.terms_[0].coeff);
    if (b.is_constant())
        return a.scaled(b.terms_[0].coeff);
    std::vector<Poly::Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_)
            terms.push_back({x.mono * y.mono, x.coeff * y.coeff});
    }
    return Poly::from_terms(std::move(terms));
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    }
    return true;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        bool wrote = false;
        if (c != 1 || t.mono.is_one()) {
            os << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < kParamCount; ++i) {
            const unsigned e = t.mono.exp[i];
            if (e == 0)
                continue;
            if (wrote)
                os << "*";
            os << param_name(ParamId{static_cast<std::uint8_t>(i)});
            if (e > 1)
                os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw AlgebraError("polynomial division by zero");
    if (a.is_zero())
        return Poly{};
    if (b.is_constant()) {
        const mpz_class& c = b.leading().coeff;
        std::vector<Poly::Term> terms = a.terms();
        for (auto& t : terms) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
                return std::nullopt;
            mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
        }
        return Poly::from_terms(std::move(terms));
    }
    const auto& lt = b.leading();
    Poly rem = a;
    std::vector<Poly::Term> q;
    while (!rem.is_zero()) {
        const auto& r = rem.leading();
        if (!divides(lt.mono, r.mono))
            return std::nullopt;
        if (!mpz_divisible_p(r.coeff.get_mpz_t(), lt.coeff.get_mpz_t()))
            return std::nullopt;
        Monomial m = quotient(r.mono, lt.mono);
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r.coeff.get_mpz_t(), lt.coeff.get_mpz_t());
        rem -= b.times_monomial(m, c);
        q.push_back({m, std::move(c)});
    }
    return Poly::from_terms(std::move(q));
}

std::vector<Poly> coefficients_in(const Poly& a, ParamId x)
{
    std::vector<std::vector<Poly::Term>> buckets(std::size_t(a.degree_in(x)) + 1);
    for (const auto& t : a.terms()) {
        Poly::Term s = t;
        const unsigned e = s.mono.exp[x.index];
        s.mono.exp[x.index] = 0;
        buckets[e].push_back(std::move(s));
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

Poly from_coefficients(const std::vector<Poly>& coeffs, ParamId x)
{
    std::vector<Poly::Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto& t : coeffs[i].terms()) {
            Poly::Term s = t;
            s.mono.exp[x.index] = static_cast<std::uint8_t>(s.mono.exp[x.index] + i);
            terms.push_back(std::move(s));
        }
    }
    return Poly::from_terms(std::move(terms));
}

namespace {

Poly positive(Poly a)
{
    if (!a.is_zero() && a.leading().coeff < 0)
        return -a;
    return a;
}

Poly exact(const Poly& a, const Poly& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw AlgebraError("internal: expected exact polynomial division");
    return *q;
}

Poly content_in(const Poly& a, ParamId x)
{
    Poly g;
    for (const auto& c : coefficients_in(a, x)) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

Poly primitive_part_in(const Poly& a, ParamId x)
{
    if (a.is_zero())
        return a;
    return positive(exact(a, content_in(a, x)));
}

// Pseudo-remainder of a by b as polynomials in x.
Poly pseudo_remainder(Poly a, const Poly& b, ParamId x)
{
    const int db = b.degree_in(x);
    const Poly lb = coefficients_in(b, x).back();
    while (!a.is_zero() && a.degree_in(x) >= db) {
        const int da = a.degree_in(x);
        const Poly la = coefficients_in(a, x).back();
        a = a * lb - la * b * Poly::variable(x, unsigned(da - db));
    }
    return a;
}

Poly monomial_gcd(const Poly& m, const Poly& other)
{
    Monomial g = m.leading().mono;
    for (const auto& t : other.terms()) {
        for (std::size_t i = 0; i < kParamCount; ++i)
            g.exp[i] = std::min(g.exp[i], t.mono.exp[i]);
    }
    mpz_class c;
    mpz_class oc = other.content();
    mpz_gcd(c.get_mpz_t(), m.leading().coeff.get_mpz_t(), oc.get_mpz_t());
    return Poly::monomial(g, c);
}

Poly integer_gcd(const Poly& a, const Poly& b)
{
    mpz_class c;
    mpz_class ca = a.content();
    mpz_class cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly(c);
}

// Degree bounds for the gcd from a univariate image modulo a prime. When the
// evaluation keeps both leading coefficients in x alive, the image gcd has
// degree at least deg_x gcd(a, b).
constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1)
            r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ModPoly image(const Poly& a, ParamId x, const std::array<std::uint64_t, kParamCount>& point)
{
    ModPoly out(std::size_t(a.degree_in(x)) + 1, 0);
    for (const auto& t : a.terms()) {
        std::uint64_t c = mpz_fdiv_ui(t.coeff.get_mpz_t(), kPrime);
        for (std::size_t i = 0; i < kParamCount; ++i) {
            if (i != x.index && t.mono.exp[i] > 0)
                c = c * pow_mod(point[i], t.mono.exp[i]) % kPrime;
        }
        auto& slot = out[t.mono.exp[x.index]];
        slot = (slot + c) % kPrime;
    }
    return out;
}

int mod_gcd_degree(ModPoly a, ModPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
        while (a.size() >= b.size()) {
            const std::uint64_t f = a.back() * inv % kPrime;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + kPrime - f * b[i] % kPrime) % kPrime;
            trim(a);
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    return int(a.size()) - 1;
}

// Upper bound on deg_x gcd(a, b), or -1 when no lucky evaluation was found.
int gcd_degree_bound(const Poly& a, const Poly& b, ParamId x)
{
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL + x.index;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::array<std::uint64_t, kParamCount> point{};
        for (auto& c : point) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            c = (seed >> 33) % (kPrime - 2) + 2;
        }
        ModPoly ia = image(a, x, point);
        ModPoly ib = image(b, x, point);
        if (ia.back() == 0 || ib.back() == 0)
            continue;
        return mod_gcd_degree(std::move(ia), std::move(ib));
    }
    return -1;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return positive(b);
    if (b.is_zero())
        return positive(a);
    if (a.is_constant() || b.is_constant())
        return integer_gcd(a, b);
    if (a.is_monomial())
        return monomial_gcd(a, b);
    if (b.is_monomial())
        return monomial_gcd(b, a);
    if (a == b || a == -b)
        return positive(a);

    // A variable present in only one argument cannot divide the gcd.
    for (std::size_t i = 0; i < kParamCount; ++i) {
        const ParamId id{static_cast<std::uint8_t>(i)};
        const bool in_a = a.contains(id);
        const bool in_b = b.contains(id);
        if (in_a && !in_b)
            return gcd(content_in(a, id), b);
        if (in_b && !in_a)
            return gcd(a, content_in(b, id));
    }

    std::optional<ParamId> main;
    int main_bound = 0;
    bool exact_bounds = true;
    for (std::size_t i = 0; i < kParamCount; ++i) {
        const ParamId id{static_cast<std::uint8_t>(i)};
        if (!a.contains(id))
            continue;
        int bound = gcd_degree_bound(a, b, id);
        if (bound < 0)
            bound = std::min(a.degree_in(id), b.degree_in(id));
        if (bound != std::min(a.degree_in(id), b.degree_in(id)))
            exact_bounds = false;
        if (bound > 0 && (!main || bound < main_bound)) {
            main = id;
            main_bound = bound;
        }
    }
    if (!main)
        return integer_gcd(a, b);

    if (exact_bounds) {
        // One argument may divide the other.
        const Poly& small = a.terms().size() <= b.terms().size() ? a : b;
        const Poly& large = &small == &a ? b : a;
        const Poly prim = positive(exact(small, Poly(small.content())));
        if (divide_exact(large, prim))
            return prim * integer_gcd(a, b);
    }

    const ParamId x = *main;
    const Poly ca = content_in(a, x);
    const Poly cb = content_in(b, x);
    const Poly c = gcd(ca, cb);
    Poly pa = positive(exact(a, ca));
    Poly pb = positive(exact(b, cb));
    if (pa.degree_in(x) < pb.degree_in(x))
        std::swap(pa, pb);

    Poly g;
    for (;;) {
        Poly r = pseudo_remainder(pa, pb, x);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (r.degree_in(x) == 0) {
            g = Poly(1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part_in(r, x);
    }
    return positive(c * primitive_part_in(g, x));
}

} // namespace yangian
