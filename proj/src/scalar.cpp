#include "yangian/scalar.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

namespace {

Poly exact_quotient(const Poly& a, const Poly& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw AlgebraError("internal: inexact division during canonicalisation");
    return *q;
}

} // namespace

Scalar Scalar::param(ParamId id) { return Scalar(Poly::variable(id)); }

Scalar Scalar::fraction(long num, long den) { return ratio(Poly(num), Poly(den)); }

Scalar Scalar::ratio(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw AlgebraError("division by the zero Scalar");
    if (num.is_zero())
        return Scalar();
    if (den.is_one())
        return Scalar(num);
    Poly g = gcd(num, den);
    Poly n = g.is_one() ? num : exact_quotient(num, g);
    Poly d = g.is_one() ? den : exact_quotient(den, g);
    if (d.leading().coeff < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), true);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, true); }

Scalar operator+(const Scalar& a, const Scalar& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one())
            return Scalar(a.num_ + b.num_);
        return Scalar::ratio(a.num_ + b.num_, a.den_);
    }
    const Poly g = gcd(a.den_, b.den_);
    if (g.is_one())
        return Scalar::ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const Poly ad = exact_quotient(a.den_, g);
    const Poly bd = exact_quotient(b.den_, g);
    return Scalar::ratio(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b)
{
    if (a.is_zero() || b.is_zero())
        return Scalar();
    if (a.den_.is_one() && b.den_.is_one())
        return Scalar(a.num_ * b.num_);
    // Cross-cancel so the product is already reduced.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    const Poly an = g1.is_one() ? a.num_ : exact_quotient(a.num_, g1);
    const Poly bd = g1.is_one() ? b.den_ : exact_quotient(b.den_, g1);
    const Poly bn = g2.is_one() ? b.num_ : exact_quotient(b.num_, g2);
    const Poly ad = g2.is_one() ? a.den_ : exact_quotient(a.den_, g2);
    Poly n = an * bn;
    Poly d = ad * bd;
    if (d.leading().coeff < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), true);
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    if (b.is_zero())
        throw AlgebraError("division by the zero Scalar");
    Poly n = b.den_;
    Poly d = b.num_;
    if (d.leading().coeff < 0) {
        n = -n;
        d = -d;
    }
    return a * Scalar(std::move(n), std::move(d), true);
}

Scalar Scalar::pow(int n) const
{
    if (n < 0)
        return Scalar(1) / pow(-n);
    Scalar result(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

Scalar evaluate(const Poly& poly, const std::vector<std::pair<ParamId, Scalar>>& values)
{
    std::array<const Scalar*, kParamCount> sub{};
    for (const auto& [id, val] : values)
        sub[id.index] = &val;
    std::array<std::vector<Scalar>, kParamCount> powers;
    auto power = [&](std::size_t i, unsigned e) -> const Scalar& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(Scalar(1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * *sub[i]);
        return cache[e];
    };
    Scalar out;
    for (const auto& term : poly.terms()) {
        Monomial kept = term.mono;
        Scalar factor(1);
        for (std::size_t i = 0; i < kParamCount; ++i) {
            if (sub[i] && kept.exp[i] > 0) {
                factor *= power(i, kept.exp[i]);
                kept.exp[i] = 0;
            }
        }
        out += factor * Scalar(Poly::monomial(kept, term.coeff));
    }
    return out;
}

Scalar substitute(const Scalar& s, const std::vector<std::pair<ParamId, Scalar>>& values)
{
    const Scalar n = evaluate(s.numerator(), values);
    const Scalar d = evaluate(s.denominator(), values);
    if (d.is_zero())
        throw AlgebraError("substitution makes the denominator vanish: " + s.to_string());
    return n / d;
}

Scalar substitute(const Scalar& s, ParamId var, const Scalar& value)
{
    return substitute(s, {{var, value}});
}

namespace {

// Removes var^k from every term; requires k <= valuation.
Poly strip_power(const Poly& a, ParamId var, int k)
{
    std::vector<Poly::Term> terms = a.terms();
    for (auto& t : terms)
        t.mono.exp[var.index] = static_cast<std::uint8_t>(t.mono.exp[var.index] - k);
    return Poly::from_terms(std::move(terms));
}

} // namespace

int order_at_zero(const Scalar& s, ParamId var)
{
    if (s.is_zero())
        return 0;
    return s.numerator().valuation_in(var) - s.denominator().valuation_in(var);
}

LimitValue boundary_limit(const Scalar& s, ParamId var)
{
    if (s.is_zero())
        return Scalar();
    const int ord = order_at_zero(s, var);
    if (ord > 0)
        return Scalar();
    const auto series = laurent_at_zero(s, var, ord);
    const Scalar& lead = series.at(ord);
    if (ord == 0)
        return lead;
    return Divergent{-ord, lead};
}

std::map<int, Scalar> laurent_at_zero(const Scalar& s, ParamId var, int max_order)
{
    std::map<int, Scalar> out;
    if (s.is_zero())
        return out;
    const int vn = s.numerator().valuation_in(var);
    const int vd = s.denominator().valuation_in(var);
    const int lead = vn - vd;
    if (max_order < lead)
        return out;
    const auto nc = coefficients_in(strip_power(s.numerator(), var, vn), var);
    const auto dc = coefficients_in(strip_power(s.denominator(), var, vd), var);
    const Scalar d0(dc[0]);
    const int terms = max_order - lead + 1;
    std::vector<Scalar> q;
    q.reserve(std::size_t(terms));
    for (int m = 0; m < terms; ++m) {
        Scalar acc = m < int(nc.size()) ? Scalar(nc[std::size_t(m)]) : Scalar();
        for (int j = 1; j <= m && j < int(dc.size()); ++j)
            acc -= Scalar(dc[std::size_t(j)]) * q[std::size_t(m - j)];
        q.push_back(acc / d0);
        if (!q.back().is_zero())
            out.emplace(lead + m, q.back());
    }
    return out;
}

} // namespace yangian
