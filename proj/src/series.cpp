#include "yangian/series.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

SeriesAtInfinity::SeriesAtInfinity(ParamId var, int order)
    : var_(var), coeffs_(std::size_t(std::max(order, 0)) + 1)
{
    if (order < 0)
        throw SeriesError("negative truncation order");
}

const Scalar& SeriesAtInfinity::coefficient(int k) const
{
    static const Scalar zero;
    if (k < 0 || k >= int(coeffs_.size()))
        return zero;
    return coeffs_[std::size_t(k)];
}

void SeriesAtInfinity::set_coefficient(int k, Scalar c)
{
    if (c.contains(var_))
        throw SeriesError("series coefficient depends on the expansion variable");
    coeffs_.at(std::size_t(k)) = std::move(c);
}

SeriesAtInfinity SeriesAtInfinity::truncated(int order) const
{
    SeriesAtInfinity out(var_, std::min(order, this->order()));
    for (int k = 0; k <= out.order(); ++k)
        out.coeffs_[std::size_t(k)] = coeffs_[std::size_t(k)];
    return out;
}

namespace {

void require_same_variable(const SeriesAtInfinity& a, const SeriesAtInfinity& b)
{
    if (a.variable() != b.variable())
        throw SeriesError("series in different expansion variables");
}

} // namespace

SeriesAtInfinity operator+(const SeriesAtInfinity& a, const SeriesAtInfinity& b)
{
    require_same_variable(a, b);
    SeriesAtInfinity out(a.var_, std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k)
        out.coeffs_[std::size_t(k)] = a.coefficient(k) + b.coefficient(k);
    return out;
}

SeriesAtInfinity operator-(const SeriesAtInfinity& a, const SeriesAtInfinity& b)
{
    return a + Scalar(-1) * b;
}

SeriesAtInfinity operator*(const SeriesAtInfinity& a, const SeriesAtInfinity& b)
{
    require_same_variable(a, b);
    SeriesAtInfinity out(a.var_, std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (a.coefficient(i).is_zero())
            continue;
        for (int j = 0; i + j <= out.order(); ++j)
            out.coeffs_[std::size_t(i + j)] += a.coefficient(i) * b.coefficient(j);
    }
    return out;
}

SeriesAtInfinity operator*(const Scalar& c, const SeriesAtInfinity& a)
{
    SeriesAtInfinity out = a;
    for (auto& x : out.coeffs_)
        x = c * x;
    return out;
}

bool operator==(const SeriesAtInfinity& a, const SeriesAtInfinity& b)
{
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
}

SeriesAtInfinity expand_at_infinity(const Scalar& s, ParamId var, int order)
{
    SeriesAtInfinity out(var, order);
    if (s.is_zero())
        return out;
    const auto num = coefficients_in(s.numerator(), var);
    const auto den = coefficients_in(s.denominator(), var);
    const int dn = int(num.size()) - 1;
    const int dd = int(den.size()) - 1;
    if (dn > dd)
        throw SeriesError("expansion at infinity of a function with a pole at infinity");
    // With x = 1/var: s = x^(dd-dn) * N~(x) / D~(x), where N~ and D~ are the
    // coefficient lists read from the top degree down.
    const int shift = dd - dn;
    const Scalar lead(den[std::size_t(dd)]);
    std::vector<Scalar> q;
    for (int m = 0; m + shift <= order; ++m) {
        Scalar acc = m <= dn ? Scalar(num[std::size_t(dn - m)]) : Scalar();
        for (int j = 1; j <= m && j <= dd; ++j)
            acc -= Scalar(den[std::size_t(dd - j)]) * q[std::size_t(m - j)];
        q.push_back(acc / lead);
        out.set_coefficient(m + shift, q.back());
    }
    return out;
}

} // namespace yangian
