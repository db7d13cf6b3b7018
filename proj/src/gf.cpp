#include "yangian/gf.hpp"

#include <algorithm>

#include "yangian/errors.hpp"
#include "yangian/series.hpp"

namespace yangian {

GFExpr GFExpr::current(std::string symbol, Spectral at)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Current;
    n->symbol = std::move(symbol);
    n->at = at;
    return GFExpr(std::move(n));
}

GFExpr GFExpr::constant(const Scalar& c)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->scalar = c;
    return GFExpr(std::move(n));
}

GFExpr GFExpr::kernel()
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Kernel;
    return GFExpr(std::move(n));
}

GFExpr GFExpr::binary(Kind k, const GFExpr& a, const GFExpr& b)
{
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = std::make_shared<const GFExpr>(a);
    n->right = std::make_shared<const GFExpr>(b);
    return GFExpr(std::move(n));
}

GFExpr operator+(const GFExpr& a, const GFExpr& b)
{
    return GFExpr::binary(GFExpr::Kind::Sum, a, b);
}

GFExpr operator-(const GFExpr& a, const GFExpr& b)
{
    return a + Scalar(-1) * b;
}

GFExpr operator*(const GFExpr& a, const GFExpr& b)
{
    return GFExpr::binary(GFExpr::Kind::Product, a, b);
}

GFExpr operator*(const Scalar& c, const GFExpr& a)
{
    auto n = std::make_shared<GFExpr::Node>();
    n->kind = GFExpr::Kind::Scale;
    n->scalar = c;
    n->left = std::make_shared<const GFExpr>(a);
    return GFExpr(std::move(n));
}

GFExpr commutator(const GFExpr& a, const GFExpr& b)
{
    return GFExpr::binary(GFExpr::Kind::Commutator, a, b);
}

GFExpr anticommutator(const GFExpr& a, const GFExpr& b)
{
    return GFExpr::binary(GFExpr::Kind::Anticommutator, a, b);
}

void GFExpr::collect_symbols(std::vector<std::string>& out) const
{
    switch (kind()) {
    case Kind::Current:
        if (std::find(out.begin(), out.end(), symbol()) == out.end())
            out.push_back(symbol());
        return;
    case Kind::Constant:
    case Kind::Kernel:
        return;
    case Kind::Scale:
        left().collect_symbols(out);
        return;
    default:
        left().collect_symbols(out);
        right().collect_symbols(out);
    }
}

namespace {

using Key = std::pair<int, int>;
using Coeffs = std::map<Key, NCPoly>;

struct Expander {
    const std::map<std::string, CurrentBinding>& binding;
    const Normalizer& norm;
    int max_a;
    int max_total;

    bool inside(Key k) const { return k.first <= max_a && k.first + k.second <= max_total; }

    Coeffs current(const std::string& symbol, Spectral at) const
    {
        auto it = binding.find(symbol);
        if (it == binding.end())
            throw AlgebraError("unbound current symbol '" + symbol + "'");
        const CurrentBinding& b = it->second;
        Coeffs out;
        if (!b.constant.is_zero())
            out[{0, 0}] = NCPoly(b.constant);
        for (int k = 0;; ++k) {
            const Key key = at == Spectral::U ? Key{k + 1, 0} : Key{0, k + 1};
            if (!inside(key))
                break;
            if (k > norm.table().capacity())
                throw CapacityError("generating function needs mode " + std::to_string(k) +
                                    " beyond the table capacity");
            out[key] = b.scale * NCPoly(GenId{b.family, std::uint8_t(k)});
        }
        return out;
    }

    // 1/(u - v) in the region |u| > |v|: sum_m v^m u^(-m-1).
    Coeffs kernel() const
    {
        const Scalar k = Scalar(1) / (Scalar::param(param::u) - Scalar::param(param::v));
        const SeriesAtInfinity s = expand_at_infinity(k, param::u, max_a);
        Coeffs out;
        for (int a = 0; a <= max_a; ++a) {
            const Scalar& c = s.coefficient(a);
            if (c.is_zero())
                continue;
            if (!c.is_polynomial())
                throw SeriesError("kernel coefficient is not polynomial in v");
            const auto parts = coefficients_in(c.numerator(), param::v);
            for (std::size_t d = 0; d < parts.size(); ++d) {
                if (parts[d].is_zero())
                    continue;
                const Key key{a, -int(d)};
                if (inside(key))
                    out[key] = NCPoly(Scalar(parts[d]) / Scalar(c.denominator()));
            }
        }
        return out;
    }

    Coeffs product(const Coeffs& x, const Coeffs& y) const
    {
        Coeffs out;
        for (const auto& [kx, px] : x) {
            for (const auto& [ky, py] : y) {
                const Key k{kx.first + ky.first, kx.second + ky.second};
                if (!inside(k))
                    continue;
                out[k] += norm.multiply(px, py);
            }
        }
        prune(out);
        return out;
    }

    static void add(Coeffs& out, const Coeffs& x, const Scalar& c)
    {
        for (const auto& [k, p] : x)
            out[k] += c * p;
    }

    static void prune(Coeffs& c)
    {
        std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
    }

    Coeffs eval(const GFExpr& e) const
    {
        using K = GFExpr::Kind;
        switch (e.kind()) {
        case K::Current:
            return current(e.symbol(), e.at());
        case K::Constant: {
            Coeffs out;
            if (!e.scalar().is_zero())
                out[{0, 0}] = NCPoly(e.scalar());
            return out;
        }
        case K::Kernel:
            return kernel();
        case K::Scale: {
            Coeffs out;
            add(out, eval(e.left()), e.scalar());
            prune(out);
            return out;
        }
        case K::Sum: {
            Coeffs out = eval(e.left());
            add(out, eval(e.right()), Scalar(1));
            prune(out);
            return out;
        }
        case K::Product:
            return product(eval(e.left()), eval(e.right()));
        case K::Commutator:
        case K::Anticommutator: {
            const Coeffs x = eval(e.left());
            const Coeffs y = eval(e.right());
            Coeffs out = product(x, y);
            add(out, product(y, x), Scalar(e.kind() == K::Commutator ? -1 : 1));
            prune(out);
            return out;
        }
        }
        return {};
    }
};

} // namespace

DoubleSeries expand(const GFExpr& e, const std::map<std::string, CurrentBinding>& binding,
                    const Normalizer& norm, int max_a, int max_total)
{
    const Expander ex{binding, norm, max_a, max_total};
    return DoubleSeries{max_a, max_total, ex.eval(e)};
}

Outcome check_gf_identity(const GFIdentity& id, const Normalizer& norm, int bi_degree)
{
    std::vector<std::string> symbols;
    id.lhs.collect_symbols(symbols);
    id.rhs.collect_symbols(symbols);
    for (const auto& s : symbols) {
        if (!id.binding.contains(s))
            throw AlgebraError(id.name + ": unbound current symbol '" + s + "'");
    }

    const int max_a = bi_degree + 1;
    const int max_total = bi_degree + 2;
    const DoubleSeries l = expand(id.lhs, id.binding, norm, max_a, max_total);
    const DoubleSeries r = expand(id.rhs, id.binding, norm, max_a, max_total);

    Tally tally;
    std::map<Key, bool> keys;
    for (const auto& [k, p] : l.coeffs)
        keys[k] = true;
    for (const auto& [k, p] : r.coeffs)
        keys[k] = true;
    for (int i = 0; i <= bi_degree; ++i) {
        for (int j = 0; i + j <= bi_degree; ++j)
            keys[{i + 1, j + 1}] = true;
    }
    for (const auto& [k, unused] : keys) {
        auto get = [&](const DoubleSeries& s) {
            auto it = s.coeffs.find(k);
            return it == s.coeffs.end() ? NCPoly() : it->second;
        };
        const NCPoly diff = get(l) - get(r);
        tally.add(diff.is_zero(),
                  id.name + " at u^" + std::to_string(-k.first) + " v^" + std::to_string(-k.second),
                  to_string(diff));
    }
    Outcome o = tally.outcome("coefficients");
    o.detail = id.name + ": " + o.detail;
    return o;
}

namespace {

GFExpr cur(const char* s, Spectral at)
{
    return GFExpr::current(s, at);
}

GFExpr one()
{
    return GFExpr::constant(Scalar(1));
}

} // namespace

std::vector<GFIdentity> y_sl2_gf_identities()
{
    const Scalar hbar = Scalar::param(param::hbar);
    const std::map<std::string, CurrentBinding> binding{
        {"e", {Family::E, Scalar(0), Scalar(1)}},
        {"f", {Family::F, Scalar(0), Scalar(1)}},
        {"h", {Family::H, Scalar(1), hbar}},
    };
    const auto U = Spectral::U;
    const auto V = Spectral::V;
    const GFExpr K = GFExpr::kernel();
    const GFExpr de = cur("e", U) - cur("e", V);
    const GFExpr df = cur("f", U) - cur("f", V);
    const GFExpr dh = cur("h", U) - cur("h", V);
    const GFExpr zero = GFExpr::constant(Scalar(0));

    return {
        {"[h(u),h(v)]", commutator(cur("h", U), cur("h", V)), zero, binding},
        {"[e(u),f(v)]", commutator(cur("e", U), cur("f", V)), (Scalar(-1) / hbar) * (K * dh),
         binding},
        {"[h(u),e(v)]", commutator(cur("h", U), cur("e", V)),
         (-hbar) * (K * anticommutator(cur("h", U), de)), binding},
        {"[h(u),f(v)]", commutator(cur("h", U), cur("f", V)),
         hbar * (K * anticommutator(cur("h", U), df)), binding},
        {"[e(u),e(v)]", commutator(cur("e", U), cur("e", V)), (-hbar) * (K * (de * de)), binding},
        {"[f(u),f(v)]", commutator(cur("f", U), cur("f", V)), hbar * (K * (df * df)), binding},
    };
}

std::vector<GFIdentity> boundary_gf_identities()
{
    const Scalar p = Scalar::param(param::p);
    const std::map<std::string, CurrentBinding> binding{
        {"e", {Family::E, Scalar(0), Scalar(1)}},
        {"f", {Family::F, Scalar(0), Scalar(1)}},
        {"chi", {Family::H, Scalar(0), Scalar(1)}},
        {"chi'", {Family::Hp, Scalar(0), Scalar(1)}},
    };
    const auto U = Spectral::U;
    const auto V = Spectral::V;
    const GFExpr K = GFExpr::kernel();
    const GFExpr zero = GFExpr::constant(Scalar(0));
    const GFExpr de = cur("e", U) - cur("e", V);
    const GFExpr df = cur("f", U) - cur("f", V);
    const GFExpr dress = Scalar(2) * one() + p * cur("chi'", U);

    return {
        {"[chi(u),chi(v)]", commutator(cur("chi", U), cur("chi", V)), zero, binding},
        {"[chi'(u),chi'(v)]", commutator(cur("chi'", U), cur("chi'", V)), zero, binding},
        {"[chi(u),chi'(v)]", commutator(cur("chi", U), cur("chi'", V)), zero, binding},
        {"[chi'(u),e(v)]", commutator(cur("chi'", U), cur("e", V)), zero, binding},
        {"[chi'(u),f(v)]", commutator(cur("chi'", U), cur("f", V)), zero, binding},
        {"[e(u),f(v)]", commutator(cur("e", U), cur("f", V)),
         (-p / Scalar(2)) * (K * (cur("chi'", U) - cur("chi'", V))), binding},
        {"[chi(u),e(v)]", commutator(cur("chi", U), cur("e", V)),
         (-p) * (K * anticommutator(dress, de)), binding},
        {"[chi(u),f(v)]", commutator(cur("chi", U), cur("f", V)),
         p * (K * anticommutator(dress, df)), binding},
        {"[e(u),e(v)]", commutator(cur("e", U), cur("e", V)), zero, binding},
        {"[f(u),f(v)]", commutator(cur("f", U), cur("f", V)), zero, binding},
    };
}

namespace {

// Series in u^(-1) truncated at order M, algebra-valued.
using Series = std::vector<NCPoly>;
using TSeries = std::vector<TensorPoly>;

Series current_series(Family fam, int order, const Scalar& shift, const Scalar& constant,
                      const Scalar& scale)
{
    // x(u + shift) = sum_k x_k (u + shift)^(-k-1)
    Series out(std::size_t(order + 1));
    out[0] += NCPoly(constant);
    const Scalar u = Scalar::param(param::u);
    for (int k = 0; k + 1 <= order; ++k) {
        const Scalar term = Scalar(1) / (u + shift).pow(k + 1);
        const SeriesAtInfinity s = expand_at_infinity(term, param::u, order);
        for (int n = 0; n <= order; ++n) {
            if (!s.coefficient(n).is_zero())
                out[std::size_t(n)] +=
                    (scale * s.coefficient(n)) * NCPoly(GenId{fam, std::uint8_t(k)});
        }
    }
    return out;
}

Series multiply(const Series& a, const Series& b, const Normalizer& norm)
{
    Series out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (!b[j].is_zero())
                out[i + j] += norm.multiply(a[i], b[j]);
        }
    }
    return out;
}

Series power(const Series& a, int k, const Normalizer& norm)
{
    Series out(a.size());
    out[0] = NCPoly(Scalar(1));
    for (int i = 0; i < k; ++i)
        out = multiply(out, a, norm);
    return out;
}

TSeries tensor(const Series& a, const Series& b)
{
    TSeries out(a.size(), TensorPoly(2));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (!a[i].is_zero() && !b[j].is_zero())
                out[i + j] += TensorPoly::product({a[i], b[j]});
        }
    }
    return out;
}

void accumulate(TSeries& out, const TSeries& x, const Scalar& c)
{
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += c * x[i];
}

} // namespace

std::vector<CheckRecord> check_series_coproduct(const HopfPresentation& y, int max_order)
{
    if (max_order < 1)
        throw AlgebraError("series coproduct check needs order >= 1");
    const Normalizer norm(y.table);
    const Scalar hbar = Scalar::param(param::hbar);
    const int M = max_order;

    const Series e = current_series(Family::E, M, Scalar(0), Scalar(0), Scalar(1));
    const Series f = current_series(Family::F, M, Scalar(0), Scalar(0), Scalar(1));
    const Series h = current_series(Family::H, M, Scalar(0), Scalar(1), hbar);
    const Series e_shift = current_series(Family::E, M, hbar, Scalar(0), Scalar(1));
    const Series f_shift = current_series(Family::F, M, hbar, Scalar(0), Scalar(1));
    Series unit(std::size_t(M + 1));
    unit[0] = NCPoly(Scalar(1));

    // Terms with index k start at order >= 2k (+1 for e, f), so k <= M/2 suffices.
    TSeries de = tensor(e, unit);
    TSeries df = tensor(unit, f);
    TSeries dh(std::size_t(M + 1), TensorPoly(2));
    for (int k = 0; 2 * k <= M; ++k) {
        const Scalar sign = (k % 2 ? Scalar(-1) : Scalar(1)) * hbar.pow(2 * k);
        accumulate(de,
                   tensor(multiply(power(f_shift, k, norm), h, norm), power(e, k + 1, norm)),
                   sign);
        accumulate(df,
                   tensor(power(f, k + 1, norm), multiply(h, power(e_shift, k, norm), norm)),
                   sign);
        accumulate(dh,
                   tensor(multiply(power(f_shift, k, norm), h, norm),
                          multiply(h, power(e_shift, k, norm), norm)),
                   Scalar(k + 1) * sign);
    }

    auto compare = [&](const std::string& name, const TSeries& series, Family fam,
                       const Scalar& scale) {
        return run_check(name, [&] {
            Tally tally;
            for (int n = 1; n <= M; ++n) {
                const GenId g{fam, std::uint8_t(n - 1)};
                const TensorPoly res = series[std::size_t(n)] - scale * y.coproduct(g);
                tally.add(res.is_zero(), "order u^-" + std::to_string(n), to_string(res));
            }
            if (fam == Family::H) {
                const TensorPoly res = series[0] - TensorPoly::identity(2);
                tally.add(res.is_zero(), "order u^0", to_string(res));
            }
            return tally.outcome("orders");
        });
    };
    return {
        compare("series.delta_e", de, Family::E, Scalar(1)),
        compare("series.delta_f", df, Family::F, Scalar(1)),
        compare("series.delta_h", dh, Family::H, hbar),
    };
}

Outcome check_boundary_gf_coproducts(const HopfPresentation& boundary, int max_mode)
{
    Tally tally;
    for (Family fam : {Family::E, Family::F, Family::Hp}) {
        for (int k = 0; k <= max_mode; ++k) {
            const GenId g{fam, std::uint8_t(k)};
            const TensorPoly res = boundary.coproduct(g) - boundary_gf_coproduct(g);
            tally.add(res.is_zero(), to_string(g), to_string(res));
        }
    }
    return tally.outcome("generators");
}

} // namespace yangian
