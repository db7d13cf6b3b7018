#include "yangian/cybe.hpp"

#include "yangian/errors.hpp"

namespace yangian {

void SpectralTensor::add(const Key& k, const Scalar& c)
{
    if (int(k.size()) != degree)
        throw AlgebraError("spectral tensor degree mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms.erase(it);
}

Scalar SpectralTensor::coefficient(const Key& k) const
{
    auto it = terms.find(k);
    return it == terms.end() ? Scalar(0) : it->second;
}

SpectralTensor& SpectralTensor::operator+=(const SpectralTensor& o)
{
    for (const auto& [k, c] : o.terms)
        add(k, c);
    return *this;
}

SpectralTensor& SpectralTensor::operator-=(const SpectralTensor& o)
{
    for (const auto& [k, c] : o.terms)
        add(k, -c);
    return *this;
}

SpectralTensor operator*(const Scalar& c, const SpectralTensor& x)
{
    SpectralTensor out(x.degree);
    for (const auto& [k, v] : x.terms)
        out.add(k, c * v);
    return out;
}

std::string to_string(const SpectralTensor& x, const LieAlg& g)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, c] : x.terms) {
        std::string legs;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                legs += " (x) ";
            legs += g.basis()[std::size_t(k[i])];
        }
        if (!out.empty())
            out += " + ";
        out += "(" + c.to_string() + ")*" + legs;
    }
    return out;
}

SpectralTensor flip(const SpectralTensor& x)
{
    if (x.degree != 2)
        throw AlgebraError("flip needs a degree-2 spectral tensor");
    const Scalar u = Scalar::param(param::u);
    const Scalar v = Scalar::param(param::v);
    SpectralTensor out(2);
    for (const auto& [k, c] : x.terms)
        out.add({k[1], k[0]}, substitute(c, {{param::u, v}, {param::v, u}}));
    return out;
}

SpectralTensor map_coefficients(const SpectralTensor& x, const std::function<Scalar(const Scalar&)>& fn)
{
    SpectralTensor out(x.degree);
    for (const auto& [k, c] : x.terms)
        out.add(k, fn(c));
    return out;
}

SpectralTensor rebase(const SpectralTensor& x, const LieAlg& from, const LieAlg& to)
{
    SpectralTensor out(x.degree);
    for (const auto& [k, c] : x.terms) {
        SpectralTensor::Key nk;
        for (int i : k)
            nk.push_back(to.index(from.basis()[std::size_t(i)]));
        out.add(nk, c);
    }
    return out;
}

SpectralTensor casimir(const LieAlg& g)
{
    if (!g.form())
        throw AlgebraError(g.name() + " has no invariant form");
    const MatrixRF inv = g.form()->inverse();
    SpectralTensor out(2);
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j)
            out.add({i, j}, inv(i, j));
    }
    return out;
}

SpectralTensor rational_r(const LieAlg& g)
{
    const Scalar kernel = Scalar(1) / (Scalar::param(param::u) - Scalar::param(param::v));
    return kernel * casimir(g);
}

namespace {

SpectralTensor instantiate(const SpectralTensor& r, ParamId a, ParamId b)
{
    const Scalar la = Scalar::param(a);
    const Scalar lb = Scalar::param(b);
    return map_coefficients(r, [&](const Scalar& c) {
        return substitute(c, {{param::u, la}, {param::v, lb}});
    });
}

// Adds c * (... ⊗ [x, y] ⊗ ...) where the bracket lands on leg `leg` and the
// remaining legs are given in `key` (key[leg] is ignored).
void add_bracket(SpectralTensor& out, const LieAlg& g, SpectralTensor::Key key, std::size_t leg, int x,
                 int y, const Scalar& c)
{
    const LieVector& b = g.bracket(x, y);
    for (int m = 0; m < g.dim(); ++m) {
        if (b[std::size_t(m)].is_zero())
            continue;
        key[leg] = m;
        out.add(key, c * b[std::size_t(m)]);
    }
}

} // namespace

SpectralTensor cybe_residual(const SpectralTensor& r, const LieAlg& g)
{
    if (r.degree != 2)
        throw AlgebraError("CYBE needs a degree-2 tensor");
    const SpectralTensor r12 = instantiate(r, param::lambda1, param::lambda2);
    const SpectralTensor r13 = instantiate(r, param::lambda1, param::lambda3);
    const SpectralTensor r23 = instantiate(r, param::lambda2, param::lambda3);
    SpectralTensor out(3);
    // [a⊗b⊗1, c⊗1⊗d] = [a,c]⊗b⊗d
    for (const auto& [x, cx] : r12.terms) {
        for (const auto& [y, cy] : r13.terms)
            add_bracket(out, g, {0, x[1], y[1]}, 0, x[0], y[0], cx * cy);
    }
    // [a⊗b⊗1, 1⊗c⊗d] = a⊗[b,c]⊗d
    for (const auto& [x, cx] : r12.terms) {
        for (const auto& [y, cy] : r23.terms)
            add_bracket(out, g, {x[0], 0, y[1]}, 1, x[1], y[0], cx * cy);
    }
    // [a⊗1⊗b, 1⊗c⊗d] = a⊗c⊗[b,d]
    for (const auto& [x, cx] : r13.terms) {
        for (const auto& [y, cy] : r23.terms)
            add_bracket(out, g, {x[0], y[0], 0}, 2, x[1], y[1], cx * cy);
    }
    return out;
}

SpectralTensor cobracket(const SpectralTensor& r, const LieAlg& g, int x, int mode)
{
    if (r.degree != 2)
        throw AlgebraError("cobracket needs a degree-2 tensor");
    const Scalar uk = Scalar::param(param::u).pow(mode);
    const Scalar vk = Scalar::param(param::v).pow(mode);
    SpectralTensor out(2);
    for (const auto& [k, c] : r.terms) {
        add_bracket(out, g, k, 0, x, k[0], uk * c);
        add_bracket(out, g, k, 1, x, k[1], vk * c);
    }
    return out;
}

std::vector<SpectralTensor> ad_invariance_residual(const SpectralTensor& omega, const LieAlg& g)
{
    std::vector<SpectralTensor> out;
    for (int x = 0; x < g.dim(); ++x)
        out.push_back(cobracket(omega, g, x, 0));
    return out;
}

namespace {

GenId generator_of(const std::string& symbol, int mode)
{
    static const std::map<std::string, Family> families{
        {"e", Family::E}, {"f", Family::F}, {"h", Family::H}, {"hp", Family::Hp}};
    auto it = families.find(symbol);
    if (it == families.end())
        throw AlgebraError("basis element '" + symbol + "' has no generator family");
    return GenId{it->second, std::uint8_t(mode)};
}

} // namespace

TensorPoly to_modes(const SpectralTensor& x, const LieAlg& g)
{
    TensorPoly out(x.degree);
    if (x.degree != 2)
        throw AlgebraError("to_modes needs a degree-2 tensor");
    for (const auto& [k, c] : x.terms) {
        if (!c.is_polynomial())
            throw AlgebraError("coefficient " + c.to_string() + " is not polynomial in u, v");
        const Scalar den(c.denominator());
        const auto in_u = coefficients_in(c.numerator(), param::u);
        for (std::size_t i = 0; i < in_u.size(); ++i) {
            const auto in_v = coefficients_in(in_u[i], param::v);
            for (std::size_t j = 0; j < in_v.size(); ++j) {
                if (in_v[j].is_zero())
                    continue;
                const GenId a = generator_of(g.basis()[std::size_t(k[0])], int(i));
                const GenId b = generator_of(g.basis()[std::size_t(k[1])], int(j));
                out.add_term({{a}, {b}}, Scalar(in_v[j]) / den);
            }
        }
    }
    return out;
}

ColieReport compare_colie(const HopfPresentation& boundary, const SpectralTensor& r, const LieAlg& a)
{
    ColieReport rep;
    Tally tally;
    for (const char* sym : {"e", "f", "h", "hp"}) {
        for (int mode = 0; mode <= 1; ++mode) {
            const GenId gen = generator_of(sym, mode);
            const TensorPoly& d = boundary.coproduct(gen);
            const TensorPoly co = d - flip(d);
            const TensorPoly delta = to_modes(cobracket(r, a, a.index(sym), mode), a);
            ColieEntry e{gen, to_string(co), to_string(delta), true};

            if (co.is_zero() || delta.is_zero()) {
                e.consistent = co.is_zero() && delta.is_zero();
            } else {
                const auto& [key, c0] = *co.terms().begin();
                const Scalar ratio = delta.coefficient(key) / c0;
                if (ratio.is_zero() || delta != ratio * co) {
                    e.consistent = false;
                } else if (!rep.constant) {
                    rep.constant = ratio;
                } else if (*rep.constant != ratio) {
                    e.consistent = false;
                }
            }
            tally.add(e.consistent, to_string(gen),
                      "cocommutator " + e.cocommutator + " vs cobracket " + e.cobracket +
                          (rep.constant ? " with constant " + rep.constant->to_string() : ""));
            rep.entries.push_back(std::move(e));
        }
    }
    rep.outcome = tally.outcome("generators");
    if (rep.constant)
        rep.outcome.detail += ", constant " + rep.constant->to_string();
    return rep;
}

SpectralTensor project_factor_r(const SpectralTensor& r, const LieAlg& a)
{
    SpectralTensor out(r.degree);
    for (const auto& [k, c] : r.terms) {
        bool keep = true;
        for (int i : k)
            keep = keep && a.basis()[std::size_t(i)] != "hp";
        if (keep)
            out.add(k, c);
    }
    return out;
}

DivergenceReport parametrized_r_divergence()
{
    const LieAlg sl2 = builtin("sl2");
    const LieAlg dbl = builtin("double");
    const Scalar p = Scalar::param(param::p);
    const Scalar t = Scalar::param(param::t);
    const Scalar half = Scalar::fraction(1, 2);

    // image of each sl2 basis element in the double
    const std::map<std::string, std::vector<std::pair<std::string, Scalar>>> image{
        {"e", {{"e", Scalar(1) / p}}},
        {"f", {{"f", Scalar(1) / t}}},
        {"h", {{"h", half / p}, {"hp", half / t}}},
    };
    const SpectralTensor source = Scalar::param(param::hbar) * rational_r(sl2);
    SpectralTensor mapped(2);
    for (const auto& [k, c] : source.terms) {
        const Scalar coeff = substitute(c, param::hbar, p * t);
        for (const auto& [s0, c0] : image.at(sl2.basis()[std::size_t(k[0])])) {
            for (const auto& [s1, c1] : image.at(sl2.basis()[std::size_t(k[1])]))
                mapped.add({dbl.index(s0), dbl.index(s1)}, coeff * c0 * c1);
        }
    }

    DivergenceReport rep;
    rep.divergent = SpectralTensor(2);
    rep.finite = SpectralTensor(2);
    rep.vanishing = SpectralTensor(2);
    for (const auto& [k, c] : mapped.terms) {
        const auto parts = laurent_at_zero(c, param::t, 0);
        Scalar rest = c;
        for (const auto& [order, coeff] : parts) {
            const Scalar term = coeff * t.pow(order < 0 ? 0 : order) / t.pow(order < 0 ? -order : 0);
            rest -= term;
            if (order < 0) {
                rep.divergent.add(k, term);
                rep.pole_order = std::max(rep.pole_order, -order);
            } else {
                rep.finite.add(k, term);
            }
        }
        if (!rest.is_zero()) {
            rep.vanishing.add(k, rest);
            const int ord = order_at_zero(rest, param::t);
            if (rep.vanishing_order == 0 || ord < rep.vanishing_order)
                rep.vanishing_order = ord;
        }
    }
    const LieAlg a = builtin("a");
    const SpectralTensor expected = rational_r(a);
    const SpectralTensor got = rebase(rep.finite, dbl, a);
    rep.finite_matches = got == expected;
    if (!rep.finite_matches) {
        SpectralTensor diff = got;
        diff -= expected;
        rep.residual = to_string(diff, a);
    }
    return rep;
}

} // namespace yangian
