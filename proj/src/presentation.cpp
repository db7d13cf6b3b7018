#include "yangian/presentation.hpp"

#include <functional>
#include <sstream>

#include "yangian/errors.hpp"

namespace yangian {

const TensorPoly& HopfPresentation::coproduct(GenId g) const
{
    auto it = coproducts.find(g);
    if (it == coproducts.end())
        throw CapacityError("no coproduct for " + to_string(g) + " in " + name);
    return it->second;
}

TensorPoly primitive(GenId g)
{
    return TensorPoly::product({NCPoly(g), NCPoly(Scalar(1))}) +
           TensorPoly::product({NCPoly(Scalar(1)), NCPoly(g)});
}

namespace {

TensorPoly tensor(const NCPoly& a, const NCPoly& b)
{
    return TensorPoly::product({a, b});
}

GenId gen(Family f, int k)
{
    return {f, static_cast<std::uint8_t>(k)};
}

NCPoly anti(GenId a, GenId b)
{
    return NCPoly::word({a, b}) + NCPoly::word({b, a});
}

// [x_a, x_{n-a}] inside one family: the shifted relation with right-hand side
// kappa {x_k, x_l} fixes the whole chain from the middle outwards.
void fill_same_family(CommTable& table, const Normalizer& norm, Family f, const Scalar& kappa,
                      int n)
{
    int a = n / 2 + 1;
    if (n % 2 == 1) {
        const int m = n / 2;
        table.set(gen(f, m + 1), gen(f, m), kappa * NCPoly::word({gen(f, m), gen(f, m)}));
        ++a;
    }
    for (; a <= n; ++a) {
        NCPoly value = table.bracket(gen(f, a - 1), gen(f, n - a + 1));
        if (!kappa.is_zero())
            value += kappa * norm.normal_order(anti(gen(f, a - 1), gen(f, n - a)));
        table.set(gen(f, a), gen(f, n - a), value);
    }
}

// [h_k, x_l] from [h_0, x_l] = base(l) and
// [h_{k+1}, x_l] - [h_k, x_{l+1}] = shift(k, l).
void fill_cartan(CommTable& table, const Normalizer& norm, Family x, int n,
                 const std::function<NCPoly(int)>& base,
                 const std::function<NCPoly(int, int)>& shift)
{
    for (int k = 0; k <= n; ++k) {
        const int l = n - k;
        if (k == 0) {
            table.set(gen_h(0), gen(x, l), base(l));
            continue;
        }
        NCPoly value = table.bracket(gen_h(k - 1), gen(x, l + 1));
        value += norm.normal_order(shift(k - 1, l));
        table.set(gen_h(k), gen(x, l), value);
    }
}

void fill_zero(CommTable& table, Family x, Family y, int n)
{
    for (int k = 0; k <= n; ++k) {
        const GenId a = gen(x, k);
        const GenId b = gen(y, n - k);
        if (a != b)
            table.set(a, b, NCPoly());
    }
}

} // namespace

HopfPresentation build_y_sl2(int capacity)
{
    if (capacity < 1)
        throw CapacityError("Y(sl2) needs capacity at least 1");
    const Scalar hbar = Scalar::param(param::hbar);
    HopfPresentation y{"y_sl2", CommTable({Family::E, Family::F, Family::H}, capacity), {},
                       {param::hbar}, RelationSet::YSl2};
    CommTable& table = y.table;
    const Normalizer norm(table);

    for (int n = 0; n <= capacity; ++n) {
        fill_zero(table, Family::H, Family::H, n);
        for (int k = 0; k <= n; ++k)
            table.set(gen_e(k), gen_f(n - k), NCPoly(gen_h(n)));
        fill_cartan(
            table, norm, Family::E, n, [](int l) { return Scalar(2) * NCPoly(gen_e(l)); },
            [&](int k, int l) { return hbar * anti(gen_h(k), gen_e(l)); });
        fill_cartan(
            table, norm, Family::F, n, [](int l) { return Scalar(-2) * NCPoly(gen_f(l)); },
            [&](int k, int l) { return -hbar * anti(gen_h(k), gen_f(l)); });
        fill_same_family(table, norm, Family::E, hbar, n);
        fill_same_family(table, norm, Family::F, -hbar, n);
    }

    auto& cop = y.coproducts;
    for (Family f : {Family::E, Family::F, Family::H})
        cop[gen(f, 0)] = primitive(gen(f, 0));
    cop[gen_e(1)] = primitive(gen_e(1)) + hbar * tensor(gen_h(0), gen_e(0));
    cop[gen_f(1)] = primitive(gen_f(1)) + hbar * tensor(gen_f(0), gen_h(0));
    const Scalar half = Scalar::fraction(1, 2);
    for (int k = 1; k <= capacity; ++k) {
        cop[gen_h(k)] = norm.commutator(cop[gen_e(k)], cop[gen_f(0)]);
        if (k + 1 > capacity)
            break;
        // 2 e_{k+1} = [h_1, e_k] - hbar {h_0, e_k}
        const TensorPoly& h0 = cop[gen_h(0)];
        const TensorPoly& h1 = cop[gen_h(1)];
        const TensorPoly& ek = cop[gen_e(k)];
        const TensorPoly& fk = cop[gen_f(k)];
        cop[gen_e(k + 1)] =
            half * (norm.commutator(h1, ek) - hbar * norm.normal_order(h0 * ek + ek * h0));
        cop[gen_f(k + 1)] =
            -half * (norm.commutator(h1, fk) + hbar * norm.normal_order(h0 * fk + fk * h0));
    }
    return y;
}

TensorPoly y_sl2_h_coproduct_via_f(const HopfPresentation& y, int k)
{
    const Normalizer norm(y.table);
    return norm.commutator(y.coproduct(gen_e(0)), y.coproduct(gen_f(k)));
}

TensorPoly boundary_gf_coproduct(GenId g)
{
    const Scalar p = Scalar::param(param::p);
    const Scalar half_p = p / Scalar(2);
    const int k = g.mode;
    TensorPoly out = primitive(g);
    for (int i = 0; i + 1 <= k; ++i) {
        const int j = k - 1 - i;
        switch (g.family) {
        case Family::E:
            out += half_p * tensor(gen_hp(i), gen_e(j));
            break;
        case Family::F:
            out += half_p * tensor(gen_f(i), gen_hp(j));
            break;
        case Family::Hp:
            out += half_p * tensor(gen_hp(i), gen_hp(j));
            break;
        case Family::H:
            out += half_p * (tensor(gen_hp(i), gen_h(j)) + tensor(gen_h(i), gen_hp(j)));
            break;
        }
    }
    if (g.family != Family::H)
        return out;

    // -4p f(u)(1 + (p/2)χ'(u)) ⊗ (1 + (p/2)χ'(u))e(u); entry a holds u^(-a).
    std::vector<NCPoly> left(std::size_t(k) + 2);
    std::vector<NCPoly> right(std::size_t(k) + 2);
    for (int i = 0; i + 1 <= k + 1; ++i) {
        left[std::size_t(i) + 1] += NCPoly(gen_f(i));
        right[std::size_t(i) + 1] += NCPoly(gen_e(i));
        for (int j = 0; i + j + 2 <= k + 1; ++j) {
            left[std::size_t(i + j) + 2] += half_p * NCPoly::word({gen_f(i), gen_hp(j)});
            right[std::size_t(i + j) + 2] += half_p * NCPoly::word({gen_hp(i), gen_e(j)});
        }
    }
    for (int a = 1; a <= k; ++a)
        out += Scalar(-4) * p * tensor(left[std::size_t(a)], right[std::size_t(k + 1 - a)]);
    return out;
}

HopfPresentation build_boundary(int capacity)
{
    if (capacity < 1)
        throw CapacityError("the boundary Yangian needs capacity at least 1");
    const Scalar p = Scalar::param(param::p);
    HopfPresentation b{"boundary",
                       CommTable({Family::E, Family::F, Family::H, Family::Hp}, capacity),
                       {},
                       {param::p},
                       RelationSet::Boundary};
    CommTable& table = b.table;
    const Normalizer norm(table);

    for (int n = 0; n <= capacity; ++n) {
        fill_zero(table, Family::H, Family::H, n);
        fill_zero(table, Family::Hp, Family::Hp, n);
        fill_zero(table, Family::H, Family::Hp, n);
        fill_zero(table, Family::Hp, Family::E, n);
        fill_zero(table, Family::Hp, Family::F, n);
        for (int k = 0; k <= n; ++k)
            table.set(gen_e(k), gen_f(n - k), (p / Scalar(2)) * NCPoly(gen_hp(n)));
        fill_cartan(
            table, norm, Family::E, n, [&](int l) { return Scalar(4) * p * NCPoly(gen_e(l)); },
            [&](int k, int l) { return p * p * anti(gen_hp(k), gen_e(l)); });
        fill_cartan(
            table, norm, Family::F, n, [&](int l) { return Scalar(-4) * p * NCPoly(gen_f(l)); },
            [&](int k, int l) { return -p * p * anti(gen_hp(k), gen_f(l)); });
        fill_same_family(table, norm, Family::E, Scalar(0), n);
        fill_same_family(table, norm, Family::F, Scalar(0), n);
    }

    auto& cop = b.coproducts;
    const Scalar half_p = p / Scalar(2);
    for (Family f : {Family::E, Family::F, Family::H, Family::Hp})
        cop[gen(f, 0)] = primitive(gen(f, 0));
    cop[gen_e(1)] = primitive(gen_e(1)) + half_p * tensor(gen_hp(0), gen_e(0));
    cop[gen_f(1)] = primitive(gen_f(1)) + half_p * tensor(gen_f(0), gen_hp(0));
    cop[gen_h(1)] = primitive(gen_h(1)) +
                    half_p * (tensor(gen_hp(0), gen_h(0)) + tensor(gen_h(0), gen_hp(0))) -
                    Scalar(4) * p * tensor(gen_f(0), gen_e(0));
    cop[gen_hp(1)] = primitive(gen_hp(1)) + half_p * tensor(gen_hp(0), gen_hp(0));

    const Scalar inv4p = Scalar(1) / (Scalar(4) * p);
    const Scalar p2 = p * p;
    for (int k = 1; k + 1 <= capacity; ++k) {
        const TensorPoly& hp0 = cop[gen_hp(0)];
        const TensorPoly& h1 = cop[gen_h(1)];
        const TensorPoly& ek = cop[gen_e(k)];
        const TensorPoly& fk = cop[gen_f(k)];
        // 4p e_{k+1} = [h_1, e_k] - p^2 {h'_0, e_k}
        cop[gen_e(k + 1)] =
            inv4p * (norm.commutator(h1, ek) - p2 * norm.normal_order(hp0 * ek + ek * hp0));
        cop[gen_f(k + 1)] =
            -inv4p * (norm.commutator(h1, fk) + p2 * norm.normal_order(hp0 * fk + fk * hp0));
        // (p/2) h'_{k+1} = [e_{k+1}, f_0]
        cop[gen_hp(k + 1)] = (Scalar(2) / p) * norm.commutator(cop[gen_e(k + 1)], cop[gen_f(0)]);
        // h_{k+1} is not generated by lower modes.
        cop[gen_h(k + 1)] = boundary_gf_coproduct(gen_h(k + 1));
    }
    return b;
}

HopfPresentation build_factor_closed_form(int capacity)
{
    if (capacity < 1)
        throw CapacityError("Y(c) needs capacity at least 1");
    const Scalar p = Scalar::param(param::p);
    HopfPresentation c{"factor", CommTable({Family::E, Family::F, Family::H}, capacity), {},
                       {param::p}, RelationSet::Factor};
    for (int n = 0; n <= capacity; ++n) {
        fill_zero(c.table, Family::H, Family::H, n);
        fill_zero(c.table, Family::E, Family::F, n);
        fill_zero(c.table, Family::E, Family::E, n);
        fill_zero(c.table, Family::F, Family::F, n);
        for (int k = 0; k <= n; ++k) {
            c.table.set(gen_h(k), gen_e(n - k), Scalar(4) * p * NCPoly(gen_e(n)));
            c.table.set(gen_h(k), gen_f(n - k), Scalar(-4) * p * NCPoly(gen_f(n)));
        }
    }
    for (int k = 0; k <= capacity; ++k) {
        c.coproducts[gen_e(k)] = primitive(gen_e(k));
        c.coproducts[gen_f(k)] = primitive(gen_f(k));
        TensorPoly h = primitive(gen_h(k));
        for (int i = 0; i + 1 <= k; ++i)
            h -= Scalar(4) * p * tensor(gen_f(i), gen_e(k - 1 - i));
        c.coproducts[gen_h(k)] = h;
    }
    return c;
}

TensorPoly apply_coproduct(const HopfPresentation& pres, const Normalizer& norm, const NCPoly& x)
{
    TensorPoly out(2);
    for (const auto& [w, c] : x.terms()) {
        TensorPoly term = TensorPoly::identity(2);
        for (GenId g : w)
            term = norm.multiply(term, pres.coproduct(g));
        out += c * term;
    }
    return out;
}

std::string export_text(const HopfPresentation& pres)
{
    std::ostringstream out;
    out << "# " << pres.name << " capacity " << pres.table.capacity() << "\n";
    out << dump(pres.table);
    for (const auto& [g, d] : pres.coproducts)
        out << "Delta(" << to_string(g) << ") = " << to_string(d) << "\n";
    return out.str();
}

} // namespace yangian
