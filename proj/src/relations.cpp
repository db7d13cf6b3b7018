#include "yangian/relations.hpp"

#include <algorithm>

namespace yangian {

int Relation::grade() const
{
    int g = 0;
    for (const auto& b : lhs)
        g = std::max(g, b.a.mode + b.b.mode);
    return g;
}

int Relation::max_mode() const
{
    int m = rhs.max_mode();
    for (const auto& b : lhs)
        m = std::max({m, int(b.a.mode), int(b.b.mode)});
    return m;
}

std::string Relation::label() const
{
    return kind + "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

namespace {

GenId gen(Family f, int k)
{
    return {f, static_cast<std::uint8_t>(k)};
}

NCPoly anti(GenId a, GenId b)
{
    return NCPoly::word({a, b}) + NCPoly::word({b, a});
}

Relation single(std::string kind, int k, int l, GenId a, GenId b, NCPoly rhs)
{
    return {std::move(kind), k, l, {{Scalar(1), a, b}}, std::move(rhs)};
}

// [x_{k+1}, y_l] - [x_k, y_{l+1}] = rhs
Relation shifted(std::string kind, int k, int l, Family x, Family y, NCPoly rhs)
{
    return {std::move(kind),
            k,
            l,
            {{Scalar(1), gen(x, k + 1), gen(y, l)}, {Scalar(-1), gen(x, k), gen(y, l + 1)}},
            std::move(rhs)};
}

void add_commuting(std::vector<Relation>& out, const std::string& kind, Family x, Family y,
                   int bound)
{
    for (int k = 0; k <= bound; ++k) {
        for (int l = 0; k + l <= bound; ++l) {
            if (x == y && k >= l)
                continue;
            out.push_back(single(kind, k, l, gen(x, k), gen(y, l), NCPoly()));
        }
    }
}

} // namespace

std::vector<Relation> defining_relations(RelationSet set, int bound)
{
    using F = Family;
    const Scalar hbar = Scalar::param(param::hbar);
    const Scalar p = Scalar::param(param::p);
    std::vector<Relation> out;

    add_commuting(out, "hh", F::H, F::H, bound);
    if (set == RelationSet::Boundary) {
        add_commuting(out, "hphp", F::Hp, F::Hp, bound);
        add_commuting(out, "hhp", F::H, F::Hp, bound);
    }

    for (int k = 0; k <= bound; ++k) {
        for (int l = 0; k + l <= bound; ++l) {
            NCPoly rhs;
            if (set == RelationSet::YSl2)
                rhs = gen_h(k + l);
            else if (set == RelationSet::Boundary)
                rhs = (p / Scalar(2)) * NCPoly(gen_hp(k + l));
            out.push_back(single("ef", k, l, gen_e(k), gen_f(l), rhs));
        }
    }

    const Scalar weight = set == RelationSet::YSl2 ? Scalar(2) : Scalar(4) * p;
    for (int l = 0; l <= bound; ++l) {
        out.push_back(single("h0e", 0, l, gen_h(0), gen_e(l), weight * NCPoly(gen_e(l))));
        out.push_back(single("h0f", 0, l, gen_h(0), gen_f(l), -weight * NCPoly(gen_f(l))));
        if (set == RelationSet::Boundary) {
            out.push_back(single("hp0e", 0, l, gen_hp(0), gen_e(l), NCPoly()));
            out.push_back(single("hp0f", 0, l, gen_hp(0), gen_f(l), NCPoly()));
        }
    }

    for (int k = 0; k + 1 <= bound; ++k) {
        for (int l = 0; k + l + 1 <= bound; ++l) {
            NCPoly he, hf, ee, ff;
            if (set == RelationSet::YSl2) {
                he = hbar * anti(gen_h(k), gen_e(l));
                hf = -hbar * anti(gen_h(k), gen_f(l));
                ee = hbar * anti(gen_e(k), gen_e(l));
                ff = -hbar * anti(gen_f(k), gen_f(l));
            } else if (set == RelationSet::Boundary) {
                he = p * p * anti(gen_hp(k), gen_e(l));
                hf = -p * p * anti(gen_hp(k), gen_f(l));
            }
            out.push_back(shifted("he", k, l, F::H, F::E, he));
            out.push_back(shifted("hf", k, l, F::H, F::F, hf));
            if (set == RelationSet::Boundary) {
                out.push_back(shifted("hpe", k, l, F::Hp, F::E, NCPoly()));
                out.push_back(shifted("hpf", k, l, F::Hp, F::F, NCPoly()));
            }
            out.push_back(shifted("ee", k, l, F::E, F::E, ee));
            out.push_back(shifted("ff", k, l, F::F, F::F, ff));
        }
    }
    return out;
}

NCPoly relation_residual(const Relation& r, const Normalizer& norm)
{
    NCPoly res = -norm.normal_order(r.rhs);
    for (const auto& b : r.lhs) {
        if (b.a != b.b)
            res += b.coeff * norm.table().bracket(b.a, b.b);
    }
    return res;
}

std::string to_string(const Relation& r)
{
    std::string out;
    for (const auto& b : r.lhs) {
        const std::string br = "[" + to_string(b.a) + ", " + to_string(b.b) + "]";
        if (b.coeff.is_one()) {
            out += out.empty() ? br : " + " + br;
        } else if ((-b.coeff).is_one()) {
            out += out.empty() ? "-" + br : " - " + br;
        } else {
            out += (out.empty() ? "" : " + ") + std::string("(") + b.coeff.to_string() + ")*" + br;
        }
    }
    return out + " = " + to_string(r.rhs);
}

} // namespace yangian
