#include <array>
#include <random>

#include "doctest.h"
#include "yangian/errors.hpp"
#include "yangian/presentation.hpp"

using namespace yangian;

namespace {

const Scalar hbar = Scalar::param(param::hbar);

NCPoly w(std::initializer_list<GenId> letters, const Scalar& c = Scalar(1))
{
    return NCPoly::word(Word(letters), c);
}

TensorPoly t2(const NCPoly& a, const NCPoly& b)
{
    return TensorPoly::product({a, b});
}

const HopfPresentation& y()
{
    static const HopfPresentation pres = build_y_sl2(6);
    return pres;
}

// Tiny hand-made table: [e_0, f_0] = h_0, [h_0, e_0] = 2e_0, [h_0, f_0] = -2f_0.
CommTable tiny_table()
{
    CommTable t({Family::E, Family::F, Family::H}, 0);
    t.set(gen_e(0), gen_f(0), NCPoly(gen_h(0)));
    t.set(gen_h(0), gen_e(0), Scalar(2) * NCPoly(gen_e(0)));
    t.set(gen_h(0), gen_f(0), Scalar(-2) * NCPoly(gen_f(0)));
    return t;
}

struct RandomPolys {
    std::mt19937 rng{7};

    GenId gen(int max_mode)
    {
        std::uniform_int_distribution<int> fam(0, 2), mode(0, max_mode);
        const Family fams[] = {Family::E, Family::F, Family::H};
        return GenId{fams[fam(rng)], std::uint8_t(mode(rng))};
    }

    NCPoly poly(int max_len, int max_mode)
    {
        std::uniform_int_distribution<int> nterms(1, 3), len(1, max_len), coeff(-3, 3);
        NCPoly out;
        for (int i = nterms(rng); i > 0; --i) {
            Word word;
            for (int j = len(rng); j > 0; --j)
                word.push_back(gen(max_mode));
            out.add_term(word, Scalar(coeff(rng)) * (coeff(rng) > 0 ? hbar : Scalar(1)));
        }
        return out;
    }
};

} // namespace

TEST_CASE("default generator order puts f before hp before h before e")
{
    const GenOrder ord;
    CHECK(ord.less(gen_f(3), gen_hp(0)));
    CHECK(ord.less(gen_hp(3), gen_h(0)));
    CHECK(ord.less(gen_h(3), gen_e(0)));
    CHECK(ord.less(gen_e(0), gen_e(1)));
    CHECK_FALSE(ord.less(gen_e(1), gen_e(1)));
    CHECK(is_normal({gen_f(0), gen_h(1), gen_e(0), gen_e(2)}, ord));
    CHECK_FALSE(is_normal({gen_e(0), gen_f(0)}, ord));
    const std::array<int, 4> repeated{0, 0, 1, 2};
    CHECK_THROWS_AS(GenOrder{repeated}, AlgebraError);
}

TEST_CASE("normal ordering examples")
{
    const Normalizer n(y().table);
    CHECK(n.normal_order(w({gen_e(0), gen_f(1)})) == w({gen_f(1), gen_e(0)}) + NCPoly(gen_h(1)));
    CHECK(n.normal_order(w({gen_h(3), gen_h(1)})) == w({gen_h(1), gen_h(3)}));
    // [e_1, e_0] - [e_0, e_1] = hbar {e_0, e_0} with antisymmetry gives [e_1, e_0] = hbar e_0^2.
    CHECK(n.normal_order(w({gen_e(1), gen_e(0)})) == w({gen_e(0), gen_e(1)}) + w({gen_e(0), gen_e(0)}, hbar));
    CHECK(n.normal_order(w({gen_f(0), gen_h(0), gen_e(0)})) == w({gen_f(0), gen_h(0), gen_e(0)}));
}

TEST_CASE("commutator examples")
{
    const Normalizer n(y().table);
    CHECK(n.commutator(NCPoly(gen_e(0)), NCPoly(gen_f(0))) == NCPoly(gen_h(0)));
    CHECK(n.commutator(NCPoly(gen_h(0)), NCPoly(gen_h(5))).is_zero());
    CHECK(n.commutator(NCPoly(gen_h(0)), NCPoly(gen_e(2))) == Scalar(2) * NCPoly(gen_e(2)));
}

TEST_CASE("hand-made table straightens sl2 words")
{
    const CommTable t = tiny_table();
    const Normalizer n(t);
    // e f e = (f e + h) e = f e^2 + h e
    CHECK(n.normal_order(w({gen_e(0), gen_f(0), gen_e(0)})) ==
          w({gen_f(0), gen_e(0), gen_e(0)}) + w({gen_h(0), gen_e(0)}));
    // e h = h e - 2e
    CHECK(n.normal_order(w({gen_e(0), gen_h(0)})) == w({gen_h(0), gen_e(0)}) - Scalar(2) * NCPoly(gen_e(0)));
    CHECK(n.normal_order(NCPoly(Scalar(5))) == NCPoly(Scalar(5)));
}

TEST_CASE("missing entries and capacity overflow are typed errors")
{
    CommTable t({Family::E, Family::F, Family::H}, 1);
    t.set(gen_e(0), gen_f(0), NCPoly(gen_h(0)));
    const Normalizer n(t);
    CHECK_THROWS_AS(n.normal_order(w({gen_e(1), gen_f(0)})), IncompletePresentation);
    CHECK_THROWS_AS(n.normal_order(w({gen_e(2), gen_f(0)})), CapacityError);
    CHECK_THROWS_AS(t.bracket(gen_e(1), gen_f(1)), CapacityError);
    CHECK(t.first_missing().has_value());
}

TEST_CASE("table entries must be normal and lower in the filtration")
{
    CommTable t({Family::E, Family::F, Family::H}, 2);
    CHECK_THROWS_AS(t.set(gen_e(0), gen_f(0), w({gen_e(0), gen_f(0)})), AlgebraError);
    CHECK_THROWS_AS(t.set(gen_e(1), gen_e(0), w({gen_e(0), gen_e(1)})), AlgebraError);
    CHECK_THROWS_AS(t.set(gen_e(0), gen_e(0), NCPoly()), AlgebraError);
    CHECK_NOTHROW(t.set(gen_e(1), gen_e(0), w({gen_e(0), gen_e(0)}, hbar)));
    CHECK_NOTHROW(t.set(gen_e(1), gen_f(0), NCPoly(gen_h(1))));
    CHECK(t.bracket(gen_f(0), gen_e(1)) == -NCPoly(gen_h(1)));
}

TEST_CASE("tensor operations")
{
    const NCPoly e0(gen_e(0)), f0(gen_f(0)), h0(gen_h(0)), one(Scalar(1));
    CHECK(flip(t2(h0, e0)) == t2(e0, h0));
    CHECK(t2(e0, one) * t2(one, f0) == t2(e0, f0));
    TensorPoly expected(3);
    expected.add_term({{gen_f(0)}, {}, {gen_e(0)}}, Scalar(1));
    CHECK(embed(t2(f0, e0), Legs::L13) == expected);
    CHECK_THROWS_AS(t2(e0, f0) * TensorPoly::identity(3), AlgebraError);
    CHECK_THROWS_AS(flip(TensorPoly::identity(3)), AlgebraError);

    const Normalizer n(y().table);
    // legs straighten independently
    CHECK(n.multiply(t2(e0, f0), t2(f0, e0)) == n.normal_order(t2(w({gen_e(0), gen_f(0)}), w({gen_f(0), gen_e(0)}))));
    CHECK(n.multiply(t2(e0, f0), t2(f0, e0)) ==
          t2(w({gen_f(0), gen_e(0)}) + h0, w({gen_f(0), gen_e(0)})));
}

TEST_CASE("equality of coproduct values")
{
    const Normalizer n(y().table);
    CHECK(n.normal_order(w({gen_h(0), gen_h(1)}) - w({gen_h(1), gen_h(0)})).is_zero());
    CHECK(y().coproduct(gen_e(0)) == flip(y().coproduct(gen_e(0))));
    CHECK(y().coproduct(gen_e(1)) != flip(y().coproduct(gen_e(1))));
}

TEST_CASE("rendering")
{
    CHECK(to_string(w({gen_e(0), gen_e(0), gen_h(1)})) == "e_0^2*h_1");
    CHECK(to_string(NCPoly()) == "0");
    CHECK(to_string(Scalar::param(param::p) / Scalar(2) * NCPoly(gen_hp(0))) == "(p/2)*hp_0");
    CHECK(to_string(Scalar(-2) * hbar * t2(NCPoly(gen_f(0)), NCPoly(gen_e(0)))) == "-2*hbar*f_0 (x) e_0");
    const std::string d = dump(tiny_table());
    CHECK(d.find("[e_0, f_0] = h_0") != std::string::npos);
}

TEST_CASE("property: normal ordering is a projection")
{
    const Normalizer n(y().table);
    RandomPolys gen;
    for (int i = 0; i < 60; ++i) {
        const NCPoly x = gen.poly(4, 1);
        const NCPoly once = n.normal_order(x);
        CHECK(n.normal_order(once) == once);
        for (const auto& [word, c] : once.terms())
            CHECK(is_normal(word, y().table.order()));
    }
}

TEST_CASE("property: commutator is antisymmetric and bilinear")
{
    const Normalizer n(y().table);
    RandomPolys gen;
    for (int i = 0; i < 40; ++i) {
        const NCPoly a = gen.poly(2, 1), b = gen.poly(2, 1), c = gen.poly(2, 1);
        CHECK(n.commutator(a, b) == -n.commutator(b, a));
        CHECK(n.commutator(a + Scalar(3) * c, b) == n.commutator(a, b) + Scalar(3) * n.commutator(c, b));
    }
}

TEST_CASE("property: Jacobi holds on the built-in tables")
{
    for (const HopfPresentation* pres : {&y()}) {
        const CommTable& t = pres->table;
        const Normalizer n(t);
        const auto gens = t.generators(2);
        int checked = 0;
        for (GenId a : gens) {
            for (GenId b : gens) {
                for (GenId c : gens) {
                    if (a == b || b == c || a == c || a.mode + b.mode + c.mode > 3)
                        continue;
                    const NCPoly res = n.commutator(NCPoly(a), t.bracket(b, c)) +
                                       n.commutator(NCPoly(b), t.bracket(c, a)) +
                                       n.commutator(NCPoly(c), t.bracket(a, b));
                    CHECK(res.is_zero());
                    ++checked;
                }
            }
        }
        CHECK(checked > 100);
    }
}
