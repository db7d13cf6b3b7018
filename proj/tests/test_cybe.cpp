#include "doctest.h"
#include "yangian/cybe.hpp"
#include "yangian/errors.hpp"

using namespace yangian;

namespace {

const Scalar p = Scalar::param(param::p);
const Scalar t = Scalar::param(param::t);
const Scalar u = Scalar::param(param::u);
const Scalar v = Scalar::param(param::v);

LieVector vec(const LieAlg& g, std::initializer_list<std::pair<const char*, Scalar>> parts)
{
    LieVector out(std::size_t(g.dim()), Scalar(0));
    for (const auto& [s, c] : parts)
        out[std::size_t(g.index(s))] += c;
    return out;
}

SpectralTensor tensor(const LieAlg& g, std::initializer_list<std::tuple<const char*, const char*, Scalar>> parts)
{
    SpectralTensor out;
    for (const auto& [a, b, c] : parts)
        out.add({g.index(a), g.index(b)}, c);
    return out;
}

const HopfPresentation& boundary()
{
    static const HopfPresentation pres = build_boundary(6);
    return pres;
}

} // namespace

TEST_CASE("builtin structure constants")
{
    const LieAlg a = builtin("a");
    CHECK(a.bracket(a.index("e"), a.index("f")) == vec(a, {{"hp", p / Scalar(2)}}));
    CHECK(a.bracket(a.index("h"), a.index("e")) == vec(a, {{"e", 4 * p}}));
    CHECK(a.bracket(a.index("h"), a.index("f")) == vec(a, {{"f", -4 * p}}));
    CHECK(a.bracket(a.index("hp"), a.index("e")) == vec(a, {}));

    const LieAlg c = builtin("c");
    CHECK(c.bracket(c.index("e"), c.index("f")) == vec(c, {}));

    const LieAlg d = builtin("double");
    CHECK(d.bracket(d.index("e"), d.index("f")) ==
          vec(d, {{"h", Scalar(1) / Scalar(2)}, {"hp", Scalar(1) / Scalar(2)}}));

    const LieAlg sl2 = builtin("sl2");
    CHECK(sl2.bracket(sl2.index("e"), sl2.index("f")) == vec(sl2, {{"h", Scalar(1)}}));
    CHECK(sl2.bracket(sl2.index("h"), sl2.index("e")) == vec(sl2, {{"e", Scalar(2)}}));

    CHECK_THROWS_AS(builtin("sl3"), AlgebraError);
    CHECK_THROWS_AS(sl2.index("hp"), AlgebraError);
}

TEST_CASE("property: builtins are antisymmetric and satisfy Jacobi")
{
    for (const char* name : {"sl2", "double", "a", "c", "borel2"}) {
        INFO(name);
        const LieAlg g = builtin(name);
        const int n = g.dim();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                LieVector sum = g.bracket(i, j);
                const LieVector& back = g.bracket(j, i);
                for (int k = 0; k < n; ++k)
                    sum[std::size_t(k)] += back[std::size_t(k)];
                CHECK(sum == LieVector(std::size_t(n), Scalar(0)));
                for (int k = 0; k < n; ++k) {
                    const LieVector x = g.unit(i), y = g.unit(j), z = g.unit(k);
                    LieVector jac = g.bracket(x, g.bracket(y, z));
                    const LieVector b = g.bracket(y, g.bracket(z, x));
                    const LieVector c = g.bracket(z, g.bracket(x, y));
                    for (int m = 0; m < n; ++m)
                        jac[std::size_t(m)] += b[std::size_t(m)] + c[std::size_t(m)];
                    CHECK(jac == LieVector(std::size_t(n), Scalar(0)));
                }
            }
        }
    }
}

TEST_CASE("invalid structure constants are rejected")
{
    const LieVector zero{Scalar(0), Scalar(0)};
    const LieVector x{Scalar(1), Scalar(0)};
    // [x, y] = x but [y, x] = x as well
    CHECK_THROWS_AS(LieAlg("bad", {"x", "y"}, {{zero, x}, {x, zero}}), AlgebraError);
    // symmetric form that is not invariant under [y, x] = x
    const MatrixRF form = MatrixRF::identity(2);
    const LieVector mx{Scalar(-1), Scalar(0)};
    CHECK_THROWS_AS(LieAlg("bad", {"x", "y"}, {{zero, mx}, {x, zero}}, form), AlgebraError);
    CHECK_NOTHROW(LieAlg("borel", {"x", "y"}, {{zero, mx}, {x, zero}}));
}

TEST_CASE("casimir inverts the invariant form")
{
    for (const char* name : {"sl2", "a"}) {
        INFO(name);
        const LieAlg g = builtin(name);
        const SpectralTensor omega = casimir(g);
        const MatrixRF& b = *g.form();
        // sum_j omega_ij B_jk = delta_ik
        for (int i = 0; i < g.dim(); ++i) {
            for (int k = 0; k < g.dim(); ++k) {
                Scalar s(0);
                for (int j = 0; j < g.dim(); ++j)
                    s += omega.coefficient({i, j}) * b(j, k);
                CHECK(s == Scalar(i == k ? 1 : 0));
            }
        }
    }
    const LieAlg sl2 = builtin("sl2");
    CHECK(casimir(sl2) == tensor(sl2, {{"e", "f", Scalar(1)}, {"f", "e", Scalar(1)}, {"h", "h", Scalar(1) / Scalar(2)}}));
    const LieAlg a = builtin("a");
    CHECK(casimir(a) == tensor(a, {{"e", "f", Scalar(1)},
                                   {"f", "e", Scalar(1)},
                                   {"h", "hp", Scalar(1) / Scalar(8)},
                                   {"hp", "h", Scalar(1) / Scalar(8)}}));
    CHECK_THROWS_AS(casimir(builtin("double")), AlgebraError);
}

TEST_CASE("classical Yang-Baxter residual")
{
    const LieAlg a = builtin("a"), sl2 = builtin("sl2");
    CHECK(cybe_residual(rational_r(a), a).is_zero());
    CHECK(cybe_residual(rational_r(sl2), sl2).is_zero());

    const Scalar pole = Scalar(1) / (u - v);
    const SpectralTensor he = tensor(sl2, {{"h", "e", pole}});
    const SpectralTensor res = cybe_residual(he, sl2);
    CHECK_FALSE(res.is_zero());
    // [h e, h e] on legs 12, 13 gives h⊗e⊗e scaled by -2/((l1-l2)(l1-l3)) among others
    CHECK_FALSE(res.coefficient({sl2.index("h"), sl2.index("e"), sl2.index("e")}).is_zero());

    // e commutes with itself, so (e⊗e)/(u-v) solves the equation trivially
    CHECK(cybe_residual(tensor(sl2, {{"e", "e", pole}}), sl2).is_zero());
}

TEST_CASE("ad-invariance")
{
    const LieAlg a = builtin("a"), sl2 = builtin("sl2");
    for (const auto& r : ad_invariance_residual(casimir(a), a))
        CHECK(r.is_zero());
    for (const auto& r : ad_invariance_residual(casimir(sl2), sl2))
        CHECK(r.is_zero());

    const auto res = ad_invariance_residual(tensor(sl2, {{"h", "h", Scalar(1)}}), sl2);
    const SpectralTensor& at_e = res[std::size_t(sl2.index("e"))];
    // [e, h]⊗h + h⊗[e, h] = -2(e⊗h + h⊗e)
    CHECK(at_e == tensor(sl2, {{"e", "h", Scalar(-2)}, {"h", "e", Scalar(-2)}}));
    CHECK(res[std::size_t(sl2.index("h"))].is_zero());
}

TEST_CASE("cobracket")
{
    const LieAlg a = builtin("a"), sl2 = builtin("sl2");
    const SpectralTensor r = rational_r(a);
    const int e = a.index("e");
    CHECK(cobracket(r, a, a.index("hp"), 0).is_zero());
    CHECK(cobracket(r, a, a.index("hp"), 1).is_zero());
    CHECK(cobracket(rational_r(sl2), sl2, sl2.index("h"), 0).is_zero());

    // [u e⊗1 + v 1⊗e, Ω/(u-v)] = [e⊗1, Ω] by invariance; [e, h] = -4p e, [e, f] = (p/2) hp.
    const SpectralTensor de = cobracket(r, a, e, 1);
    const Scalar half_p = p / Scalar(2);
    CHECK(de == tensor(a, {{"hp", "e", half_p}, {"e", "hp", -half_p}}));
    SpectralTensor sym = de;
    sym += flip(de);
    CHECK(sym.is_zero());

    for (int mode = 0; mode <= 2; ++mode) {
        for (int x = 0; x < a.dim(); ++x) {
            const SpectralTensor d = cobracket(r, a, x, mode);
            SpectralTensor sum = d;
            sum += flip(d);
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("mode reading of spectral tensors")
{
    const LieAlg a = builtin("a");
    const SpectralTensor x = tensor(a, {{"e", "f", u * v}, {"hp", "h", Scalar(3)}});
    const TensorPoly expected = TensorPoly::product({NCPoly(gen_e(1)), NCPoly(gen_f(1))}) +
                                Scalar(3) * TensorPoly::product({NCPoly(gen_hp(0)), NCPoly(gen_h(0))});
    CHECK(to_modes(x, a) == expected);
    CHECK_THROWS_AS(to_modes(rational_r(a), a), AlgebraError);
}

TEST_CASE("co-Lie structure of the boundary Yangian")
{
    const LieAlg a = builtin("a");
    const ColieReport rep = compare_colie(boundary(), rational_r(a), a);
    CHECK(rep.outcome.passed);
    REQUIRE(rep.constant.has_value());
    CHECK(*rep.constant == Scalar(1));
    CHECK(rep.entries.size() == 8);
    for (const auto& e : rep.entries) {
        INFO(to_string(e.generator));
        CHECK(e.consistent);
        if (e.generator == gen_hp(1))
            CHECK(e.cocommutator == "0");
    }

    // (Δ - Δ^op)(e_1) directly from the presentation
    const TensorPoly de1 = boundary().coproduct(gen_e(1));
    const TensorPoly expected = (p / Scalar(2)) * (TensorPoly::product({NCPoly(gen_hp(0)), NCPoly(gen_e(0))}) -
                                                   TensorPoly::product({NCPoly(gen_e(0)), NCPoly(gen_hp(0))}));
    CHECK(de1 - flip(de1) == expected);

    // rescaling r rescales the constant
    const ColieReport doubled = compare_colie(boundary(), Scalar(2) * rational_r(a), a);
    CHECK(doubled.outcome.passed);
    CHECK(doubled.constant == Scalar(2));

    // a non-invariant numerator leaves a pole in the cobracket, which has no mode reading
    SpectralTensor skewed = rational_r(a);
    skewed.terms[{a.index("e"), a.index("f")}] = Scalar(2) / (u - v);
    CHECK_THROWS_AS(compare_colie(boundary(), skewed, a), AlgebraError);
}

TEST_CASE("projection to the factor")
{
    const LieAlg a = builtin("a");
    const Scalar pole = Scalar(1) / (u - v);
    CHECK(project_factor_r(rational_r(a), a) == tensor(a, {{"e", "f", pole}, {"f", "e", pole}}));
    const SpectralTensor no_hp = tensor(a, {{"e", "h", pole}, {"f", "f", u}});
    CHECK(project_factor_r(no_hp, a) == no_hp);
}

TEST_CASE("divergence of the parametrized rational r-matrix")
{
    const DivergenceReport rep = parametrized_r_divergence();
    const LieAlg d = builtin("a");
    const Scalar pole = Scalar(1) / (u - v);
    CHECK(rep.finite_matches);
    CHECK(rep.finite == rational_r(d));
    CHECK(rep.pole_order == 1);
    CHECK(rep.vanishing_order == 1);
    CHECK(rep.divergent == tensor(d, {{"hp", "hp", p / (Scalar(8) * t) * pole}}));
    CHECK(rep.vanishing == tensor(d, {{"h", "h", t / (Scalar(8) * p) * pole}}));
}
