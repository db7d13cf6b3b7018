#include <random>

#include "doctest.h"
#include "yangian/errors.hpp"
#include "yangian/evalrep.hpp"

using namespace yangian;

namespace {

const Scalar p = Scalar::param(param::p);
const Scalar l1 = Scalar::param(param::lambda1);
const Scalar l2 = Scalar::param(param::lambda2);

std::vector<EvalRep> c4_legs()
{
    return {EvalRep{rep_c4(), param::lambda1}, EvalRep{rep_c4(), param::lambda2}};
}

TensorPoly t2(GenId a, GenId b)
{
    return TensorPoly::product({NCPoly(a), NCPoly(b)});
}

const HopfPresentation& factor()
{
    static const HopfPresentation pres = quotient_by_hp(build_boundary(6));
    return pres;
}

} // namespace

TEST_CASE("representations")
{
    const LieRep fund = fundamental_sl2();
    CHECK(commutator(fund.image("e"), fund.image("f")) == fund.image("h"));
    CHECK(anticommutator(fund.image("h"), fund.image("e")).is_zero());
    CHECK(anticommutator(fund.image("h"), fund.image("f")).is_zero());

    const LieRep c4 = rep_c4();
    CHECK(c4.dim() == 4);
    CHECK(commutator(c4.image("e"), c4.image("f")).is_zero());
    CHECK(commutator(c4.image("h"), c4.image("e")) == 4 * p * c4.image("e"));
    CHECK(commutator(c4.image("h"), c4.image("f")) == -4 * p * c4.image("f"));

    // h = diag(1, 1) breaks [h, e] = 2e
    CHECK_THROWS_AS(LieRep(builtin("sl2"), {MatrixRF::unit(2, 0, 1), MatrixRF::unit(2, 1, 0),
                                             MatrixRF::identity(2)}),
                    AlgebraError);
}

TEST_CASE("mode evaluation")
{
    const EvalRep rep{fundamental_sl2(), param::lambda};
    const Scalar lam = Scalar::param(param::lambda);
    CHECK(eval_mode(rep, gen_e(2)) == lam * lam * MatrixRF::unit(2, 0, 1));
    CHECK(eval_mode(rep, gen_h(0)) == MatrixRF::diagonal({Scalar(1), Scalar(-1)}));
    CHECK_THROWS_AS(eval_mode(rep, gen_hp(0)), AlgebraError);

    const MatrixRF he = commutator(eval_mode(rep, gen_h(1)), eval_mode(rep, gen_e(0))) -
                        commutator(eval_mode(rep, gen_h(0)), eval_mode(rep, gen_e(1))) -
                        Scalar::param(param::hbar) * anticommutator(eval_mode(rep, gen_h(0)), eval_mode(rep, gen_e(0)));
    CHECK(he.is_zero());

    CHECK(check_eval_relations(rep, RelationSet::YSl2, 3).passed);
    CHECK(check_eval_relations(EvalRep{rep_c4(), param::lambda}, RelationSet::Factor, 3).passed);
    // the fundamental representation has [e, f] = h, which Y(c) forbids
    CHECK_FALSE(check_eval_relations(rep, RelationSet::Factor, 1).passed);
}

TEST_CASE("exponentials of nilpotent matrices")
{
    const MatrixRF x = (Scalar(1) / (l2 - l1)) * eval(c4_legs(), t2(gen_f(0), gen_e(0)));
    CHECK((x * x).is_zero());
    CHECK(exp_nilpotent(x) == MatrixRF::identity(16) + x);
    CHECK(exp_nilpotent(MatrixRF(5)) == MatrixRF::identity(5));
    CHECK_THROWS_AS(exp_nilpotent(MatrixRF::diagonal({Scalar(1), Scalar(2)})), NotNilpotent);

    // Jordan block: exp(N) has 1/k! on the k-th superdiagonal
    MatrixRF n(4);
    for (int i = 0; i < 3; ++i)
        n(i, i + 1) = Scalar(1);
    const MatrixRF en = exp_nilpotent(n);
    CHECK(en(0, 3) == Scalar(1) / Scalar(6));
    CHECK(en(0, 2) == Scalar(1) / Scalar(2));
}

TEST_CASE("property: exp(M) exp(-M) = 1")
{
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        MatrixRF m(4);
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j)
                m(i, j) = Scalar(coeff(rng)) + Scalar(coeff(rng)) * l1;
        }
        // conjugate by a fixed invertible matrix so the input is not triangular
        MatrixRF s = MatrixRF::identity(4);
        s(3, 0) = Scalar(2);
        s(1, 2) = l2;
        const MatrixRF mm = s * m * s.inverse();
        CHECK(exp_nilpotent(mm) * exp_nilpotent(-mm) == MatrixRF::identity(4));
    }
}

TEST_CASE("matrix inverse")
{
    MatrixRF a = MatrixRF::identity(3);
    a(0, 1) = l1;
    a(2, 0) = p;
    CHECK(a * a.inverse() == MatrixRF::identity(3));
    CHECK_THROWS_AS(MatrixRF::unit(2, 0, 1).inverse(), AlgebraError);
}

TEST_CASE("twist")
{
    const auto legs = c4_legs();
    const MatrixRF F = exp_nilpotent((Scalar(1) / (l2 - l1)) * eval(legs, t2(gen_f(0), gen_e(0))));
    const MatrixRF Finv = F.inverse();
    CHECK(F * eval(legs, primitive(gen_h(1))) * Finv ==
          eval(legs, primitive(gen_h(1))) - 4 * p * eval(legs, t2(gen_f(0), gen_e(0))));
    CHECK(F * eval(legs, primitive(gen_e(1))) * Finv == eval(legs, primitive(gen_e(1))));
    CHECK(F * eval(legs, primitive(gen_h(2))) * Finv == eval(legs, factor().coproduct(gen_h(2))));

    for (const auto& r : twist_check(2)) {
        INFO(r.name << ": " << r.residual);
        CHECK(r.status == CheckStatus::Pass);
    }
}

TEST_CASE("R-matrix")
{
    CHECK(ybe_residual().is_zero());
    CHECK(unitarity_residual().is_zero());
    CHECK(r_from_twist_residual_flip().is_zero());
    CHECK(r_from_twist_residual_spectral().is_zero());

    // first-order term of R equals the projected rational r-matrix
    const LieAlg a = builtin("a");
    const SpectralTensor r = project_factor_r(rational_r(a), a);
    CHECK(eval(rep_c4(), r, a) == r_exponent());
    CHECK((r_exponent() * r_exponent() * r_exponent()).is_zero());
}

TEST_CASE("pseudo-quasitriangularity")
{
    for (GenId g : {gen_h(0), gen_h(1), gen_h(2), gen_e(1), gen_f(1), gen_e(2), gen_f(2)}) {
        INFO(to_string(g));
        CHECK(pqybe_residual(g).is_zero());
    }
    // Δ(h_1) is not cocommutative, so the conjugation does real work
    const auto legs = c4_legs();
    const TensorPoly& d = factor().coproduct(gen_h(1));
    CHECK(eval(legs, flip(d)) != eval(legs, d));
}
