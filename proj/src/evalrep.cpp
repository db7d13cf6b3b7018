#include "yangian/evalrep.hpp"

#include "yangian/errors.hpp"
#include "yangian/hopf_checks.hpp"

namespace yangian {

LieRep::LieRep(LieAlg algebra, std::vector<MatrixRF> images)
    : algebra_(std::move(algebra)), images_(std::move(images))
{
    const int n = algebra_.dim();
    if (int(images_.size()) != n || n == 0)
        throw AlgebraError(algebra_.name() + ": one image per basis element is required");
    for (const auto& m : images_) {
        if (m.dim() != images_.front().dim())
            throw AlgebraError(algebra_.name() + ": images have different dimensions");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            MatrixRF expected(dim());
            const LieVector& b = algebra_.bracket(i, j);
            for (int k = 0; k < n; ++k) {
                if (!b[std::size_t(k)].is_zero())
                    expected += b[std::size_t(k)] * images_[std::size_t(k)];
            }
            if (commutator(images_[std::size_t(i)], images_[std::size_t(j)]) != expected)
                throw AlgebraError(algebra_.name() + ": representation fails on [" +
                                   algebra_.basis()[std::size_t(i)] + ", " +
                                   algebra_.basis()[std::size_t(j)] + "]");
        }
    }
}

LieRep fundamental_sl2()
{
    return LieRep(builtin("sl2"), {MatrixRF::unit(2, 0, 1), MatrixRF::unit(2, 1, 0),
                                   MatrixRF::diagonal({Scalar(1), Scalar(-1)})});
}

LieRep rep_c4()
{
    const Scalar twop = Scalar(2) * Scalar::param(param::p);
    return LieRep(builtin("c"), {MatrixRF::unit(4, 0, 1), MatrixRF::unit(4, 2, 3),
                                 MatrixRF::diagonal({twop, -twop, -twop, twop})});
}

namespace {

std::string symbol_of(Family f)
{
    switch (f) {
    case Family::E:
        return "e";
    case Family::F:
        return "f";
    case Family::H:
        return "h";
    case Family::Hp:
        return "hp";
    }
    return "?";
}

} // namespace

MatrixRF eval_mode(const EvalRep& rep, GenId g)
{
    const MatrixRF& base = rep.rep.image(symbol_of(g.family));
    return Scalar::param(rep.spectral).pow(g.mode) * base;
}

MatrixRF eval(const EvalRep& rep, const NCPoly& x)
{
    MatrixRF out(rep.rep.dim());
    for (const auto& [w, c] : x.terms()) {
        MatrixRF m = MatrixRF::identity(rep.rep.dim());
        for (GenId g : w)
            m = m * eval_mode(rep, g);
        out += c * m;
    }
    return out;
}

MatrixRF eval(const std::vector<EvalRep>& legs, const TensorPoly& x)
{
    if (int(legs.size()) != x.degree())
        throw AlgebraError("one evaluation representation per tensor leg is required");
    int d = 1;
    for (const auto& l : legs)
        d *= l.rep.dim();
    MatrixRF out(d);
    for (const auto& [k, c] : x.terms()) {
        MatrixRF m = eval(legs[0], NCPoly::word(k[0]));
        for (std::size_t i = 1; i < legs.size(); ++i)
            m = kron(m, eval(legs[i], NCPoly::word(k[i])));
        out += c * m;
    }
    return out;
}

MatrixRF eval(const LieRep& rep, const SpectralTensor& x, const LieAlg& basis)
{
    if (x.degree != 2)
        throw AlgebraError("matrix image needs a degree-2 spectral tensor");
    const Scalar l1 = Scalar::param(param::lambda1);
    const Scalar l2 = Scalar::param(param::lambda2);
    MatrixRF out(rep.dim() * rep.dim());
    for (const auto& [k, c] : x.terms) {
        const Scalar coeff = substitute(c, {{param::u, l1}, {param::v, l2}});
        out += coeff * kron(rep.image(basis.basis()[std::size_t(k[0])]),
                            rep.image(basis.basis()[std::size_t(k[1])]));
    }
    return out;
}

MatrixRF exp_nilpotent(const MatrixRF& m)
{
    const int d = m.dim();
    MatrixRF out = MatrixRF::identity(d);
    MatrixRF power = MatrixRF::identity(d);
    Scalar factorial(1);
    for (int k = 1; k <= d; ++k) {
        power = power * m;
        if (power.is_zero())
            return out;
        if (k == d)
            break;
        factorial *= Scalar(k);
        out += (Scalar(1) / factorial) * power;
    }
    throw NotNilpotent("matrix is not nilpotent: M^" + std::to_string(d) + " != 0");
}

Outcome check_eval_relations(const EvalRep& rep, RelationSet set, int bound)
{
    Tally tally;
    for (const auto& r : defining_relations(set, bound)) {
        MatrixRF res = -eval(rep, r.rhs);
        for (const auto& b : r.lhs)
            res += b.coeff * commutator(eval_mode(rep, b.a), eval_mode(rep, b.b));
        tally.add(res.is_zero(), r.label(), res.sparse_string());
    }
    const MatrixRF& e = rep.rep.image("e");
    const MatrixRF& f = rep.rep.image("f");
    const MatrixRF& h = rep.rep.image("h");
    const std::vector<std::pair<std::string, MatrixRF>> aux{
        {"{h, e}", anticommutator(h, e)},
        {"{h, f}", anticommutator(h, f)},
        {"e^2", e * e},
        {"f^2", f * f},
    };
    for (const auto& [name, m] : aux)
        tally.add(m.is_zero(), name, m.sparse_string());
    return tally.outcome("relations and identities");
}

namespace {

const LieRep& c4()
{
    static const LieRep rep = rep_c4();
    return rep;
}

const MatrixRF& c4_image(const char* s)
{
    return c4().image(s);
}

const HopfPresentation& factor_presentation()
{
    static const HopfPresentation q = quotient_by_hp(build_boundary(kDefaultCapacity));
    return q;
}

Scalar lam(int i)
{
    static const ParamId ids[] = {param::lambda1, param::lambda2, param::lambda3};
    return Scalar::param(ids[i]);
}

// x on leg i, y on leg j of rep_c4^⊗n, identity elsewhere.
MatrixRF on_legs(int n, int i, const MatrixRF& x, int j, const MatrixRF& y)
{
    const MatrixRF id = MatrixRF::identity(4);
    MatrixRF out = i == 0 ? x : j == 0 ? y : id;
    for (int leg = 1; leg < n; ++leg)
        out = kron(out, leg == i ? x : leg == j ? y : id);
    return out;
}

// f on leg i, e on leg j: the twist exponent coupling legs i and j.
MatrixRF twist_exponent(int n, int i, int j)
{
    return (Scalar(1) / (lam(j) - lam(i))) * on_legs(n, i, c4_image("f"), j, c4_image("e"));
}

MatrixRF r_matrix(int n, int i, int j, const Scalar& x)
{
    const MatrixRF ex = on_legs(n, i, c4_image("f"), j, c4_image("e")) +
                        on_legs(n, i, c4_image("e"), j, c4_image("f"));
    return exp_nilpotent((Scalar(1) / x) * ex);
}

std::vector<EvalRep> two_legs()
{
    return {EvalRep{c4(), param::lambda1}, EvalRep{c4(), param::lambda2}};
}

MatrixRF swap_legs(const MatrixRF& m, int d)
{
    MatrixRF out(m.dim());
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c) {
                for (int e = 0; e < d; ++e)
                    out(b * d + a, e * d + c) = m(a * d + b, c * d + e);
            }
        }
    }
    return out;
}

} // namespace

std::vector<CheckRecord> twist_check(int max_mode)
{
    std::vector<CheckRecord> out;
    out.push_back(run_check("twist.conjugation", [&] {
        const auto legs = two_legs();
        const MatrixRF F = exp_nilpotent(twist_exponent(2, 0, 1));
        const MatrixRF Finv = exp_nilpotent(-twist_exponent(2, 0, 1));
        Tally tally;
        tally.add(F * Finv == MatrixRF::identity(16), "F F^-1", "F F^-1 != 1");
        const HopfPresentation& yc = factor_presentation();
        for (GenId g : yc.table.generators(max_mode)) {
            const MatrixRF res = F * eval(legs, primitive(g)) * Finv - eval(legs, yc.coproduct(g));
            tally.add(res.is_zero(), to_string(g), res.sparse_string());
        }
        return tally.outcome("generators");
    }));
    out.push_back(run_check("twist.cocycle", [&] {
        // (Δ0⊗id)F couples legs 1-3 and 2-3, (id⊗Δ0)F couples 1-2 and 1-3.
        const MatrixRF lhs = exp_nilpotent(twist_exponent(3, 0, 1)) *
                             exp_nilpotent(twist_exponent(3, 0, 2) + twist_exponent(3, 1, 2));
        const MatrixRF rhs = exp_nilpotent(twist_exponent(3, 1, 2)) *
                             exp_nilpotent(twist_exponent(3, 0, 1) + twist_exponent(3, 0, 2));
        const MatrixRF res = lhs - rhs;
        Outcome o;
        o.passed = res.is_zero();
        o.detail = "64x64 cocycle identity";
        if (!o.passed)
            o.residual = res.sparse_string();
        return o;
    }));
    return out;
}

MatrixRF ybe_residual()
{
    const MatrixRF r12 = r_matrix(3, 0, 1, lam(0) - lam(1));
    const MatrixRF r13 = r_matrix(3, 0, 2, lam(0) - lam(2));
    const MatrixRF r23 = r_matrix(3, 1, 2, lam(1) - lam(2));
    return r12 * r13 * r23 - r23 * r13 * r12;
}

MatrixRF unitarity_residual()
{
    const Scalar x = lam(0) - lam(1);
    return r_matrix(2, 0, 1, x) * r_matrix(2, 1, 0, -x) - MatrixRF::identity(16);
}

MatrixRF r_from_twist_residual_flip()
{
    const MatrixRF F = exp_nilpotent(twist_exponent(2, 0, 1));
    const MatrixRF F21 = swap_legs(F, 4);
    return r_matrix(2, 0, 1, lam(0) - lam(1)) - (F21 * F).inverse();
}

MatrixRF r_from_twist_residual_spectral()
{
    const MatrixRF F = exp_nilpotent(twist_exponent(2, 0, 1));
    const MatrixRF F21 = exp_nilpotent(twist_exponent(2, 1, 0));
    return r_matrix(2, 0, 1, lam(0) - lam(1)) - F21 * F.inverse();
}

MatrixRF pqybe_residual(GenId a, ParamId lambda)
{
    const auto legs = two_legs();
    const HopfPresentation& yc = factor_presentation();
    const TensorPoly& d = yc.coproduct(a);
    const Scalar shifted = lam(0) + Scalar::param(lambda);
    auto shift = [&](const MatrixRF& m) {
        return m.map_entries([&](const Scalar& s) { return substitute(s, param::lambda1, shifted); });
    };
    const MatrixRF lhs = shift(eval(legs, flip(d)));
    const MatrixRF R = r_matrix(2, 0, 1, shifted - lam(1));
    const MatrixRF rhs = R * shift(eval(legs, d)) * R.inverse();
    return lhs - rhs;
}

MatrixRF r_exponent()
{
    return (Scalar(1) / (lam(0) - lam(1))) *
           (on_legs(2, 0, c4_image("f"), 1, c4_image("e")) + on_legs(2, 0, c4_image("e"), 1, c4_image("f")));
}

} // namespace yangian
