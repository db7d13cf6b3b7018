// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "yangian/cybe.hpp"
#include "yangian/errors.hpp"
#include "yangian/evalrep.hpp"
#include "yangian/gf.hpp"
#include "yangian/hopf_checks.hpp"
#include "yangian/limit.hpp"
#include "yangian/suites.hpp"

using namespace yangian;

namespace {

struct Verdict {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            note += (note.empty() ? "" : "; ") + what;
        }
    }
};

void require_records(Verdict& v, const std::vector<CheckRecord>& records)
{
    for (const auto& r : records)
        v.require(r.status == CheckStatus::Pass, r.name + " " + to_string(r.status) + ": " + r.residual);
}

const HopfPresentation& y()
{
    static const HopfPresentation pres = build_y_sl2(6);
    return pres;
}

const HopfPresentation& boundary()
{
    static const HopfPresentation pres = build_boundary(6);
    return pres;
}

Verdict hopf_y_sl2()
{
    Verdict v;
    require_records(v, verify_hopf(y(), HopfBounds{4, 2, 2}));
    return v;
}

Verdict series_coproduct()
{
    Verdict v;
    require_records(v, check_series_coproduct(y(), 3));
    return v;
}

Verdict gf_modes()
{
    Verdict v;
    const Normalizer ny(y().table);
    for (const auto& id : y_sl2_gf_identities()) {
        const Outcome o = check_gf_identity(id, ny, 3);
        v.require(o.passed, "Y(sl2) " + id.name + ": " + o.residual);
    }
    const Normalizer nb(boundary().table);
    for (const auto& id : boundary_gf_identities()) {
        const Outcome o = check_gf_identity(id, nb, 3);
        v.require(o.passed, "boundary " + id.name + ": " + o.residual);
    }
    return v;
}

Verdict restricted_limit()
{
    Verdict v;
    const LimitReport r = parametrize_and_limit(3);
    v.require(r.entries.size() == defining_relations(RelationSet::YSl2, 3).size(), "relation count");
    for (const auto& e : r.entries)
        v.require(e.formal_match && e.table_match, e.source + ": " + e.residual);
    v.require(r.obstructions.empty(), "uncancellable divergence");
    v.require(r.unresolved.empty(), "unresolved divergent brackets");
    v.require(r.resolved_is_centrality(), "resolved set is not the hp-centrality list");
    return v;
}

Verdict hopf_boundary()
{
    Verdict v;
    require_records(v, verify_hopf(boundary(), 3));
    const Outcome div = cocommutator_divisible(boundary(), param::p, 6);
    v.require(div.passed, "cocommutator not divisible by p: " + div.residual);
    return v;
}

Verdict cybe()
{
    Verdict v;
    const LieAlg a = builtin("a"), sl2 = builtin("sl2");
    v.require(cybe_residual(rational_r(a), a).is_zero(), "CYBE over a");
    v.require(cybe_residual(rational_r(sl2), sl2).is_zero(), "CYBE over sl2");
    for (const auto& res : ad_invariance_residual(casimir(a), a))
        v.require(res.is_zero(), "ad-invariance: " + to_string(res, a));
    return v;
}

Verdict colie()
{
    Verdict v;
    const LieAlg a = builtin("a");
    const ColieReport rep = compare_colie(boundary(), rational_r(a), a);
    v.require(rep.outcome.passed, rep.outcome.residual);
    v.require(rep.constant.has_value(), "no shared constant");
    int mode_one = 0;
    for (const auto& e : rep.entries) {
        v.require(e.consistent, "mismatch at " + to_string(e.generator));
        mode_one += e.generator.mode == 1 ? 1 : 0;
    }
    v.require(mode_one == 4, "expected four mode-1 generators");
    if (rep.constant)
        v.note += "constant " + rep.constant->to_string();
    return v;
}

Verdict divergence()
{
    Verdict v;
    const DivergenceReport rep = parametrized_r_divergence();
    const LieAlg a = builtin("a");
    const int hp = a.index("hp"), h = a.index("h");
    v.require(rep.pole_order == 1 && rep.divergent.terms.size() == 1 && rep.divergent.terms.contains({hp, hp}),
              "divergent part is not a single t^-1 hp⊗hp term");
    v.require(rep.vanishing_order == 1 && rep.vanishing.terms.size() == 1 && rep.vanishing.terms.contains({h, h}),
              "vanishing part is not a single t^1 h⊗h term");
    v.require(rep.finite_matches && rep.finite == rational_r(a), "finite part: " + rep.residual);
    return v;
}

Verdict factorization()
{
    Verdict v;
    std::string witness;
    v.require(verify_hopf_ideal(boundary(), {Family::Hp}, &witness), "hp is not a Hopf ideal: " + witness);
    const HopfPresentation q = quotient_by_hp(boundary());
    const HopfPresentation closed = build_factor_closed_form(6);
    for (GenId a : q.table.generators(3)) {
        for (GenId b : q.table.generators(3)) {
            if (a != b)
                v.require(q.table.bracket(a, b) == closed.table.bracket(a, b),
                          "[" + to_string(a) + ", " + to_string(b) + "]");
        }
    }
    const TensorPoly dh1 = primitive(gen_h(1)) - Scalar(4) * Scalar::param(param::p) *
                                                     TensorPoly::product({NCPoly(gen_f(0)), NCPoly(gen_e(0))});
    v.require(q.coproduct(gen_h(1)) == dh1, "Delta(h_1) = " + to_string(q.coproduct(gen_h(1))));
    return v;
}

Verdict twist_and_r()
{
    Verdict v;
    require_records(v, twist_check(2));
    v.require(ybe_residual().is_zero(), "YBE residual");
    for (GenId g : {gen_h(1), gen_e(1), gen_f(1)})
        v.require(pqybe_residual(g).is_zero(), "pqybe at " + to_string(g));
    v.require(r_from_twist_residual_flip().is_zero(), "R != (F21 F)^-1");
    return v;
}

Verdict negative_controls()
{
    Verdict v;
    // corrupted commutator table
    int failing = 0;
    for (const auto& r : run_suite({"hopf", 2, true})) {
        if (r.status != CheckStatus::Pass) {
            ++failing;
            v.require(!r.residual.empty(), r.name + " failed without a residual");
        }
    }
    v.require(failing > 0, "broken table passed");

    // tensor that is not ad-invariant
    const LieAlg sl2 = builtin("sl2");
    SpectralTensor hh;
    hh.add({sl2.index("h"), sl2.index("h")}, Scalar(1));
    bool any_nonzero = false;
    for (const auto& res : ad_invariance_residual(hh, sl2))
        any_nonzero = any_nonzero || !res.is_zero();
    v.require(any_nonzero, "h⊗h reported invariant");
    SpectralTensor he;
    he.add({sl2.index("h"), sl2.index("e")},
           Scalar(1) / (Scalar::param(param::u) - Scalar::param(param::v)));
    v.require(!cybe_residual(he, sl2).is_zero(), "(h⊗e)/(u-v) reported as a CYBE solution");

    // exponent that is not nilpotent
    const CheckRecord exp_rec = run_check("exp", [] {
        exp_nilpotent(MatrixRF::diagonal({Scalar(1), Scalar(-1)}));
        return Outcome{true, "", ""};
    });
    v.require(exp_rec.status == CheckStatus::Error, "non-nilpotent exponent accepted");
    v.note = std::to_string(failing) + " broken-table failures";
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"Y(sl2) Hopf suite (Jacobi mode sum <= 4, relations and coproducts mode <= 2)", hopf_y_sl2},
        {"coproduct series reproduce mode coproducts", series_coproduct},
        {"generating-function identities match mode tables for i + j <= 3", gf_modes},
        {"restricted limit t -> 0 reproduces the boundary table", restricted_limit},
        {"boundary Hopf suite at max mode 3, cocommutator divisible by p", hopf_boundary},
        {"CYBE over a and sl2, ad-invariant numerator", cybe},
        {"co-Lie structure matches the cobracket with one constant", colie},
        {"divergence of the parametrized r-matrix", divergence},
        {"hp Hopf ideal, factor table and Delta(h_1)", factorization},
        {"twist, cocycle, YBE, pqybe and R = (F21 F)^-1 in rep_c4", twist_and_r},
        {"negative controls fail loudly", negative_controls},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.ok = false;
            v.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += v.ok ? 0 : 1;
        std::printf("%s  criterion %2zu: %s [%.2fs]%s%s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    secs, v.note.empty() ? "" : "  -- ", v.note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
