#include "yangian/suites.hpp"

#include <algorithm>
#include <optional>

#include "yangian/cybe.hpp"
#include "yangian/errors.hpp"
#include "yangian/evalrep.hpp"
#include "yangian/gf.hpp"
#include "yangian/hopf_checks.hpp"
#include "yangian/limit.hpp"

namespace yangian {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"hopf",  "limit", "cybe",  "colie",  "factor", "twist",
                                                "ybe",   "pqybe", "series", "gfmodes", "all"};
    return names;
}

int capacity_for(int max_mode)
{
    return std::max(kDefaultCapacity, max_mode + 3);
}

namespace {

Outcome from_bool(bool ok, std::string detail, std::string residual = {})
{
    Outcome o;
    o.passed = ok;
    o.detail = std::move(detail);
    if (!ok)
        o.residual = std::move(residual);
    return o;
}

Outcome zero_matrix(const MatrixRF& m, const std::string& detail)
{
    return from_bool(m.is_zero(), detail, m.sparse_string());
}

void append(std::vector<CheckRecord>& out, std::vector<CheckRecord> more)
{
    for (auto& r : more)
        out.push_back(std::move(r));
}

HopfPresentation y_sl2_for(const SuiteConfig& c)
{
    HopfPresentation y = build_y_sl2(capacity_for(c.max_mode));
    if (c.broken_table)
        y.table.set(gen_e(1), gen_e(0), NCPoly());
    return y;
}

void hopf_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    const int m = c.max_mode;
    const HopfPresentation y = y_sl2_for(c);
    append(out, verify_hopf(y, HopfBounds{m + 1, m, m}));
    out.push_back(run_check("y_sl2.h_coproduct_two_ways", [&] {
        Tally tally;
        for (int k = 1; k <= m; ++k) {
            const TensorPoly res = y.coproduct(gen_h(k)) - y_sl2_h_coproduct_via_f(y, k);
            tally.add(res.is_zero(), to_string(gen_h(k)), to_string(res));
        }
        return tally.outcome("modes");
    }));
    out.push_back(run_check("y_sl2.evaluation", [&] {
        return check_eval_relations(EvalRep{fundamental_sl2(), param::lambda}, RelationSet::YSl2, m);
    }));

    const HopfPresentation b = build_boundary(capacity_for(m));
    append(out, verify_hopf(b, m));
    out.push_back(run_check("boundary.cocommutator_divisible_by_p",
                            [&] { return cocommutator_divisible(b, param::p, m); }));
}

void limit_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    const int m = c.max_mode;
    LimitReport t_rep, p_rep;
    out.push_back(run_check("limit.classification", [&] {
        t_rep = parametrize_and_limit(m, LimitDirection::TToZero);
        int finite = 0, divergent = 0, vanishing = 0;
        for (const auto& e : t_rep.entries) {
            finite += e.finite.is_zero() ? 0 : 1;
            divergent += e.pole_order > 0 ? 1 : 0;
            vanishing += e.vanishing_order > 0 ? 1 : 0;
        }
        std::string residual;
        for (const auto& o : t_rep.obstructions)
            residual += (residual.empty() ? "" : "; ") + o;
        for (const auto& k : t_rep.unresolved)
            residual += (residual.empty() ? "" : "; ") + ("unresolved [" + to_string(k.first) + ", " +
                                                          to_string(k.second) + "]");
        return from_bool(t_rep.obstructions.empty() && t_rep.unresolved.empty(),
                         std::to_string(t_rep.entries.size()) + " relations: " + std::to_string(finite) +
                             " with finite part, " + std::to_string(divergent) + " with divergent part, " +
                             std::to_string(vanishing) + " with vanishing part",
                         residual);
    }));
    out.push_back(run_check("limit.finite_parts", [&] {
        Tally tally;
        for (const auto& e : t_rep.entries)
            tally.add(e.formal_match && e.table_match, e.source, e.residual);
        return tally.outcome("relations");
    }));
    out.push_back(run_check("limit.resolved_constraints", [&] {
        return from_bool(t_rep.resolved_is_centrality(),
                         std::to_string(t_rep.resolved.size()) + " brackets [hp_k, x_l] forced to zero",
                         "resolved set differs from the hp-centrality constraints");
    }));
    out.push_back(run_check("limit.rescalings", [&] {
        std::string detail;
        for (const auto& [kind, s] : t_rep.rescalings)
            detail += (detail.empty() ? "" : ", ") + kind + " " + s.to_string();
        return from_bool(t_rep.rescalings_uniform, detail, "rescaling differs within a relation family");
    }));
    out.push_back(run_check("limit.exchange_dual", [&] {
        p_rep = parametrize_and_limit(m, LimitDirection::PToZero);
        return compare_dual_limits(t_rep, p_rep);
    }));
}

void cybe_suite(std::vector<CheckRecord>& out)
{
    out.push_back(run_check("cybe.builtins", [] {
        std::string names;
        for (const char* n : {"sl2", "double", "a", "c", "borel2"}) {
            builtin(n);
            names += (names.empty() ? "" : ", ") + std::string(n);
        }
        return from_bool(true, "antisymmetry, Jacobi and form invariance hold for " + names);
    }));
    out.push_back(run_check("cybe.boundary_r", [] {
        const LieAlg a = builtin("a");
        const SpectralTensor res = cybe_residual(rational_r(a), a);
        return from_bool(res.is_zero(), "r(u,v) = casimir(a)/(u - v) over a", to_string(res, a));
    }));
    out.push_back(run_check("cybe.casimir_sl2", [] {
        const LieAlg g = builtin("sl2");
        const SpectralTensor res = cybe_residual(rational_r(g), g);
        return from_bool(res.is_zero(), "casimir(sl2)/(u - v)", to_string(res, g));
    }));
    out.push_back(run_check("cybe.ad_invariance", [] {
        const LieAlg a = builtin("a");
        const auto res = ad_invariance_residual(casimir(a), a);
        Tally tally;
        for (int x = 0; x < a.dim(); ++x)
            tally.add(res[std::size_t(x)].is_zero(), a.basis()[std::size_t(x)],
                      to_string(res[std::size_t(x)], a));
        return tally.outcome("basis elements");
    }));
    out.push_back(run_check("cybe.cobracket_antisymmetry", [] {
        const LieAlg a = builtin("a");
        const SpectralTensor r = rational_r(a);
        Tally tally;
        for (int x = 0; x < a.dim(); ++x) {
            for (int mode = 0; mode <= 2; ++mode) {
                const SpectralTensor d = cobracket(r, a, x, mode);
                SpectralTensor sum = d;
                sum += flip(d);
                tally.add(sum.is_zero(), a.basis()[std::size_t(x)] + "_" + std::to_string(mode),
                          to_string(sum, a));
            }
        }
        return tally.outcome("modes");
    }));
    out.push_back(run_check("cybe.divergence", [] {
        const DivergenceReport d = parametrized_r_divergence();
        const LieAlg dbl = builtin("double");
        const int hp = dbl.index("hp");
        const bool divergent_ok = d.divergent.terms.size() == 1 &&
                                  d.divergent.terms.begin()->first == SpectralTensor::Key{hp, hp};
        const bool ok = divergent_ok && d.pole_order == 1 && d.vanishing.terms.size() == 1 &&
                        d.vanishing_order == 1 && d.finite_matches;
        return from_bool(ok,
                         "divergent " + to_string(d.divergent, dbl) + "; vanishing " +
                             to_string(d.vanishing, dbl) + "; finite part equals the boundary r-matrix",
                         d.residual.empty() ? "unexpected term structure" : d.residual);
    }));
    out.push_back(run_check("cybe.factor_projection", [] {
        const LieAlg a = builtin("a");
        const MatrixRF res = eval(rep_c4(), project_factor_r(rational_r(a), a), a) - r_exponent();
        return zero_matrix(res, "projected r equals the exponent of R in rep_c4 x rep_c4");
    }));
}

void colie_suite(std::vector<CheckRecord>& out)
{
    out.push_back(run_check("colie.boundary", [] {
        const LieAlg a = builtin("a");
        return compare_colie(build_boundary(kDefaultCapacity), rational_r(a), a).outcome;
    }));
}

void factor_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    const int m = c.max_mode;
    const HopfPresentation b = build_boundary(capacity_for(m));
    out.push_back(run_check("factor.hopf_ideal", [&] {
        std::string witness;
        const bool ok = verify_hopf_ideal(b, {Family::Hp}, &witness);
        return from_bool(ok, "hp generators span a Hopf ideal", witness);
    }));
    std::optional<HopfPresentation> q;
    out.push_back(run_check("factor.closed_form", [&] {
        q = quotient_by_hp(b);
        return from_bool(true, "quotient table and coproducts equal the closed form up to mode " +
                                   std::to_string(b.table.capacity()));
    }));
    if (!q)
        return;
    out.push_back(run_check("factor.delta_h1", [&] {
        const Scalar p = Scalar::param(param::p);
        const TensorPoly expected =
            primitive(gen_h(1)) - (Scalar(4) * p) * TensorPoly::product({NCPoly(gen_f(0)), NCPoly(gen_e(0))});
        const TensorPoly res = q->coproduct(gen_h(1)) - expected;
        return from_bool(res.is_zero(), "Delta(h_1) = " + to_string(q->coproduct(gen_h(1))), to_string(res));
    }));
    append(out, verify_hopf(*q, m));
    out.push_back(run_check("factor.evaluation", [&] {
        return check_eval_relations(EvalRep{rep_c4(), param::lambda}, RelationSet::Factor, m);
    }));
}

void twist_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    append(out, twist_check(std::min(c.max_mode, 2)));
    out.push_back(run_check("twist.r_from_f_flip",
                            [] { return zero_matrix(r_from_twist_residual_flip(), "R = (F21 F)^-1, F21 = P F P"); }));
    out.push_back(run_check("twist.r_from_f_spectral", [] {
        return zero_matrix(r_from_twist_residual_spectral(), "R = F21 F^-1, F21 with exchanged spectral parameters");
    }));
}

void ybe_suite(std::vector<CheckRecord>& out)
{
    out.push_back(run_check("ybe.residual", [] { return zero_matrix(ybe_residual(), "64x64 in lambda1, lambda2, lambda3"); }));
    out.push_back(run_check("ybe.unitarity", [] { return zero_matrix(unitarity_residual(), "R12(x) R21(-x) = 1"); }));
}

void pqybe_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    const int bound = std::min(c.max_mode, 2);
    for (Family f : {Family::E, Family::F, Family::H}) {
        for (int k = 0; k <= bound; ++k) {
            const GenId g{f, std::uint8_t(k)};
            out.push_back(run_check("pqybe." + to_string(g), [&] {
                return zero_matrix(pqybe_residual(g), "shift on leg one by lambda");
            }));
        }
    }
}

void series_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    const HopfPresentation y = y_sl2_for(c);
    append(out, check_series_coproduct(y, std::min(c.max_mode, 3)));
}

void gfmodes_suite(const SuiteConfig& c, std::vector<CheckRecord>& out)
{
    const int m = c.max_mode;
    const HopfPresentation y = y_sl2_for(c);
    const Normalizer ny(y.table);
    for (const auto& id : y_sl2_gf_identities())
        out.push_back(run_check("gfmodes.y_sl2 " + id.name, [&] { return check_gf_identity(id, ny, m); }));
    const HopfPresentation b = build_boundary(capacity_for(m));
    const Normalizer nb(b.table);
    for (const auto& id : boundary_gf_identities())
        out.push_back(run_check("gfmodes.boundary " + id.name, [&] { return check_gf_identity(id, nb, m); }));
    out.push_back(run_check("gfmodes.boundary_coproducts", [&] { return check_boundary_gf_coproducts(b, m); }));
}

} // namespace

std::vector<CheckRecord> run_suite(const SuiteConfig& config)
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end())
        throw AlgebraError("unknown suite '" + config.suite + "'");
    if (config.max_mode < 1)
        throw AlgebraError("max mode must be at least 1");

    std::vector<CheckRecord> out;
    auto want = [&](const char* s) { return config.suite == "all" || config.suite == s; };
    if (want("hopf"))
        hopf_suite(config, out);
    if (want("limit"))
        limit_suite(config, out);
    if (want("cybe"))
        cybe_suite(out);
    if (want("colie"))
        colie_suite(out);
    if (want("factor"))
        factor_suite(config, out);
    if (want("twist"))
        twist_suite(config, out);
    if (want("ybe"))
        ybe_suite(out);
    if (want("pqybe"))
        pqybe_suite(config, out);
    if (want("series"))
        series_suite(config, out);
    if (want("gfmodes"))
        gfmodes_suite(config, out);
    return out;
}

} // namespace yangian
