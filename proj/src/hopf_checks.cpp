#include "yangian/hopf_checks.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

namespace {

class CoproductCache {
public:
    CoproductCache(const HopfPresentation& pres, const Normalizer& norm)
        : pres_(pres), norm_(norm)
    {
    }

    const TensorPoly& word(const Word& w)
    {
        auto it = cache_.find(w);
        if (it != cache_.end())
            return it->second;
        TensorPoly value = TensorPoly::identity(2);
        if (!w.empty()) {
            const Word head(w.begin(), w.end() - 1);
            value = norm_.multiply(word(head), pres_.coproduct(w.back()));
        }
        return cache_.emplace(w, std::move(value)).first->second;
    }

    TensorPoly of(const NCPoly& x)
    {
        TensorPoly out(2);
        for (const auto& [w, c] : x.terms())
            out += c * word(w);
        return out;
    }

    // (Δ ⊗ id) when leg == 0, (id ⊗ Δ) when leg == 1.
    TensorPoly on_leg(const TensorPoly& x, int leg)
    {
        TensorPoly out(3);
        for (const auto& [k, c] : x.terms()) {
            for (const auto& [inner, ci] : word(k[std::size_t(leg)]).terms()) {
                TensorPoly::Key key = leg == 0 ? TensorPoly::Key{inner[0], inner[1], k[1]}
                                               : TensorPoly::Key{k[0], inner[0], inner[1]};
                out.add_term(key, c * ci);
            }
        }
        return out;
    }

private:
    const HopfPresentation& pres_;
    const Normalizer& norm_;
    std::map<Word, TensorPoly> cache_;
};

bool has_family(const Word& w, const std::vector<Family>& families)
{
    return std::any_of(w.begin(), w.end(), [&](GenId g) {
        return std::find(families.begin(), families.end(), g.family) != families.end();
    });
}

std::string bracket_label(GenId a, GenId b)
{
    return "[" + to_string(a) + ", " + to_string(b) + "]";
}

} // namespace

NCPoly drop_families(const NCPoly& x, const std::vector<Family>& families)
{
    NCPoly out;
    for (const auto& [w, c] : x.terms()) {
        if (!has_family(w, families))
            out.add_term(w, c);
    }
    return out;
}

TensorPoly drop_families(const TensorPoly& x, const std::vector<Family>& families)
{
    TensorPoly out(x.degree());
    for (const auto& [k, c] : x.terms()) {
        if (std::none_of(k.begin(), k.end(), [&](const Word& w) { return has_family(w, families); }))
            out.add_term(k, c);
    }
    return out;
}

std::vector<CheckRecord> verify_hopf(const HopfPresentation& pres, int max_mode)
{
    return verify_hopf(pres, HopfBounds{max_mode, max_mode, max_mode});
}

std::vector<CheckRecord> verify_hopf(const HopfPresentation& pres, const HopfBounds& bounds)
{
    const CommTable& table = pres.table;
    const Normalizer norm(table);
    CoproductCache delta(pres, norm);
    const std::string prefix = pres.name + ".";
    std::vector<CheckRecord> out;

    out.push_back(run_check(prefix + "table_complete", [&] {
        Outcome o;
        if (auto miss = table.first_missing()) {
            o.passed = false;
            o.residual = "missing " + bracket_label(miss->first, miss->second);
        }
        o.detail = std::to_string(table.entries().size()) + " entries";
        return o;
    }));

    out.push_back(run_check(prefix + "jacobi", [&] {
        if (bounds.jacobi > table.capacity())
            throw CapacityError("Jacobi bound exceeds the table capacity");
        const auto gens = table.generators(bounds.jacobi);
        Tally tally;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                for (std::size_t k = j + 1; k < gens.size(); ++k) {
                    const GenId a = gens[i], b = gens[j], c = gens[k];
                    if (a.mode + b.mode + c.mode > bounds.jacobi)
                        continue;
                    const NCPoly res = norm.commutator(a, table.bracket(b, c)) +
                                       norm.commutator(b, table.bracket(c, a)) +
                                       norm.commutator(c, table.bracket(a, b));
                    tally.add(res.is_zero(),
                              "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ")",
                              to_string(res));
                }
            }
        }
        return tally.outcome("triples");
    }));

    std::vector<Relation> relations;
    for (auto& r : pres.relations(table.capacity())) {
        if (r.max_mode() <= bounds.relation)
            relations.push_back(std::move(r));
    }

    out.push_back(run_check(prefix + "relations", [&] {
        Tally tally;
        for (const auto& r : relations) {
            const NCPoly res = relation_residual(r, norm);
            tally.add(res.is_zero(), r.label(), to_string(res));
        }
        return tally.outcome("relations");
    }));

    out.push_back(run_check(prefix + "homomorphy", [&] {
        Tally tally;
        for (const auto& r : relations) {
            TensorPoly res = -delta.of(r.rhs);
            for (const auto& b : r.lhs) {
                if (b.a != b.b)
                    res += b.coeff * norm.commutator(pres.coproduct(b.a), pres.coproduct(b.b));
            }
            tally.add(res.is_zero(), r.label(), to_string(res));
        }
        for (const auto& [key, value] : table.entries()) {
            if (key.first.mode > bounds.relation || key.second.mode > bounds.relation)
                continue;
            const TensorPoly res =
                norm.commutator(pres.coproduct(key.first), pres.coproduct(key.second)) -
                delta.of(value);
            tally.add(res.is_zero(), bracket_label(key.first, key.second), to_string(res));
        }
        return tally.outcome("relations and table entries");
    }));

    const auto gens = table.generators(bounds.coproduct);
    out.push_back(run_check(prefix + "coassociativity", [&] {
        Tally tally;
        for (GenId g : gens) {
            const TensorPoly& d = pres.coproduct(g);
            const TensorPoly res = delta.on_leg(d, 0) - delta.on_leg(d, 1);
            tally.add(res.is_zero(), to_string(g), to_string(res));
        }
        return tally.outcome("generators");
    }));

    out.push_back(run_check(prefix + "counit", [&] {
        Tally tally;
        for (GenId g : gens) {
            if (!pres.counit(g).is_zero()) {
                tally.add(false, to_string(g), "counit " + pres.counit(g).to_string());
                continue;
            }
            NCPoly left, right;
            for (const auto& [k, c] : pres.coproduct(g).terms()) {
                if (k[0].empty())
                    left.add_term(k[1], c);
                if (k[1].empty())
                    right.add_term(k[0], c);
            }
            const NCPoly x(g);
            tally.add(left == x && right == x, to_string(g),
                      "(eps x id) = " + to_string(left) + ", (id x eps) = " + to_string(right));
        }
        return tally.outcome("generators");
    }));

    return out;
}

bool verify_hopf_ideal(const HopfPresentation& pres, const std::vector<Family>& ideal,
                       std::string* witness)
{
    const CommTable& table = pres.table;
    auto fail = [&](const std::string& what) {
        if (witness)
            *witness = what;
        return false;
    };
    const auto all = table.generators(table.capacity());
    for (GenId j : all) {
        if (std::find(ideal.begin(), ideal.end(), j.family) == ideal.end())
            continue;
        if (!pres.counit(j).is_zero())
            return fail("counit of " + to_string(j));
        for (GenId x : all) {
            if (x == j || !table.in_range(x, j))
                continue;
            const NCPoly rest = drop_families(table.bracket(x, j), ideal);
            if (!rest.is_zero())
                return fail(bracket_label(x, j) + " leaves " + to_string(rest));
        }
        auto it = pres.coproducts.find(j);
        if (it == pres.coproducts.end())
            continue;
        const TensorPoly rest = drop_families(it->second, ideal);
        if (!rest.is_zero())
            return fail("Delta(" + to_string(j) + ") leaves " + to_string(rest));
    }
    return true;
}

Outcome cocommutator_divisible(const HopfPresentation& pres, ParamId var, int max_mode)
{
    Tally tally;
    for (GenId g : pres.table.generators(max_mode)) {
        const TensorPoly& d = pres.coproduct(g);
        const TensorPoly diff = d - flip(d);
        bool ok = true;
        for (const auto& [k, c] : diff.terms())
            ok = ok && order_at_zero(c, var) >= 1;
        tally.add(ok, to_string(g), to_string(diff));
    }
    return tally.outcome("generators");
}

HopfPresentation quotient_by_hp(const HopfPresentation& boundary)
{
    const std::vector<Family> ideal{Family::Hp};
    std::string witness;
    if (!verify_hopf_ideal(boundary, ideal, &witness))
        throw AlgebraError("h' generators do not span a Hopf ideal: " + witness);

    const int capacity = boundary.table.capacity();
    HopfPresentation q{"factor", CommTable({Family::E, Family::F, Family::H}, capacity), {},
                       boundary.parameters, RelationSet::Factor};
    for (const auto& [key, value] : boundary.table.entries()) {
        if (key.first.family == Family::Hp || key.second.family == Family::Hp)
            continue;
        q.table.set(key.first, key.second, drop_families(value, ideal));
    }
    for (const auto& [g, d] : boundary.coproducts) {
        if (g.family != Family::Hp)
            q.coproducts[g] = drop_families(d, ideal);
    }

    const HopfPresentation closed = build_factor_closed_form(capacity);
    for (const auto& [key, value] : closed.table.entries()) {
        const NCPoly got = q.table.bracket(key.first, key.second);
        if (got != value)
            throw AlgebraError("quotient entry " + bracket_label(key.first, key.second) + " = " +
                               to_string(got) + ", expected " + to_string(value));
    }
    for (const auto& [g, d] : closed.coproducts) {
        if (q.coproduct(g) != d)
            throw AlgebraError("quotient Delta(" + to_string(g) + ") = " +
                               to_string(q.coproduct(g)) + ", expected " + to_string(d));
    }
    return q;
}

} // namespace yangian
