#include "yangian/limit.hpp"

#include <algorithm>
#include <set>

#include "yangian/errors.hpp"

namespace yangian {

void LinearForm::add_bracket(GenId a, GenId b, const Scalar& c, const GenOrder& ord)
{
    if (a == b || c.is_zero())
        return;
    const bool swapped = ord.less(a, b);
    const CommTable::Key key = swapped ? CommTable::Key{b, a} : CommTable::Key{a, b};
    auto [it, inserted] = brackets.try_emplace(key, swapped ? -c : c);
    if (inserted)
        return;
    it->second += swapped ? -c : c;
    if (it->second.is_zero())
        brackets.erase(it);
}

LinearForm& LinearForm::operator+=(const LinearForm& o)
{
    for (const auto& [key, c] : o.brackets)
        add_bracket(key.first, key.second, c);
    words += o.words;
    return *this;
}

LinearForm operator*(const Scalar& c, const LinearForm& x)
{
    LinearForm out;
    for (const auto& [key, v] : x.brackets)
        out.add_bracket(key.first, key.second, c * v);
    out.words = c * x.words;
    return out;
}

LinearForm to_linear_form(const Relation& r)
{
    LinearForm out;
    for (const auto& b : r.lhs)
        out.add_bracket(b.a, b.b, b.coeff);
    out.words = r.rhs;
    return out;
}

std::string to_string(const LinearForm& x)
{
    std::string out;
    for (const auto& [key, c] : x.brackets) {
        const std::string br = "[" + to_string(key.first) + ", " + to_string(key.second) + "]";
        if (!out.empty())
            out += " + ";
        out += c.is_one() ? br : "(" + c.to_string() + ")*" + br;
    }
    if (out.empty())
        out = "0";
    return out + " = " + to_string(x.words);
}

bool proportional(const LinearForm& a, const LinearForm& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    Scalar ratio;
    if (!a.brackets.empty()) {
        const auto& [key, c] = *a.brackets.begin();
        auto it = b.brackets.find(key);
        if (it == b.brackets.end())
            return false;
        ratio = it->second / c;
    } else {
        const auto& [w, c] = *a.words.terms().begin();
        ratio = b.words.coefficient(w) / c;
    }
    return !ratio.is_zero() && ratio * a == b;
}

namespace {

using Key = CommTable::Key;

struct Image {
    GenId gen;
    Scalar coeff;
};

std::vector<Image> images(GenId old)
{
    const Scalar p = Scalar::param(param::p);
    const Scalar t = Scalar::param(param::t);
    switch (old.family) {
    case Family::E:
        return {{old, Scalar(1) / p}};
    case Family::F:
        return {{old, Scalar(1) / t}};
    case Family::H:
        return {{old, Scalar(1) / (Scalar(2) * p)},
                {gen_hp(old.mode), Scalar(1) / (Scalar(2) * t)}};
    case Family::Hp:
        break;
    }
    throw AlgebraError("h' is not a generator of Y(sl2)");
}

GenId primary(GenId old, LimitDirection dir)
{
    if (old.family == Family::H && dir == LimitDirection::PToZero)
        return gen_hp(old.mode);
    return old;
}

Scalar with_hbar(const Scalar& c)
{
    return substitute(c, param::hbar, Scalar::param(param::p) * Scalar::param(param::t));
}

LinearForm transform(const Relation& r)
{
    LinearForm out;
    for (const auto& b : r.lhs) {
        const Scalar c = with_hbar(b.coeff);
        for (const auto& ia : images(b.a)) {
            for (const auto& ib : images(b.b))
                out.add_bracket(ia.gen, ib.gen, c * ia.coeff * ib.coeff);
        }
    }
    for (const auto& [w, d] : r.rhs.terms()) {
        NCPoly prod(with_hbar(d));
        for (GenId g : w) {
            NCPoly img;
            for (const auto& i : images(g))
                img += i.coeff * NCPoly(i.gen);
            prod = prod * img;
        }
        out.words += prod;
    }
    return out;
}

// Exact Laurent split of a coefficient that is a Laurent polynomial in var.
std::map<int, Scalar> split(const Scalar& c, ParamId var)
{
    constexpr int kMaxOrder = 6;
    auto parts = laurent_at_zero(c, var, kMaxOrder);
    Scalar check;
    const Scalar x = Scalar::param(var);
    for (const auto& [k, v] : parts)
        check += v * x.pow(k);
    if (check != c)
        throw AlgebraError("coefficient " + c.to_string() + " is not a Laurent polynomial in " +
                           std::string(param_name(var)));
    return parts;
}

std::map<int, LinearForm> split(const LinearForm& x, ParamId var)
{
    std::map<int, LinearForm> out;
    for (const auto& [key, c] : x.brackets) {
        for (const auto& [k, v] : split(c, var))
            out[k].add_bracket(key.first, key.second, v);
    }
    for (const auto& [w, c] : x.words.terms()) {
        for (const auto& [k, v] : split(c, var))
            out[k].words.add_term(w, v);
    }
    return out;
}

// Brackets forced to zero by a homogeneous linear system, and those that
// occur in the system without being forced.
std::pair<std::set<Key>, std::set<Key>> solve_homogeneous(std::vector<std::map<Key, Scalar>> rows)
{
    std::set<Key> columns;
    for (const auto& r : rows) {
        for (const auto& [k, c] : r)
            columns.insert(k);
    }
    std::size_t next = 0;
    for (const Key& col : columns) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].count(col))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[next], rows[pivot]);
        const Scalar inv = Scalar(1) / rows[next].at(col);
        for (auto& [k, c] : rows[next])
            c *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next)
                continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end())
                continue;
            const Scalar f = it->second;
            for (const auto& [k, c] : rows[next]) {
                Scalar& slot = rows[i][k];
                slot -= f * c;
                if (slot.is_zero())
                    rows[i].erase(k);
            }
        }
        ++next;
    }
    std::set<Key> forced;
    for (const auto& r : rows) {
        if (r.size() == 1)
            forced.insert(r.begin()->first);
    }
    std::set<Key> loose;
    for (const Key& k : columns) {
        if (!forced.count(k))
            loose.insert(k);
    }
    return {forced, loose};
}

LinearForm drop(const LinearForm& x, const std::set<Key>& keys)
{
    LinearForm out = x;
    for (const Key& k : keys)
        out.brackets.erase(k);
    return out;
}

std::pair<int, GenId> exchange_gen(GenId g)
{
    switch (g.family) {
    case Family::E:
        return {1, gen_f(g.mode)};
    case Family::F:
        return {-1, gen_e(g.mode)};
    case Family::H:
        return {-1, gen_hp(g.mode)};
    case Family::Hp:
        return {1, gen_h(g.mode)};
    }
    return {1, g};
}

Scalar exchange_scalar(const Scalar& c)
{
    const Scalar p = Scalar::param(param::p);
    const Scalar t = Scalar::param(param::t);
    return substitute(c, {{param::p, t}, {param::t, -p}});
}

Key canonical(GenId a, GenId b)
{
    return GenOrder().less(a, b) ? Key{b, a} : Key{a, b};
}

std::set<Key> centrality_keys(int bound)
{
    std::set<Key> out;
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; a + b <= bound; ++b) {
            out.insert(canonical(gen_hp(a), gen_e(b)));
            out.insert(canonical(gen_hp(a), gen_f(b)));
            out.insert(canonical(gen_h(a), gen_hp(b)));
            if (a != b)
                out.insert(canonical(gen_hp(a), gen_hp(b)));
        }
    }
    return out;
}

Key exchange_key(const Key& k)
{
    return canonical(exchange_gen(k.first).second, exchange_gen(k.second).second);
}

// Coefficient of [a, b] as written, read off a form keyed canonically.
Scalar coefficient_of(const LinearForm& x, GenId a, GenId b)
{
    auto it = x.brackets.find(canonical(a, b));
    if (it == x.brackets.end())
        return Scalar(0);
    return GenOrder().less(a, b) ? -it->second : it->second;
}

} // namespace

LinearForm exchange(const LinearForm& x)
{
    LinearForm out;
    for (const auto& [key, c] : x.brackets) {
        const auto [sa, a] = exchange_gen(key.first);
        const auto [sb, b] = exchange_gen(key.second);
        out.add_bracket(a, b, Scalar(sa * sb) * exchange_scalar(c));
    }
    for (const auto& [w, c] : x.words.terms()) {
        Word mapped;
        int sign = 1;
        for (GenId g : w) {
            const auto [s, m] = exchange_gen(g);
            sign *= s;
            mapped.push_back(m);
        }
        out.words.add_term(mapped, Scalar(sign) * exchange_scalar(c));
    }
    return out;
}

bool LimitReport::finite_parts_match() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const LimitEntry& e) { return e.formal_match && e.table_match; });
}

bool LimitReport::resolved_is_centrality() const
{
    std::set<Key> expected = centrality_keys(grade_bound);
    if (direction == LimitDirection::PToZero) {
        std::set<Key> mapped;
        for (const Key& k : expected)
            mapped.insert(exchange_key(k));
        expected = mapped;
    }
    return std::set<Key>(resolved.begin(), resolved.end()) == expected;
}

bool LimitReport::passed() const
{
    return obstructions.empty() && unresolved.empty() && finite_parts_match() &&
           resolved_is_centrality() && rescalings_uniform;
}

LimitReport parametrize_and_limit(int bound, LimitDirection dir)
{
    if (bound < 1)
        throw CapacityError("the restricted limit needs a grade bound of at least 1");
    const ParamId var = dir == LimitDirection::TToZero ? param::t : param::p;
    LimitReport report;
    report.direction = dir;
    report.grade_bound = bound;

    std::vector<std::map<Key, Scalar>> constraints;
    for (const Relation& r : defining_relations(RelationSet::YSl2, bound)) {
        LimitEntry e;
        e.source = r.label();
        e.source_text = to_string(r);

        const LinearForm transformed = transform(r);
        // The leading bracket is the first one that is not trivially zero; the
        // rescaling restores its coefficient in the source relation.
        auto first = std::find_if(r.lhs.begin(), r.lhs.end(),
                                  [](const BracketTerm& b) { return b.a != b.b; });
        const Scalar before = coefficient_of(to_linear_form(r), first->a, first->b);
        const Scalar after =
            coefficient_of(transformed, primary(first->a, dir), primary(first->b, dir));
        if (after.is_zero())
            throw AlgebraError("relation " + e.source + " loses its leading bracket");
        e.multiplier = before / after;
        e.parts = split(e.multiplier * transformed, var);

        for (const auto& [order, part] : e.parts) {
            if (order < 0) {
                e.pole_order = std::max(e.pole_order, -order);
                if (!part.words.is_zero())
                    report.obstructions.push_back(e.source + " at order " + std::to_string(order) +
                                                  ": " + to_string(part));
                else
                    constraints.push_back(part.brackets);
            } else if (order > 0 && e.vanishing_order == 0) {
                e.vanishing_order = order;
            }
        }
        if (e.pole_order > 0)
            e.divergent_leading = to_string(e.parts.at(-e.pole_order));

        auto [kind_it, fresh] = report.rescalings.try_emplace(r.kind, e.multiplier);
        if (!fresh && kind_it->second != e.multiplier)
            report.rescalings_uniform = false;
        report.entries.push_back(std::move(e));
    }

    // h' is a second commuting copy of the Cartan modes.
    for (int k = 0; k <= bound; ++k) {
        for (int l = 0; k + l <= bound; ++l) {
            LinearForm axiom;
            axiom.add_bracket(gen_h(k), gen_hp(l), Scalar(1));
            constraints.push_back(axiom.brackets);
        }
    }
    const auto [forced, loose] = solve_homogeneous(constraints);
    report.resolved.assign(forced.begin(), forced.end());
    report.unresolved.assign(loose.begin(), loose.end());

    std::map<std::string, Relation> targets;
    if (dir == LimitDirection::TToZero) {
        for (Relation& r : defining_relations(RelationSet::Boundary, bound))
            targets.emplace(r.label(), std::move(r));
    }
    const HopfPresentation boundary = build_boundary(bound);
    const Normalizer norm(boundary.table);

    for (LimitEntry& e : report.entries) {
        auto zero = e.parts.find(0);
        e.finite = zero == e.parts.end() ? LinearForm() : drop(zero->second, forced);
        if (dir != LimitDirection::TToZero)
            continue;
        auto t = targets.find(e.source);
        if (t == targets.end()) {
            e.formal_match = false;
            e.residual = "no boundary relation with this label";
            continue;
        }
        e.target_text = to_string(t->second);
        const LinearForm expected = to_linear_form(t->second);
        e.formal_match = e.finite == expected;

        NCPoly res = -norm.normal_order(e.finite.words);
        for (const auto& [key, c] : e.finite.brackets)
            res += c * boundary.table.bracket(key.first, key.second);
        e.table_match = res.is_zero();
        if (!e.formal_match)
            e.residual = "finite part " + to_string(e.finite) + " differs from " + e.target_text;
        else if (!e.table_match)
            e.residual = "table residual " + to_string(res);
    }
    return report;
}

Outcome compare_dual_limits(const LimitReport& t_limit, const LimitReport& p_limit)
{
    std::vector<LinearForm> from_t, from_p;
    for (const auto& e : t_limit.entries) {
        if (!e.finite.is_zero())
            from_t.push_back(exchange(e.finite));
    }
    for (const auto& e : p_limit.entries) {
        if (!e.finite.is_zero())
            from_p.push_back(e.finite);
    }
    Tally tally;
    auto covered = [](const LinearForm& x, const std::vector<LinearForm>& pool) {
        return std::any_of(pool.begin(), pool.end(),
                           [&](const LinearForm& y) { return proportional(x, y); });
    };
    for (const auto& x : from_t)
        tally.add(covered(x, from_p), "exchanged t-limit relation", to_string(x));
    for (const auto& y : from_p)
        tally.add(covered(y, from_t), "p-limit relation", to_string(y));

    std::set<Key> mapped;
    for (const Key& k : t_limit.resolved)
        mapped.insert(exchange_key(k));
    tally.add(mapped == std::set<Key>(p_limit.resolved.begin(), p_limit.resolved.end()),
              "resolved brackets", "exchange image differs from the p-limit constraints");
    tally.add(p_limit.obstructions.empty() && p_limit.unresolved.empty(), "p-limit divergences",
              p_limit.obstructions.empty() ? "unresolved brackets" : p_limit.obstructions.front());
    return tally.outcome("finite relations");
}

} // namespace yangian
