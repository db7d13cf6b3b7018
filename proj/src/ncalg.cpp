#include "yangian/ncalg.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

std::string family_name(Family f)
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

std::string to_string(GenId g)
{
    return family_name(g.family) + "_" + std::to_string(int(g.mode));
}

GenOrder::GenOrder() : rank_{3, 0, 2, 1} {}

GenOrder::GenOrder(std::array<int, 4> rank) : rank_(rank)
{
    std::array<int, 4> sorted = rank;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3})
        throw AlgebraError("generator order ranks must be a permutation of 0..3");
}

bool GenOrder::less(GenId a, GenId b) const
{
    const int ra = rank(a.family);
    const int rb = rank(b.family);
    if (ra != rb)
        return ra < rb;
    return a.mode < b.mode;
}

int mode_sum(const Word& w)
{
    int s = 0;
    for (GenId g : w)
        s += g.mode;
    return s;
}

bool is_normal(const Word& w, const GenOrder& ord)
{
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (ord.less(w[i], w[i - 1]))
            return false;
    }
    return true;
}

NCPoly::NCPoly(const Scalar& c)
{
    add_term({}, c);
}

NCPoly::NCPoly(GenId g)
{
    add_term({g}, Scalar(1));
}

NCPoly NCPoly::word(Word w, const Scalar& c)
{
    NCPoly out;
    out.add_term(w, c);
    return out;
}

Scalar NCPoly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

NCPoly NCPoly::operator-() const
{
    NCPoly out = *this;
    for (auto& [w, c] : out.terms_)
        c = -c;
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

NCPoly operator*(const Scalar& c, const NCPoly& a)
{
    if (c.is_zero())
        return {};
    NCPoly out = a;
    for (auto& [w, coeff] : out.terms_)
        coeff *= c;
    return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b)
{
    NCPoly out;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

int NCPoly::max_mode() const
{
    int m = -1;
    for (const auto& [w, c] : terms_) {
        for (GenId g : w)
            m = std::max(m, int(g.mode));
    }
    return m;
}

bool NCPoly::contains_family(Family f) const
{
    for (const auto& [w, c] : terms_) {
        for (GenId g : w) {
            if (g.family == f)
                return true;
        }
    }
    return false;
}

TensorPoly TensorPoly::product(const std::vector<NCPoly>& legs)
{
    TensorPoly out(int(legs.size()));
    out.add_term(Key(legs.size()), Scalar(1));
    for (std::size_t i = 0; i < legs.size(); ++i) {
        TensorPoly next(out.degree_);
        for (const auto& [k, c] : out.terms_) {
            for (const auto& [w, cw] : legs[i].terms()) {
                Key nk = k;
                nk[i] = w;
                next.add_term(nk, c * cw);
            }
        }
        out = std::move(next);
    }
    return out;
}

TensorPoly TensorPoly::identity(int degree)
{
    TensorPoly out(degree);
    out.add_term(Key(std::size_t(degree)), Scalar(1));
    return out;
}

Scalar TensorPoly::coefficient(const Key& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorPoly::add_term(const Key& k, const Scalar& c)
{
    if (int(k.size()) != degree_)
        throw AlgebraError("tensor degree mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

TensorPoly TensorPoly::operator-() const
{
    TensorPoly out = *this;
    for (auto& [k, c] : out.terms_)
        c = -c;
    return out;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o)
{
    if (o.degree_ != degree_)
        throw AlgebraError("tensor degree mismatch");
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o)
{
    if (o.degree_ != degree_)
        throw AlgebraError("tensor degree mismatch");
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

TensorPoly operator*(const Scalar& c, const TensorPoly& a)
{
    TensorPoly out(a.degree_);
    if (c.is_zero())
        return out;
    out = a;
    for (auto& [k, coeff] : out.terms_)
        coeff *= c;
    return out;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b)
{
    if (a.degree_ != b.degree_)
        throw AlgebraError("tensor degree mismatch");
    TensorPoly out(a.degree_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            TensorPoly::Key k = ka;
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i].insert(k[i].end(), kb[i].begin(), kb[i].end());
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

TensorPoly flip(const TensorPoly& x)
{
    if (x.degree() != 2)
        throw AlgebraError("flip needs a degree-2 tensor");
    TensorPoly out(2);
    for (const auto& [k, c] : x.terms())
        out.add_term({k[1], k[0]}, c);
    return out;
}

TensorPoly embed(const TensorPoly& x, Legs legs)
{
    if (x.degree() != 2)
        throw AlgebraError("embed needs a degree-2 tensor");
    TensorPoly out(3);
    for (const auto& [k, c] : x.terms()) {
        switch (legs) {
        case Legs::L12:
            out.add_term({k[0], k[1], {}}, c);
            break;
        case Legs::L13:
            out.add_term({k[0], {}, k[1]}, c);
            break;
        case Legs::L23:
            out.add_term({{}, k[0], k[1]}, c);
            break;
        }
    }
    return out;
}

std::string to_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += to_string(w[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

bool needs_parens(const std::string& s)
{
    return s.find_first_of("+-/") != std::string::npos;
}

// Appends "c*body" with the sign pulled out in front.
void append_term(std::string& out, const Scalar& c, const std::string& body, bool body_is_one)
{
    Scalar mag = c;
    bool negative = false;
    if (mag.numerator().leading().coeff < 0) {
        negative = true;
        mag = -mag;
    }
    if (out.empty())
        out = negative ? "-" : "";
    else
        out += negative ? " - " : " + ";

    if (mag.is_one()) {
        out += body;
        return;
    }
    std::string s = mag.to_string();
    if (needs_parens(s))
        s = "(" + s + ")";
    out += s;
    if (!body_is_one)
        out += "*" + body;
}

} // namespace

std::string to_string(const NCPoly& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [w, c] : x.terms())
        append_term(out, c, to_string(w), w.empty());
    return out;
}

std::string to_string(const TensorPoly& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, c] : x.terms()) {
        std::string body;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                body += " (x) ";
            body += to_string(k[i]);
        }
        append_term(out, c, body, false);
    }
    return out;
}

} // namespace yangian
