#include "yangian/lie.hpp"

#include <algorithm>

#include "yangian/errors.hpp"

namespace yangian {

LieAlg::LieAlg(std::string name, std::vector<std::string> basis,
               std::vector<std::vector<LieVector>> structure, std::optional<MatrixRF> form)
    : name_(std::move(name)), basis_(std::move(basis)), structure_(std::move(structure)),
      form_(std::move(form))
{
    const std::size_t n = basis_.size();
    if (structure_.size() != n)
        throw AlgebraError(name_ + ": structure constants have the wrong shape");
    for (const auto& row : structure_) {
        if (row.size() != n)
            throw AlgebraError(name_ + ": structure constants have the wrong shape");
        for (const auto& v : row) {
            if (v.size() != n)
                throw AlgebraError(name_ + ": structure constants have the wrong shape");
        }
    }
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                if (!(bracket(i, j)[std::size_t(k)] + bracket(j, i)[std::size_t(k)]).is_zero())
                    throw AlgebraError(name_ + ": bracket is not antisymmetric at [" + basis_[std::size_t(i)] +
                                       ", " + basis_[std::size_t(j)] + "]");
            }
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            for (int k = j + 1; k < d; ++k) {
                LieVector res = bracket(unit(i), bracket(j, k));
                const LieVector b = bracket(unit(j), bracket(k, i));
                const LieVector c = bracket(unit(k), bracket(i, j));
                for (int m = 0; m < d; ++m)
                    res[std::size_t(m)] += b[std::size_t(m)] + c[std::size_t(m)];
                if (std::any_of(res.begin(), res.end(), [](const Scalar& s) { return !s.is_zero(); }))
                    throw AlgebraError(name_ + ": Jacobi identity fails on (" + basis_[std::size_t(i)] +
                                       ", " + basis_[std::size_t(j)] + ", " + basis_[std::size_t(k)] + ")");
            }
        }
    }
    if (!form_)
        return;
    const MatrixRF& B = *form_;
    if (B.dim() != d)
        throw AlgebraError(name_ + ": invariant form has the wrong dimension");
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (B(i, j) != B(j, i))
                throw AlgebraError(name_ + ": invariant form is not symmetric");
        }
    }
    // B([x, y], z) + B(y, [x, z]) = 0
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            for (int z = 0; z < d; ++z) {
                Scalar s;
                for (int m = 0; m < d; ++m) {
                    s += bracket(x, y)[std::size_t(m)] * B(m, z);
                    s += B(y, m) * bracket(x, z)[std::size_t(m)];
                }
                if (!s.is_zero())
                    throw AlgebraError(name_ + ": form is not ad-invariant at (" + basis_[std::size_t(x)] +
                                       ", " + basis_[std::size_t(y)] + ", " + basis_[std::size_t(z)] + ")");
            }
        }
    }
}

int LieAlg::index(const std::string& symbol) const
{
    auto it = std::find(basis_.begin(), basis_.end(), symbol);
    if (it == basis_.end())
        throw AlgebraError(name_ + ": no basis element '" + symbol + "'");
    return int(it - basis_.begin());
}

LieVector LieAlg::unit(int i) const
{
    LieVector v(basis_.size());
    v[std::size_t(i)] = Scalar(1);
    return v;
}

LieVector LieAlg::bracket(const LieVector& x, const LieVector& y) const
{
    LieVector out(basis_.size());
    for (int i = 0; i < dim(); ++i) {
        if (x[std::size_t(i)].is_zero())
            continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[std::size_t(j)].is_zero())
                continue;
            const Scalar c = x[std::size_t(i)] * y[std::size_t(j)];
            const LieVector& b = bracket(i, j);
            for (int k = 0; k < dim(); ++k) {
                if (!b[std::size_t(k)].is_zero())
                    out[std::size_t(k)] += c * b[std::size_t(k)];
            }
        }
    }
    return out;
}

std::string LieAlg::to_string(const LieVector& x) const
{
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        const Scalar& c = x[std::size_t(i)];
        if (c.is_zero())
            continue;
        std::string cs = c.to_string();
        if (!out.empty())
            out += " + ";
        if (c.is_one())
            out += basis_[std::size_t(i)];
        else if (cs.find_first_of("+-/") != std::string::npos)
            out += "(" + cs + ")*" + basis_[std::size_t(i)];
        else
            out += cs + "*" + basis_[std::size_t(i)];
    }
    return out.empty() ? "0" : out;
}

namespace {

struct Rule {
    const char* x;
    const char* y;
    std::vector<std::pair<Scalar, const char*>> value;
};

LieAlg make(const std::string& name, std::vector<std::string> basis, const std::vector<Rule>& rules,
            std::optional<std::vector<std::pair<std::pair<const char*, const char*>, Scalar>>> form = {})
{
    const std::size_t n = basis.size();
    auto idx = [&](const char* s) {
        return std::size_t(std::find(basis.begin(), basis.end(), s) - basis.begin());
    };
    std::vector<std::vector<LieVector>> st(n, std::vector<LieVector>(n, LieVector(n)));
    for (const auto& r : rules) {
        for (const auto& [c, z] : r.value) {
            st[idx(r.x)][idx(r.y)][idx(z)] += c;
            st[idx(r.y)][idx(r.x)][idx(z)] -= c;
        }
    }
    std::optional<MatrixRF> B;
    if (form) {
        B = MatrixRF(int(n));
        for (const auto& [pair, c] : *form) {
            (*B)(int(idx(pair.first)), int(idx(pair.second))) = c;
            (*B)(int(idx(pair.second)), int(idx(pair.first))) = c;
        }
    }
    return LieAlg(name, std::move(basis), std::move(st), std::move(B));
}

} // namespace

LieAlg builtin(const std::string& name)
{
    const Scalar p = Scalar::param(param::p);
    if (name == "sl2") {
        return make(name, {"e", "f", "h"},
                    {{"h", "e", {{Scalar(2), "e"}}},
                     {"h", "f", {{Scalar(-2), "f"}}},
                     {"e", "f", {{Scalar(1), "h"}}}},
                    {{{{"e", "f"}, Scalar(1)}, {{"h", "h"}, Scalar(2)}}});
    }
    if (name == "double") {
        const Scalar half = Scalar::fraction(1, 2);
        return make(name, {"e", "f", "h", "hp"},
                    {{"h", "e", {{Scalar(2), "e"}}},
                     {"h", "f", {{Scalar(-2), "f"}}},
                     {"hp", "e", {{Scalar(2), "e"}}},
                     {"hp", "f", {{Scalar(-2), "f"}}},
                     {"e", "f", {{half, "h"}, {half, "hp"}}}});
    }
    if (name == "a") {
        return make(name, {"e", "f", "h", "hp"},
                    {{"h", "e", {{Scalar(4) * p, "e"}}},
                     {"h", "f", {{Scalar(-4) * p, "f"}}},
                     {"e", "f", {{p / Scalar(2), "hp"}}}},
                    {{{{"e", "f"}, Scalar(1)}, {{"h", "hp"}, Scalar(8)}}});
    }
    if (name == "c") {
        return make(name, {"e", "f", "h"},
                    {{"h", "e", {{Scalar(4) * p, "e"}}}, {"h", "f", {{Scalar(-4) * p, "f"}}}});
    }
    if (name == "borel2")
        return make(name, {"h", "e"}, {{"h", "e", {{Scalar(2), "e"}}}});
    throw AlgebraError("unknown Lie algebra '" + name + "'");
}

} // namespace yangian
