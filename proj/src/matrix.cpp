#include "yangian/matrix.hpp"

#include <utility>

#include "yangian/errors.hpp"

namespace yangian {

namespace {

void require_same(const MatrixRF& a, const MatrixRF& b)
{
    if (a.dim() != b.dim())
        throw AlgebraError("matrix dimension mismatch");
}

} // namespace

MatrixRF MatrixRF::identity(int dim)
{
    MatrixRF m(dim);
    for (int i = 0; i < dim; ++i)
        m(i, i) = Scalar(1);
    return m;
}

MatrixRF MatrixRF::unit(int dim, int i, int j)
{
    MatrixRF m(dim);
    m(i, j) = Scalar(1);
    return m;
}

MatrixRF MatrixRF::diagonal(const std::vector<Scalar>& d)
{
    MatrixRF m(int(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m(int(i), int(i)) = d[i];
    return m;
}

bool MatrixRF::is_zero() const
{
    for (const auto& x : data_) {
        if (!x.is_zero())
            return false;
    }
    return true;
}

MatrixRF MatrixRF::operator-() const
{
    MatrixRF m = *this;
    for (auto& x : m.data_)
        x = -x;
    return m;
}

MatrixRF& MatrixRF::operator+=(const MatrixRF& o)
{
    require_same(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!o.data_[i].is_zero())
            data_[i] += o.data_[i];
    }
    return *this;
}

MatrixRF& MatrixRF::operator-=(const MatrixRF& o)
{
    require_same(*this, o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!o.data_[i].is_zero())
            data_[i] -= o.data_[i];
    }
    return *this;
}

MatrixRF operator*(const MatrixRF& a, const MatrixRF& b)
{
    require_same(a, b);
    const int d = a.dim();
    MatrixRF out(d);
    // Kronecker images are very sparse; skip zero entries on both sides.
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < d; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero())
                    out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

MatrixRF operator*(const Scalar& c, const MatrixRF& a)
{
    MatrixRF m = a;
    for (auto& x : m.data_) {
        if (!x.is_zero())
            x *= c;
    }
    return m;
}

MatrixRF MatrixRF::inverse() const
{
    const int d = dim_;
    MatrixRF a = *this;
    MatrixRF inv = identity(d);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int r = col; r < d; ++r) {
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            throw AlgebraError("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < d; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Scalar scale = Scalar(1) / a(col, col);
        for (int j = 0; j < d; ++j) {
            if (!a(col, j).is_zero())
                a(col, j) *= scale;
            if (!inv(col, j).is_zero())
                inv(col, j) *= scale;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col || a(r, col).is_zero())
                continue;
            const Scalar factor = a(r, col);
            for (int j = 0; j < d; ++j) {
                if (!a(col, j).is_zero())
                    a(r, j) -= factor * a(col, j);
                if (!inv(col, j).is_zero())
                    inv(r, j) -= factor * inv(col, j);
            }
        }
    }
    return inv;
}

MatrixRF MatrixRF::map_entries(const std::function<Scalar(const Scalar&)>& fn) const
{
    MatrixRF m = *this;
    for (auto& x : m.data_) {
        if (!x.is_zero())
            x = fn(x);
    }
    return m;
}

std::vector<std::vector<std::string>> MatrixRF::rows() const
{
    std::vector<std::vector<std::string>> out{std::size_t(dim_)};
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j)
            out[std::size_t(i)].push_back((*this)(i, j).to_string());
    }
    return out;
}

std::string MatrixRF::sparse_string() const
{
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (x.is_zero())
                continue;
            if (!out.empty())
                out += "; ";
            out += "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + x.to_string();
        }
    }
    return out.empty() ? "0" : out;
}

MatrixRF commutator(const MatrixRF& a, const MatrixRF& b)
{
    return a * b - b * a;
}

MatrixRF anticommutator(const MatrixRF& a, const MatrixRF& b)
{
    return a * b + b * a;
}

MatrixRF kron(const MatrixRF& a, const MatrixRF& b)
{
    const int da = a.dim(), db = b.dim();
    MatrixRF out(da * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            if (a(i, j).is_zero())
                continue;
            for (int k = 0; k < db; ++k) {
                for (int l = 0; l < db; ++l) {
                    if (!b(k, l).is_zero())
                        out(i * db + k, j * db + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

} // namespace yangian
