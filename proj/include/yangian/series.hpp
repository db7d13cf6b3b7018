#pragma once

#include <vector>

#include "yangian/scalar.hpp"

namespace yangian {

/// Truncated expansion sum_{k=0..order} c_k * var^(-k) around var = infinity.
class SeriesAtInfinity {
public:
    SeriesAtInfinity(ParamId var, int order);

    ParamId variable() const { return var_; }
    int order() const { return int(coeffs_.size()) - 1; }
    /// Coefficient of var^(-k); zero beyond the truncation order.
    const Scalar& coefficient(int k) const;
    void set_coefficient(int k, Scalar c);

    SeriesAtInfinity truncated(int order) const;
    friend SeriesAtInfinity operator+(const SeriesAtInfinity& a, const SeriesAtInfinity& b);
    friend SeriesAtInfinity operator-(const SeriesAtInfinity& a, const SeriesAtInfinity& b);
    friend SeriesAtInfinity operator*(const SeriesAtInfinity& a, const SeriesAtInfinity& b);
    friend SeriesAtInfinity operator*(const Scalar& c, const SeriesAtInfinity& a);
    friend bool operator==(const SeriesAtInfinity&, const SeriesAtInfinity&);

private:
    ParamId var_;
    std::vector<Scalar> coeffs_;
};

/// Expands s in powers of 1/var up to var^(-order). s must be regular at
/// infinity (numerator degree in var not above the denominator degree);
/// otherwise SeriesError is thrown.
SeriesAtInfinity expand_at_infinity(const Scalar& s, ParamId var, int order);

} // namespace yangian
