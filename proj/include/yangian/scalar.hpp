#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "yangian/poly.hpp"

namespace yangian {

/// Exact rational function in the registry parameters.
///
/// The representation is canonical: numerator and denominator are coprime
/// over the integers and the denominator has a positive leading coefficient
/// in graded lexicographic order. Equality is therefore a representation
/// check, which is what every "residual is zero" test in this library
/// relies on.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(Poly num) : num_(std::move(num)), den_(1) {}
    static Scalar param(ParamId id);
    static Scalar fraction(long num, long den);
    /// num / den, reduced. Throws AlgebraError when den is zero.
    static Scalar ratio(const Poly& num, const Poly& den);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when no parameter occurs.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool contains(ParamId id) const { return num_.contains(id) || den_.contains(id); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    /// Throws AlgebraError on division by the zero Scalar.
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Scalar pow(int n) const;

    /// Deterministic infix rendering; parse_scalar inverts it.
    std::string to_string() const;

private:
    Scalar(Poly num, Poly den, bool /*already_canonical*/)
        : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

Scalar parse_scalar(std::string_view text);

/// Exact substitution var -> value. Throws AlgebraError if the denominator
/// vanishes after substitution.
Scalar substitute(const Scalar& s, ParamId var, const Scalar& value);
/// Simultaneous substitution.
Scalar substitute(const Scalar& s, const std::vector<std::pair<ParamId, Scalar>>& values);

/// Order of s at var = 0 (positive for a zero, negative for a pole).
/// The zero Scalar has order 0 by convention.
int order_at_zero(const Scalar& s, ParamId var);

struct Divergent {
    int pole_order = 0;
    /// Coefficient of var^(-pole_order); free of var.
    Scalar leading;
    friend bool operator==(const Divergent&, const Divergent&) = default;
};

using LimitValue = std::variant<Scalar, Divergent>;

/// Classifies s as var -> 0: its value when regular, the pole data otherwise.
LimitValue boundary_limit(const Scalar& s, ParamId var);

/// Laurent expansion of s around var = 0, coefficients for every order from
/// the leading one up to max_order inclusive. Coefficients are free of var.
std::map<int, Scalar> laurent_at_zero(const Scalar& s, ParamId var, int max_order);

/// Evaluate a polynomial with some parameters replaced by Scalars.
Scalar evaluate(const Poly& poly, const std::vector<std::pair<ParamId, Scalar>>& values);

} // namespace yangian
