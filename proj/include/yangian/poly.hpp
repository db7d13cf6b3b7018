#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "yangian/params.hpp"

namespace yangian {

struct Monomial {
    std::array<std::uint8_t, kParamCount> exp{};

    unsigned degree() const;
    bool is_one() const { return degree() == 0; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison: total degree first, then the exponent of
/// the earliest registry parameter. Returns <0, 0 or >0.
int grlex_compare(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& d, const Monomial& m);
/// m / d; requires divides(d, m).
Monomial quotient(const Monomial& m, const Monomial& d);

/// Sparse multivariate polynomial with integer coefficients. Terms are kept
/// sorted in decreasing graded lexicographic order with no zero coefficients.
class Poly {
public:
    struct Term {
        Monomial mono;
        mpz_class coeff;
    };

    Poly() = default;
    Poly(long c);  // NOLINT(google-explicit-constructor)
    explicit Poly(mpz_class c);
    static Poly variable(ParamId id, unsigned power = 1);
    static Poly from_terms(std::vector<Term> terms);
    static Poly monomial(const Monomial& m, mpz_class c);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    const Term& leading() const { return terms_.front(); }
    /// Value of a constant polynomial (0 for the zero polynomial).
    mpz_class constant_value() const;

    int degree_in(ParamId id) const;
    int valuation_in(ParamId id) const;
    bool contains(ParamId id) const { return degree_in(id) > 0; }
    bool contains_any() const;
    unsigned total_degree() const;

    mpz_class content() const;
    Poly scaled(const mpz_class& c) const;
    Poly times_monomial(const Monomial& m, const mpz_class& c) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor over the integers, normalised to a positive
/// leading coefficient. gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Coefficients of a as a polynomial in x; entry i multiplies x^i.
std::vector<Poly> coefficients_in(const Poly& a, ParamId x);
Poly from_coefficients(const std::vector<Poly>& coeffs, ParamId x);

} // namespace yangian
