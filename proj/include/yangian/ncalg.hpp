#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "yangian/scalar.hpp"

namespace yangian {

enum class Family : std::uint8_t { E, F, H, Hp };

struct GenId {
    Family family = Family::E;
    std::uint8_t mode = 0;
    friend constexpr auto operator<=>(GenId, GenId) = default;
};

inline GenId gen_e(int k) { return {Family::E, static_cast<std::uint8_t>(k)}; }
inline GenId gen_f(int k) { return {Family::F, static_cast<std::uint8_t>(k)}; }
inline GenId gen_h(int k) { return {Family::H, static_cast<std::uint8_t>(k)}; }
inline GenId gen_hp(int k) { return {Family::Hp, static_cast<std::uint8_t>(k)}; }

/// "e", "f", "h" or "hp".
std::string family_name(Family f);
/// "e_3", "hp_0", ...
std::string to_string(GenId g);

/// Total order on generators: families ranked, modes ascending inside a family.
class GenOrder {
public:
    /// F < Hp < H < E.
    GenOrder();
    /// rank[f] is the position of family f; ranks must be a permutation of 0..3.
    explicit GenOrder(std::array<int, 4> rank);

    bool less(GenId a, GenId b) const;
    int rank(Family f) const { return rank_[static_cast<int>(f)]; }

private:
    std::array<int, 4> rank_;
};

using Word = std::vector<GenId>;

int mode_sum(const Word& w);
bool is_normal(const Word& w, const GenOrder& ord);

class NCPoly {
public:
    using Terms = std::map<Word, Scalar>;

    NCPoly() = default;
    NCPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
    NCPoly(GenId g);  // NOLINT(google-explicit-constructor)
    static NCPoly word(Word w, const Scalar& c = Scalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of w (zero if absent).
    Scalar coefficient(const Word& w) const;
    void add_term(const Word& w, const Scalar& c);

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Scalar& c, const NCPoly& a);
    /// Free (concatenation) product; no reordering.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    /// Applies f to every coefficient, dropping terms that become zero.
    template <class Fn>
    NCPoly map_coefficients(Fn&& f) const
    {
        NCPoly out;
        for (const auto& [w, c] : terms_)
            out.add_term(w, f(c));
        return out;
    }

    int max_mode() const;
    bool contains_family(Family f) const;

private:
    Terms terms_;
};

/// Element of the d-fold tensor power (d = 2 or 3). Legs commute with each
/// other; each leg is a word in the generators.
class TensorPoly {
public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Scalar>;

    explicit TensorPoly(int degree = 2) : degree_(degree) {}
    /// x_1 ⊗ x_2 (⊗ x_3), expanded.
    static TensorPoly product(const std::vector<NCPoly>& legs);
    static TensorPoly identity(int degree);

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Key& k) const;
    void add_term(const Key& k, const Scalar& c);

    TensorPoly operator-() const;
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const Scalar& c, const TensorPoly& a);
    /// Leg-wise concatenation product; no reordering.
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

    template <class Fn>
    TensorPoly map_coefficients(Fn&& f) const
    {
        TensorPoly out(degree_);
        for (const auto& [k, c] : terms_)
            out.add_term(k, f(c));
        return out;
    }

private:
    int degree_;
    Terms terms_;
};

enum class Legs { L12, L13, L23 };

/// Exchanges the legs of a degree-2 element.
TensorPoly flip(const TensorPoly& x);
/// Places a degree-2 element on the given legs of the triple tensor power.
TensorPoly embed(const TensorPoly& x, Legs legs);

/// Deterministic infix renderings: "(p/2)*hp_0", "f_1*e_0 + h_1",
/// "h_0 (x) e_0". The empty word prints as "1".
std::string to_string(const Word& w);
std::string to_string(const NCPoly& x);
std::string to_string(const TensorPoly& x);

} // namespace yangian
