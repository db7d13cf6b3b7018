#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangian/presentation.hpp"

namespace yangian {

/// sum_i c_i [A_i, B_i] - words, read as "= 0". Brackets are keyed with the
/// larger generator first.
struct LinearForm {
    std::map<CommTable::Key, Scalar> brackets;
    NCPoly words;

    bool is_zero() const { return brackets.empty() && words.is_zero(); }
    void add_bracket(GenId a, GenId b, const Scalar& c, const GenOrder& ord = GenOrder());
    LinearForm& operator+=(const LinearForm& o);
    friend LinearForm operator*(const Scalar& c, const LinearForm& x);
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

LinearForm to_linear_form(const Relation& r);
std::string to_string(const LinearForm& x);
/// True when b = c * a for some nonzero Scalar c.
bool proportional(const LinearForm& a, const LinearForm& b);

struct LimitEntry {
    std::string source;       // label of the Y(sl(2)) relation
    std::string source_text;
    Scalar multiplier;        // rescaling that gives the leading bracket coefficient 1
    std::map<int, LinearForm> parts;  // order in the limit variable -> part
    int pole_order = 0;       // 0 when nothing diverges
    std::string divergent_leading;
    int vanishing_order = 0;  // lowest positive order present, 0 if none
    LinearForm finite;        // order-0 part after the resolved brackets are set to zero
    std::string target_text;  // boundary relation it should reproduce
    bool formal_match = true;
    bool table_match = true;
    std::string residual;
};

enum class LimitDirection { TToZero, PToZero };

struct LimitReport {
    LimitDirection direction = LimitDirection::TToZero;
    int grade_bound = 0;
    std::vector<LimitEntry> entries;
    /// Brackets forced to vanish by divergence cancellation and the
    /// commuting-copy axioms [h_k, h'_l] = 0.
    std::vector<CommTable::Key> resolved;
    /// Brackets that occur in a divergent part but are not forced to zero.
    std::vector<CommTable::Key> unresolved;
    /// Divergent parts that contain words and so cannot be cancelled.
    std::vector<std::string> obstructions;
    /// Rescaling per relation kind, e.g. "he" -> 2*p^2.
    std::map<std::string, Scalar> rescalings;
    bool rescalings_uniform = true;

    bool finite_parts_match() const;
    /// resolved is exactly {[h'_a, x_b]} for x in e, f, h, h' and a + b <= bound.
    bool resolved_is_centrality() const;
    bool passed() const;
};

/// Applies e_k -> e_k/p, f_k -> f_k/t, h_k -> (h_k/p + h'_k/t)/2, hbar -> pt
/// to the Y(sl(2)) relations of grade <= bound and takes t -> 0 (or p -> 0).
/// The t -> 0 finite parts are compared with the boundary relations, formally
/// and in build_boundary(max(bound, 1)).
LimitReport parametrize_and_limit(int bound, LimitDirection dir = LimitDirection::TToZero);

/// e -> f, f -> -e, h -> -h', h' -> h, p -> t, t -> -p.
LinearForm exchange(const LinearForm& x);

/// Every nonzero finite part of the p -> 0 report is proportional to the
/// exchange image of a t -> 0 finite part and vice versa; the resolved sets
/// correspond under the exchange.
Outcome compare_dual_limits(const LimitReport& t_limit, const LimitReport& p_limit);

} // namespace yangian
