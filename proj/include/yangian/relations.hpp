#pragma once

#include <string>
#include <vector>

#include "yangian/comm_table.hpp"

namespace yangian {

struct BracketTerm {
    Scalar coeff;
    GenId a;
    GenId b;
};

/// A defining relation sum_i c_i [a_i, b_i] = rhs, kept formal: rhs is a
/// combination of free words, not necessarily normal ordered.
struct Relation {
    std::string kind;  // e.g. "he" for [h_{k+1}, e_l] - [h_k, e_{l+1}] = ...
    int k = 0;
    int l = 0;
    std::vector<BracketTerm> lhs;
    NCPoly rhs;

    /// Total mode of the bracketed pairs.
    int grade() const;
    /// Largest generator mode occurring anywhere in the relation.
    int max_mode() const;
    std::string label() const;
};

enum class RelationSet { YSl2, Boundary, Factor };

/// All instances of the defining relations with grade <= bound.
std::vector<Relation> defining_relations(RelationSet set, int bound);

/// lhs - rhs evaluated with the table; zero when the relation holds.
NCPoly relation_residual(const Relation& r, const Normalizer& norm);

std::string to_string(const Relation& r);

} // namespace yangian
