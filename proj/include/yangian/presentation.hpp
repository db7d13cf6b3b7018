#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangian/relations.hpp"
#include "yangian/report.hpp"

namespace yangian {

struct HopfPresentation {
    std::string name;
    CommTable table;
    std::map<GenId, TensorPoly> coproducts;
    std::vector<ParamId> parameters;
    RelationSet relation_set = RelationSet::YSl2;

    /// Throws CapacityError when g is beyond the constructed range.
    const TensorPoly& coproduct(GenId g) const;
    /// The counit vanishes on every generator.
    Scalar counit(GenId) const { return Scalar(0); }
    std::vector<Relation> relations(int bound) const
    {
        return defining_relations(relation_set, bound);
    }
};

inline constexpr int kDefaultCapacity = 6;

TensorPoly primitive(GenId g);

HopfPresentation build_y_sl2(int capacity = kDefaultCapacity);
HopfPresentation build_boundary(int capacity = kDefaultCapacity);
/// Y(c) written down directly: [h_k, e_l] = 4p e_{k+l}, [h_k, f_l] = -4p f_{k+l},
/// everything else commuting; e, f primitive and
/// Δ(h_k) = h_k⊗1 + 1⊗h_k - 4p Σ_{i+j=k-1} f_i⊗e_j.
HopfPresentation build_factor_closed_form(int capacity = kDefaultCapacity);

/// Sets h'_k to zero. Throws AlgebraError if the h' family is not a Hopf
/// ideal or the result differs from the closed-form factor presentation.
HopfPresentation quotient_by_hp(const HopfPresentation& boundary);

/// Mode coefficients of the boundary generating-function coproducts
/// Δe(u), Δf(u), Δχ(u), Δχ'(u).
TensorPoly boundary_gf_coproduct(GenId g);

/// Alternative derivation of Δ(h_k) in Y(sl(2)) through [Δe_0, Δf_k].
TensorPoly y_sl2_h_coproduct_via_f(const HopfPresentation& y, int k);

/// Applies the coproduct of pres to an algebra element.
TensorPoly apply_coproduct(const HopfPresentation& pres, const Normalizer& norm, const NCPoly& x);

/// Export format: the table dump followed by "Delta(g) = ..." lines.
std::string export_text(const HopfPresentation& pres);

} // namespace yangian
