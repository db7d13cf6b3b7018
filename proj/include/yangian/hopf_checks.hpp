#pragma once

#include <string>
#include <vector>

#include "yangian/presentation.hpp"

namespace yangian {

struct HopfBounds {
    int jacobi = 3;      // triples with mode sum <= jacobi
    int relation = 3;    // relations whose generators all have mode <= relation
    int coproduct = 3;   // generators checked for coassociativity and counit
};

/// Table completeness, Jacobi, relations, Δ-homomorphy, coassociativity
/// and counit records, each named "<presentation>.<check>".
std::vector<CheckRecord> verify_hopf(const HopfPresentation& pres, const HopfBounds& bounds);
std::vector<CheckRecord> verify_hopf(const HopfPresentation& pres, int max_mode);

/// True iff the generators of the given families span a Hopf ideal: brackets
/// with every generator, and every coproduct, vanish once they are set to
/// zero. On failure *witness names the escaping element.
bool verify_hopf_ideal(const HopfPresentation& pres, const std::vector<Family>& ideal,
                       std::string* witness = nullptr);

/// Every coefficient of (Δ - Δ^op)(g) vanishes at var = 0, for mode(g) <= max_mode.
Outcome cocommutator_divisible(const HopfPresentation& pres, ParamId var, int max_mode);

/// Drops every term containing a generator of the given families.
NCPoly drop_families(const NCPoly& x, const std::vector<Family>& families);
TensorPoly drop_families(const TensorPoly& x, const std::vector<Family>& families);

} // namespace yangian
