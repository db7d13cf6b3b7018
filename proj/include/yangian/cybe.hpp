#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangian/lie.hpp"
#include "yangian/presentation.hpp"

namespace yangian {

/// Element of g^{⊗degree} with coefficients rational in the spectral
/// variables. A degree-2 tensor r(u, v) carries u on leg one and v on leg two.
struct SpectralTensor {
    using Key = std::vector<int>;  // basis index per leg

    int degree = 2;
    std::map<Key, Scalar> terms;

    SpectralTensor() = default;
    explicit SpectralTensor(int deg) : degree(deg) {}

    void add(const Key& k, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    Scalar coefficient(const Key& k) const;
    SpectralTensor& operator+=(const SpectralTensor& o);
    SpectralTensor& operator-=(const SpectralTensor& o);
    friend SpectralTensor operator*(const Scalar& c, const SpectralTensor& x);
    friend bool operator==(const SpectralTensor&, const SpectralTensor&) = default;
};

std::string to_string(const SpectralTensor& x, const LieAlg& g);

/// Swaps the legs and u <-> v.
SpectralTensor flip(const SpectralTensor& x);
/// Applies fn to every coefficient, dropping zeros.
SpectralTensor map_coefficients(const SpectralTensor& x, const std::function<Scalar(const Scalar&)>& fn);
/// Same tensor with basis symbols looked up in another algebra.
SpectralTensor rebase(const SpectralTensor& x, const LieAlg& from, const LieAlg& to);

/// Inverse of the invariant form written as a two-tensor. AlgebraError when
/// the algebra has no form.
SpectralTensor casimir(const LieAlg& g);
/// casimir(g) / (u - v).
SpectralTensor rational_r(const LieAlg& g);

/// [r12, r13] + [r12, r23] + [r13, r23] with r_ij = r(lambda_i, lambda_j).
SpectralTensor cybe_residual(const SpectralTensor& r, const LieAlg& g);

/// [x⊗1 + 1⊗x, omega] for each basis element x, in basis order.
std::vector<SpectralTensor> ad_invariance_residual(const SpectralTensor& omega, const LieAlg& g);

/// [u^k x⊗1 + v^k 1⊗x, r(u, v)], the cobracket of the current mode x t^k.
/// mode = 0 gives the plain adjoint action [x⊗1 + 1⊗x, r].
SpectralTensor cobracket(const SpectralTensor& r, const LieAlg& g, int x, int mode = 0);

/// Reads a coefficient polynomial in u, v as modes: u^i v^j a⊗b -> a_i⊗b_j.
/// Basis symbols e, f, h, hp map to the generator families. Throws
/// AlgebraError if a coefficient is not polynomial in u and v.
TensorPoly to_modes(const SpectralTensor& x, const LieAlg& g);

struct ColieEntry {
    GenId generator;
    std::string cocommutator;  // (Δ - Δ^op)(g) from the presentation
    std::string cobracket;     // mode coefficient of δ
    bool consistent = true;
};

struct ColieReport {
    std::vector<ColieEntry> entries;
    /// cobracket = constant * (Δ - Δ^op), shared by all generators.
    std::optional<Scalar> constant;
    Outcome outcome;
};

/// Compares modes 0 and 1 of every generator family.
ColieReport compare_colie(const HopfPresentation& boundary, const SpectralTensor& r, const LieAlg& a);

/// Drops every term with hp in some leg.
SpectralTensor project_factor_r(const SpectralTensor& r, const LieAlg& a);

struct DivergenceReport {
    /// All over the basis e, f, h, hp of the double.
    SpectralTensor divergent, finite, vanishing;
    int pole_order = 0;
    int vanishing_order = 0;
    bool finite_matches = false;
    std::string residual;
};

/// hbar * casimir(sl2) / (u - v) under e -> e/p, f -> f/t,
/// h -> (h/p + hp/t)/2, hbar -> pt, split by order in t; the finite part is
/// compared with rational_r(builtin("a")).
DivergenceReport parametrized_r_divergence();

} // namespace yangian
