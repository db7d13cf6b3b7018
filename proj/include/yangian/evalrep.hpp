#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangian/cybe.hpp"
#include "yangian/lie.hpp"
#include "yangian/presentation.hpp"

namespace yangian {

/// Matrix images of a Lie algebra basis. The constructor checks
/// ρ([x, y]) = [ρ(x), ρ(y)] for every basis pair.
class LieRep {
public:
    LieRep(LieAlg algebra, std::vector<MatrixRF> images);

    const LieAlg& algebra() const { return algebra_; }
    int dim() const { return images_.front().dim(); }
    const MatrixRF& image(int basis_index) const { return images_[std::size_t(basis_index)]; }
    const MatrixRF& image(const std::string& symbol) const { return image(algebra_.index(symbol)); }

private:
    LieAlg algebra_;
    std::vector<MatrixRF> images_;
};

/// h = diag(1, -1), e = E12, f = E21.
LieRep fundamental_sl2();
/// e = E12, f = E34, h = 2p diag(1, -1, -1, 1) as a representation of c.
LieRep rep_c4();

struct EvalRep {
    LieRep rep;
    ParamId spectral;
};

/// λ^mode ρ(x). AlgebraError when the family has no image.
MatrixRF eval_mode(const EvalRep& rep, GenId g);
MatrixRF eval(const EvalRep& rep, const NCPoly& x);
/// Leg i uses legs[i]; the result acts on the Kronecker product.
MatrixRF eval(const std::vector<EvalRep>& legs, const TensorPoly& x);

/// Σ M^k / k!. Throws NotNilpotent unless M^dim = 0.
MatrixRF exp_nilpotent(const MatrixRF& m);

/// The mode relations of `set` with modes <= bound evaluated in rep, plus the
/// table-independent identities the evaluation map relies on.
Outcome check_eval_relations(const EvalRep& rep, RelationSet set, int bound);

/// Records "twist.conjugation" (generators of Y(c) with mode <= max_mode)
/// and "twist.cocycle".
std::vector<CheckRecord> twist_check(int max_mode = 2);

/// R12 R13 R23 - R23 R13 R12 in rep_c4^⊗3.
MatrixRF ybe_residual();

/// R12(x) R21(-x) - 1 in rep_c4^⊗2.
MatrixRF unitarity_residual();

/// R - (F21 F)^{-1} with F21 the literal leg flip of the matrix F, and
/// R - F21 F^{-1} with F21 carrying the exchanged spectral parameters.
MatrixRF r_from_twist_residual_flip();
MatrixRF r_from_twist_residual_spectral();

/// (T_λ⊗id)Δ^op(a) - R (T_λ⊗id)Δ(a) R^{-1} in rep_c4^⊗2.
MatrixRF pqybe_residual(GenId a, ParamId lambda = param::lambda);

/// Exponent of R(λ1 - λ2): (f⊗e + e⊗f)/(λ1 - λ2) in rep_c4^⊗2.
MatrixRF r_exponent();

/// Image of a degree-2 spectral tensor over `basis` with u -> λ1, v -> λ2;
/// basis symbols are looked up in rep's algebra.
MatrixRF eval(const LieRep& rep, const SpectralTensor& x, const LieAlg& basis);

} // namespace yangian
