#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangian/matrix.hpp"

namespace yangian {

using LieVector = std::vector<Scalar>;

/// Finite-dimensional Lie algebra given by exact structure constants.
/// The constructor rejects brackets that are not antisymmetric or violate
/// Jacobi, and invariant forms that are not symmetric and ad-invariant.
class LieAlg {
public:
    /// structure[i][j] = [x_i, x_j] in the basis.
    LieAlg(std::string name, std::vector<std::string> basis,
           std::vector<std::vector<LieVector>> structure,
           std::optional<MatrixRF> form = std::nullopt);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& basis() const { return basis_; }
    int dim() const { return int(basis_.size()); }
    /// Throws AlgebraError for an unknown symbol.
    int index(const std::string& symbol) const;
    const LieVector& bracket(int i, int j) const { return structure_[std::size_t(i)][std::size_t(j)]; }
    LieVector bracket(const LieVector& x, const LieVector& y) const;
    const std::optional<MatrixRF>& form() const { return form_; }

    LieVector unit(int i) const;
    std::string to_string(const LieVector& x) const;

private:
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<std::vector<LieVector>> structure_;
    std::optional<MatrixRF> form_;
};

/// sl2, double, a, c or borel2. Throws AlgebraError for other names.
LieAlg builtin(const std::string& name);

} // namespace yangian
