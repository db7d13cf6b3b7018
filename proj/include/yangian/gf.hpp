#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "yangian/presentation.hpp"

namespace yangian {

enum class Spectral { U, V };

/// Symbolic expression in currents x(u), x(v) and the kernel 1/(u - v).
class GFExpr {
public:
    enum class Kind { Current, Constant, Kernel, Sum, Product, Scale, Commutator, Anticommutator };

    static GFExpr current(std::string symbol, Spectral at);
    static GFExpr constant(const Scalar& c);
    static GFExpr kernel();

    friend GFExpr operator+(const GFExpr& a, const GFExpr& b);
    friend GFExpr operator-(const GFExpr& a, const GFExpr& b);
    friend GFExpr operator*(const GFExpr& a, const GFExpr& b);
    friend GFExpr operator*(const Scalar& c, const GFExpr& a);
    friend GFExpr commutator(const GFExpr& a, const GFExpr& b);
    friend GFExpr anticommutator(const GFExpr& a, const GFExpr& b);

    Kind kind() const { return node_->kind; }
    const std::string& symbol() const { return node_->symbol; }
    Spectral at() const { return node_->at; }
    const Scalar& scalar() const { return node_->scalar; }
    const GFExpr& left() const { return *node_->left; }
    const GFExpr& right() const { return *node_->right; }

    /// Current symbols occurring in the expression.
    void collect_symbols(std::vector<std::string>& out) const;

private:
    struct Node {
        Kind kind = Kind::Constant;
        std::string symbol;
        Spectral at = Spectral::U;
        Scalar scalar;
        std::shared_ptr<const GFExpr> left, right;
    };
    explicit GFExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static GFExpr binary(Kind k, const GFExpr& a, const GFExpr& b);

    std::shared_ptr<const Node> node_;
};

/// x(u) = constant + scale * sum_k x_k u^(-k-1).
struct CurrentBinding {
    Family family;
    Scalar constant;
    Scalar scale;
};

struct GFIdentity {
    std::string name;
    GFExpr lhs;
    GFExpr rhs;
    std::map<std::string, CurrentBinding> binding;
};

/// Coefficients keyed by (a, b) for u^(-a) v^(-b), kept inside the window
/// a <= max_a, a + b <= max_total. Every building block has a >= 0 and
/// a + b >= 0, so truncated products are exact inside the window.
struct DoubleSeries {
    int max_a = 0;
    int max_total = 0;
    std::map<std::pair<int, int>, NCPoly> coeffs;
};

DoubleSeries expand(const GFExpr& e, const std::map<std::string, CurrentBinding>& binding,
                    const Normalizer& norm, int max_a, int max_total);

/// Compares every coefficient of both sides in the window that covers the
/// bidegrees u^(-i-1) v^(-j-1) with i + j <= bi_degree.
Outcome check_gf_identity(const GFIdentity& id, const Normalizer& norm, int bi_degree);

std::vector<GFIdentity> y_sl2_gf_identities();
std::vector<GFIdentity> boundary_gf_identities();

/// Expands the three series of the series form of the coproduct of Y(sl(2)) and
/// compares each order u^(-n), n <= max_order, with the derived mode
/// coproducts (hbar * Δh_{n-1} for h(u)). One record per series.
std::vector<CheckRecord> check_series_coproduct(const HopfPresentation& y, int max_order);

/// Derived boundary coproducts of e, f, h' against the mode coefficients of
/// the generating-function coproducts, for modes <= max_mode.
Outcome check_boundary_gf_coproducts(const HopfPresentation& boundary, int max_mode);

} // namespace yangian
