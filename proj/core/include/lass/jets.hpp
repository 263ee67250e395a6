#pragma once

// Polynomial Lie algebroids on the trivial bundle W x Q^n with the origin
// invariant, truncated at jet order k.
//
// The anchor of generator e_a is the vector field X_a = Σ_i P_a^i(w) ∂_i with
// P_a(0) = 0, and [e_a, e_b] = Σ_d c_ab^d(w) e_d. The k-jet complex is
// ∧^• (Q^n)^* ⊗ Pol^{≤k}(W) ⊗ V, filtered by polynomial degree.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "lass/ce.hpp"
#include "lass/cochain.hpp"
#include "lass/polynomial.hpp"
#include "lass/spectral.hpp"

namespace lass {

class PolyJetAlgebroid {
public:
    /// `anchor[a][i]` = P_a^i, `structure[(a * n + b) * n + d]` = c_ab^d. Every
    /// polynomial is truncated at `order`. Throws StructuralError on shape
    /// mismatch or an anchor with a constant term.
    PolyJetAlgebroid(std::size_t rank, std::size_t base_dim, unsigned order,
                     std::vector<std::vector<Polynomial>> anchor, std::vector<Polynomial> structure);

    /// g ⋉ W: linear anchor with matrix -ρ(e_a), constant structure functions.
    static PolyJetAlgebroid action(const LieAlgebra& g, const Representation& rho, unsigned order);

    [[nodiscard]] std::size_t rank() const { return rank_; }
    [[nodiscard]] std::size_t base_dim() const { return base_dim_; }
    [[nodiscard]] unsigned order() const { return order_; }
    [[nodiscard]] const Polynomial& anchor(std::size_t a, std::size_t i) const { return anchor_[a][i]; }
    [[nodiscard]] const Polynomial& structure(std::size_t a, std::size_t b, std::size_t d) const {
        return structure_[(a * rank_ + b) * rank_ + d];
    }
    [[nodiscard]] const std::vector<std::vector<Polynomial>>& anchors() const { return anchor_; }
    [[nodiscard]] const std::vector<Polynomial>& structures() const { return structure_; }

    /// X_a(f), truncated at the jet order.
    [[nodiscard]] Polynomial apply_anchor(std::size_t a, const Polynomial& f) const;
    /// Linear anchor and constant structure functions.
    [[nodiscard]] bool is_linear() const;
    /// Same algebroid at another jet order.
    [[nodiscard]] PolyJetAlgebroid with_order(unsigned order) const;

    /// Fiber Lie algebra at the origin (structure constants c_ab^d(0)).
    [[nodiscard]] LieAlgebra fiber_algebra() const;
    /// Action of the fiber algebra on Pol^1(W) = W^* induced by the linear part
    /// of the anchor: e_a ↦ B_a^T, where X_a = Σ B_a[i][j] w_j ∂_i + O(w^2).
    [[nodiscard]] Representation normal_rep() const;

private:
    std::size_t rank_;
    std::size_t base_dim_;
    unsigned order_;
    std::vector<std::vector<Polynomial>> anchor_;
    std::vector<Polynomial> structure_;
};

/// Antisymmetry of c, anchor compatibility [X_a, X_b] = Σ c_ab^d X_d and
/// Jacobi, all modulo terms of degree > order. site = {a, b, d} or {a, b, c}.
Verdict check_axioms_mod(const PolyJetAlgebroid& a);

struct JetInstance {
    PolyJetAlgebroid algebroid;
    Representation v;
    FilteredComplex filtered;
    std::shared_ptr<const SpectralSequence> engine;

    [[nodiscard]] const SpectralSequence& ss() const { return *engine; }
    [[nodiscard]] const CochainComplex& complex() const { return filtered.complex(); }
};

/// Module Pol^{≤k}(W) ⊗ V: index (monomial) * dim V + v.
MonomialBasis jet_monomials(const PolyJetAlgebroid& a);

/// Throws PreconditionError if the axioms fail mod I^{k+1} or if V does not fit
/// the fiber algebra, and StructuralError if the resulting d does not square to zero.
JetInstance jet_complex(const PolyJetAlgebroid& a, const Representation& v);
JetInstance jet_complex(const PolyJetAlgebroid& a);

struct JetE1Cell {
    int p = 0;
    int q = 0;
    std::size_t engine_dim = 0;
    std::size_t oracle_dim = 0;
    bool ok = false;
};

struct JetE1Report {
    std::vector<JetE1Cell> cells;
    Verdict verdict;
};

/// E_1^{p,q} against H^{p+q}(g_0, S^p W^* ⊗ V) for p <= k, and 0 for p = k + 1.
JetE1Report e1_invariant_check(const JetInstance& inst);

/// dim H^n(g_0, S^j W^* ⊗ V).
std::size_t sym_cohomology_dim(const PolyJetAlgebroid& a, const Representation& v, std::size_t j, int n);

struct LinearisableReport {
    /// First nonzero d_r (r >= 1) if any: (r, p, q, rank).
    std::vector<std::tuple<int, int, int, std::size_t>> nonzero_differentials;
    std::vector<std::size_t> betti;
    std::vector<std::size_t> product_formula;  // Σ_j dim H^n(g_0, S^j W^* ⊗ V)
    bool degree_preserving = false;
    Verdict verdict;
};

/// d_r = 0 for r >= 1 and H^•(J^k) = Σ_j H^•(g_0, S^j W^* ⊗ V).
/// Throws PreconditionError unless the algebroid is linear.
LinearisableReport linearisable_stabilization_check(const JetInstance& inst);
/// Same quantities without the linearity precondition; the verdict reports
/// the first nonzero d_r instead of asserting.
LinearisableReport stabilization_report(const JetInstance& inst);

/// m_λ^* (degree-j coordinates scaled by λ^j) commutes with d in every degree.
Verdict scalar_pullback_check(const JetInstance& inst, const Scalar& lambda);

}  // namespace lass
