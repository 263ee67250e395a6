#pragma once

// Abelian extensions 0 -> l -> g -> B -> 0, their curvature and extension
// class, and the comparison of the second Hochschild–Serre differential with
// contraction by the curvature.
//
// B is g/l in the coordinates of the standard complement of l (see
// quotient_lie_algebra). l-valued forms on B are cochains of
// ce_complex(B, nabla()) with index I * dim l + c.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lass/ce.hpp"
#include "lass/serre.hpp"

namespace lass {

class AbelianExtension {
public:
    /// Throws PreconditionError unless l is an abelian ideal acting by zero on V,
    /// and StructuralError unless `splitting` (dim g x dim B) satisfies Π∘σ = id.
    /// Without a splitting, σ maps b_j to the j-th complement vector of l.
    AbelianExtension(Subalgebra l, Representation v, std::optional<Matrix> splitting = std::nullopt);
    explicit AbelianExtension(Subalgebra l);

    [[nodiscard]] const LieAlgebra& g() const { return l_.parent(); }
    [[nodiscard]] const Subalgebra& l() const { return l_; }
    [[nodiscard]] const LieAlgebra& base() const { return base_; }
    [[nodiscard]] const Representation& v() const { return v_; }
    [[nodiscard]] const Matrix& splitting() const { return sigma_; }
    /// Projection g -> B.
    [[nodiscard]] Matrix projection() const;

    /// ∇^L_b = [σb, ·] on l, a representation of B.
    [[nodiscard]] Representation nabla() const;
    /// Same extension with σ replaced by σ + λ; λ is dim l x dim B in l-coordinates.
    [[nodiscard]] AbelianExtension shifted(const Matrix& lambda) const;

private:
    Subalgebra l_;
    Representation v_;
    LieAlgebra base_;
    Matrix sigma_;
};

/// γ(b_i, b_j) = [σb_i, σb_j] - σ[b_i, b_j] as a 2-cochain of ce_complex(B, ∇^L).
Vector curvature(const AbelianExtension& ext);
/// γ(b_i, b_j) in l-coordinates.
Vector curvature_value(const AbelianExtension& ext, std::size_t i, std::size_t j);
/// Antisymmetry holds by construction; checks d_B γ = 0.
Verdict check_curvature_closed(const AbelianExtension& ext);

struct ExtensionClass {
    QuotientSpace h2;     // H^2(B, l)
    Vector coordinates;   // [γ] in h2
    /// λ with d_B λ = γ when the class vanishes (σ - λ is then flat).
    std::optional<Vector> primitive;
    [[nodiscard]] bool is_zero() const { return primitive.has_value(); }
};
ExtensionClass extension_class(const AbelianExtension& ext);

/// Representation of B on Ω^q(l, V) = ∧^q l^* ⊗ V (index Q * dim V + a).
Representation fiber_rep(const AbelianExtension& ext, int q);

/// Cochain-level i_γ : Ω^p(B, Ω^q(l,V)) -> Ω^{p+2}(B, Ω^{q-1}(l,V)) between
/// ce_complex(B, fiber_rep(q)) and ce_complex(B, fiber_rep(q-1)).
///
///   (i_γ ω)(b_1..b_{p+2}) = Σ_{i<j} (-1)^{i+j-1} ι_{γ(b_i,b_j)} ω(b_1..b̂_i..b̂_j..b_{p+2})
///
/// with ι inserting into the first l-slot. Zero for q = 0.
Matrix contract_igamma(const AbelianExtension& ext, int p, int q);

/// d_B ∘ i_γ = ε · i_γ ∘ d_B with ε = contraction_parity(); checked on every (p, q).
Verdict check_contraction_chain_map(const AbelianExtension& ext);
/// +1: i_γ commutes with d_B; -1: it anticommutes.
int contraction_parity();

/// Global sign c in  d_2 = c · (-1)^p i_[γ]  for the transport used by d2_check.
int d2_sign();

struct D2Comparison {
    int p = 0;
    int q = 0;
    Matrix engine;   // d_2 transported to H^p(B, Ω^q) -> H^{p+2}(B, Ω^{q-1})
    Matrix oracle;   // c (-1)^p [i_γ]
    std::size_t engine_rank = 0;
    std::size_t oracle_rank = 0;
    bool equal = false;
    Verdict verdict;
};

/// Transport E_2^{p,q} -> H^p(B, Ω^q(l,V)) by evaluating a representative on
/// (σb_P, l_Q) and projecting; a square invertible matrix when the identification holds.
Matrix e2_transport(const AbelianExtension& ext, const HSInstance& inst, int p, int q);

/// Compares engine d_2 with the contraction oracle at every (p, q) of the window.
std::vector<D2Comparison> d2_check(const AbelianExtension& ext);

}  // namespace lass
