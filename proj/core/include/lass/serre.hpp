#pragma once

// Hochschild–Serre filtration of a Lie subalgebra h ⊂ g and the
// identifications of its first and second pages.
//
// Throughout, the adapted basis of g is (h_1..h_s, c_1..c_t): the echelon basis
// of h followed by the standard complement. Its dual basis (φ_1..φ_s, ψ_1..ψ_t)
// has ψ spanning the annihilator h°, and
//
//   F^p C^n = span{ φ_I ∧ ψ_P ⊗ v : |P| >= p }.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lass/ce.hpp"
#include "lass/cochain.hpp"
#include "lass/spectral.hpp"

namespace lass {

struct HSInstance {
    Subalgebra h;
    Representation v;
    FilteredComplex filtered;
    std::shared_ptr<const SpectralSequence> engine;

    [[nodiscard]] const LieAlgebra& g() const { return h.parent(); }
    [[nodiscard]] const SpectralSequence& ss() const { return *engine; }
};

/// Throws PreconditionError if h is not closed under the bracket or V is not a flat g-representation.
HSInstance hs_filtration(const Subalgebra& h, const Representation& v);
HSInstance hs_filtration(const Subalgebra& h);
/// Same construction without the closure check (negative controls only).
HSInstance hs_filtration_unchecked(const Subalgebra& h, const Representation& v);

/// Evaluation of degree-n forms on the adapted basis: maps ξ-coordinates of
/// ∧^n g^* ⊗ V to coordinates in the adapted dual monomials φ_I ∧ ψ_P ⊗ v,
/// where the adapted monomials are ordered as the n-subsets of {0..dim g - 1}
/// (indices < s are φ's, indices >= s are ψ's).
Matrix adapted_evaluation(const Subalgebra& h, std::size_t module_dim, std::size_t n);

/// pr : F^p C^{p+q} -> Ω^q(h, ∧^p(g/h)^* ⊗ V) on all of C^{p+q}, as a matrix into
/// the basis ξ^h_I ⊗ ψ_P ⊗ v_b with index (I * C(t,p) + P) * dim V + b.
Matrix pr_map(const Subalgebra& h, std::size_t module_dim, int p, int q);

/// pr restricted to E_0^{p,q} in the engine's representative coordinates.
Matrix e0_pr_map(const HSInstance& inst, int p, int q);

/// Representation of h on ∧^p(g/h)^* ⊗ V|_h (the coefficients of E_1^{p,•}).
Representation e1_coefficients(const HSInstance& inst, int p);

struct Identification {
    int p = 0;
    int q = 0;
    std::size_t engine_dim = 0;
    std::size_t oracle_dim = 0;
    Verdict verdict;
};

/// pr is invertible on E_0 and intertwines d_0 with the Chevalley–Eilenberg
/// differential of h with coefficients e1_coefficients(p).
Verdict e0_check(const HSInstance& inst, int p, int q);

/// E_1^{p,q} against H^q(h, ∧^p(g/h)^* ⊗ V); the verdict also requires pr to
/// descend to an isomorphism on E_1.
Identification e1_identification(const HSInstance& inst, int p, int q);

/// Representation of g/h on H^q(h, V|_h), for h an ideal.
struct InducedRep {
    LieAlgebra quotient;
    QuotientSpace cohomology;  // H^q(h, V|_h) inside ∧^q h^* ⊗ V
    Representation rep;
};

/// ∇_β [η] = [i^*(i_β̃ d η̃)] with η̃ the extension of η by zero on monomials
/// containing a ψ factor and β̃ the complement lift. With `randomize_seed`
/// the extension and the lift are shifted by random admissible terms instead.
/// Throws PreconditionError unless h is an ideal.
InducedRep induced_rep_on_H(const Subalgebra& h, const Representation& v, int q,
                            std::optional<std::uint64_t> randomize_seed = std::nullopt);

/// E_2^{p,q} against H^p(g/h, H^q(h, V)), h an ideal.
Identification e2_identification(const HSInstance& inst, int p, int q);

/// Full-window runs of the identifications (every p, q with p + q in range).
std::vector<Identification> e1_table(const HSInstance& inst);
std::vector<Identification> e2_table(const HSInstance& inst);

}  // namespace lass
