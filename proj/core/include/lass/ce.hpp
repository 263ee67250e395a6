#pragma once

// Finite-dimensional Lie algebras over Q, their representations, and the
// Chevalley–Eilenberg complex.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lass/cochain.hpp"
#include "lass/exactq.hpp"
#include "lass/verdict.hpp"

namespace lass {

/// Lie algebra given by structure constants [e_i, e_j] = Σ_k c_ij^k e_k.
///
/// The constructor does not enforce antisymmetry or Jacobi; use
/// check_antisymmetry / check_jacobi so malformed input can be reported.
class LieAlgebra {
public:
    LieAlgebra() = default;
    /// `brackets[i * dim + j]` is the coefficient vector of [e_i, e_j].
    LieAlgebra(std::size_t dim, std::vector<Vector> brackets, std::vector<std::string> labels = {});

    static LieAlgebra abelian(std::size_t dim);

    struct BracketEntry {
        std::size_t i;
        std::size_t j;
        Vector coeffs;
    };
    /// Builds from listed pairs; an unlisted (j, i) is filled with -[e_i, e_j],
    /// other unlisted pairs are zero.
    static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketEntry>& entries,
                                    std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Vector& structure(std::size_t i, std::size_t j) const { return brackets_[i * dim_ + j]; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] Vector bracket(const Vector& u, const Vector& v) const;
    /// Matrix of ad(e_i).
    [[nodiscard]] Matrix ad(std::size_t i) const;
    /// Same algebra in the basis given by the columns of an invertible matrix.
    [[nodiscard]] LieAlgebra change_basis(const Matrix& new_basis) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Vector> brackets_;
    std::vector<std::string> labels_;
};

/// Representation on Q^dim: one matrix per Lie algebra basis vector.
class Representation {
public:
    Representation() = default;
    Representation(std::size_t dim, std::vector<Matrix> matrices, std::vector<std::string> labels = {});

    static Representation trivial(const LieAlgebra& g, std::size_t dim = 1);
    /// ρ(e_i) = ad(e_i).
    static Representation adjoint(const LieAlgebra& g);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t generators() const { return matrices_.size(); }
    [[nodiscard]] const Matrix& action(std::size_t i) const { return matrices_.at(i); }
    [[nodiscard]] const std::vector<Matrix>& matrices() const { return matrices_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    /// ρ(Σ x_i e_i).
    [[nodiscard]] Matrix act(const Vector& x) const;
    /// Conjugate every matrix by an invertible change of basis P: P^{-1} ρ P.
    [[nodiscard]] Representation conjugate(const Matrix& p) const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Matrix> matrices_;
    std::vector<std::string> labels_;
};

/// site = {i, j, k} of the first violated c_ij^k = -c_ji^k.
Verdict check_antisymmetry(const LieAlgebra& g);
/// site = {i, j, k} of the first basis triple violating Jacobi.
Verdict check_jacobi(const LieAlgebra& g);
/// ρ([e_i, e_j]) = [ρ_i, ρ_j]; site = {i, j}.
Verdict check_flat(const LieAlgebra& g, const Representation& v);

/// A subspace of g, closed under the bracket.
class Subalgebra {
public:
    /// Throws PreconditionError if the span is not closed under the bracket.
    Subalgebra(LieAlgebra parent, const Matrix& spanning);
    /// No closure check; used to build negative controls.
    static Subalgebra unchecked(LieAlgebra parent, const Matrix& spanning);

    [[nodiscard]] const LieAlgebra& parent() const { return parent_; }
    [[nodiscard]] const Subspace& span() const { return span_; }
    [[nodiscard]] std::size_t dim() const { return span_.dim(); }
    [[nodiscard]] std::size_t codim() const { return parent_.dim() - span_.dim(); }
    /// Columns: the echelon basis of the subalgebra, then the standard basis
    /// vectors at the non-pivot coordinates (the complement).
    [[nodiscard]] const Matrix& adapted_basis() const { return adapted_; }
    [[nodiscard]] const Matrix& adapted_inverse() const { return adapted_inverse_; }
    [[nodiscard]] Vector basis_vector(std::size_t i) const { return adapted_.column(i); }
    [[nodiscard]] Vector complement_vector(std::size_t j) const { return adapted_.column(dim() + j); }
    /// Coordinates in the adapted basis.
    [[nodiscard]] Vector adapted_coordinates(const Vector& x) const { return adapted_inverse_ * x; }
    [[nodiscard]] bool is_closed() const;
    [[nodiscard]] bool is_ideal() const;
    [[nodiscard]] std::vector<std::string> labels() const;
    [[nodiscard]] std::vector<std::string> complement_labels() const;

private:
    Subalgebra(LieAlgebra parent, const Matrix& spanning, bool check);

    LieAlgebra parent_;
    Subspace span_;
    Matrix adapted_;
    Matrix adapted_inverse_;
};

/// Generic Koszul differential on ∧^• (Q^rank)^* ⊗ M.
///
/// `action[a]` is the operator by which generator a acts on M, and
/// `bracket[a * rank + b]` lists (d, op) with [e_a, e_b] = Σ op · e_d, where op
/// is an operator on M (a scalar multiple of the identity for Lie algebras,
/// multiplication by a structure function for algebroid jets).
struct KoszulData {
    std::size_t rank = 0;
    std::size_t module_dim = 0;
    std::vector<Matrix> action;
    std::vector<std::vector<std::pair<std::size_t, Matrix>>> bracket;
    std::vector<std::string> generator_labels;
    std::vector<std::string> module_labels;
};
CochainComplex koszul_complex(const KoszulData& data);

/// Chevalley–Eilenberg complex ∧^• g^* ⊗ V. Throws PreconditionError if the
/// representation has the wrong shape or is not flat.
CochainComplex ce_complex(const LieAlgebra& g, const Representation& v);
CochainComplex ce_complex(const LieAlgebra& g);

Representation dual_rep(const Representation& v);
Representation exterior_power_rep(const Representation& v, std::size_t p);
Representation sym_power_rep(const Representation& v, std::size_t p);
Representation tensor_rep(const Representation& v, const Representation& w);

/// Lie algebra structure of h in its echelon basis.
LieAlgebra subalgebra_lie_algebra(const Subalgebra& h);
/// V restricted to h (matrices of the echelon basis vectors).
Representation restrict_rep(const Representation& v, const Subalgebra& h);
/// g/h in the coordinates of the complement. Throws PreconditionError unless h is an ideal.
LieAlgebra quotient_lie_algebra(const Subalgebra& h);
/// ∇_β ᾱ = [β, α] mod h on g/h, as a representation of subalgebra_lie_algebra(h).
Representation bott_rep(const Subalgebra& h);

}  // namespace lass
