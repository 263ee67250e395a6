#pragma once

// Finite cochain complexes over Q and their descending filtrations.

#include <cstddef>
#include <string>
#include <vector>

#include "lass/exactq.hpp"
#include "lass/verdict.hpp"

namespace lass {

/// Degrees 0..top() with a dimension and human-readable basis labels per degree.
/// Degrees outside the window are zero.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<std::size_t> dims);
    GradedSpace(std::vector<std::size_t> dims, std::vector<std::vector<std::string>> labels);

    [[nodiscard]] int top() const { return static_cast<int>(dims_.size()) - 1; }
    [[nodiscard]] std::size_t dim(int n) const;
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
    /// Labels of degree n; empty outside the window.
    [[nodiscard]] const std::vector<std::string>& labels(int n) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::string>> labels_;
};

/// Cochain complex on degrees 0..top() with d_n : C^n -> C^{n+1}.
class CochainComplex {
public:
    CochainComplex() = default;
    /// `differentials[n]` is d_n for n = 0..top()-1 (a dim(n+1) x dim(n) matrix).
    /// Throws StructuralError on a shape mismatch.
    CochainComplex(GradedSpace spaces, std::vector<Matrix> differentials);

    [[nodiscard]] const GradedSpace& spaces() const { return spaces_; }
    [[nodiscard]] int top() const { return spaces_.top(); }
    [[nodiscard]] std::size_t dim(int n) const { return spaces_.dim(n); }
    /// d_n, a zero matrix of the right shape outside the window.
    [[nodiscard]] Matrix differential(int n) const;

private:
    GradedSpace spaces_;
    std::vector<Matrix> differentials_;
};

/// Passes iff d_{n+1} d_n = 0 for all n; site = {first violating n}.
Verdict check_complex(const CochainComplex& c);

/// H^n = ker d_n / im d_{n-1}. Throws StructuralError if d_n d_{n-1} != 0.
QuotientSpace cohomology(const CochainComplex& c, int n);
std::vector<std::size_t> betti_numbers(const CochainComplex& c);
/// Σ (-1)^n dim C^n.
long euler_characteristic(const CochainComplex& c);

/// A cochain complex with a descending filtration F^0 = C ⊇ F^1 ⊇ ... by subcomplexes.
///
/// F^p for p <= 0 is the whole space; F^p past the stored steps is zero.
class FilteredComplex {
public:
    FilteredComplex() = default;
    /// `steps[n][p]` is F^p C^n for p = 0..steps[n].size()-1.
    FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> steps);

    /// Filtration where F^p C^n = C^n for p <= 0 and 0 for p >= 1.
    static FilteredComplex trivial(CochainComplex complex);

    [[nodiscard]] const CochainComplex& complex() const { return complex_; }
    [[nodiscard]] int top() const { return complex_.top(); }
    [[nodiscard]] Subspace step(int p, int n) const;
    /// Largest p with F^p nonzero in some degree (0 for the trivial filtration).
    [[nodiscard]] int length() const { return length_; }
    [[nodiscard]] const std::vector<std::vector<Subspace>>& steps() const { return steps_; }

private:
    CochainComplex complex_;
    std::vector<std::vector<Subspace>> steps_;
    int length_ = 0;
};

/// Checks F^0 = C, nesting F^{p+1} ⊆ F^p and d(F^p C^n) ⊆ F^p C^{n+1};
/// site = {p, n} of the first violation.
Verdict check_filtration(const FilteredComplex& f);

/// dim F^p H^n for p = 0..length()+1, where F^p H^n is the image of H^n(F^p C) in H^n(C).
std::vector<std::size_t> induced_filtration_on_H(const FilteredComplex& f, int n);

}  // namespace lass
