#pragma once

// Multi-index conventions for exterior powers, shared by every module.
//
// A basis element of ∧^k of an n-dimensional space is a strictly increasing
// index list; lists of one degree are ordered lexicographically. A covector
// monomial ξ_I evaluates to sign(σ) on (e_{I_σ(1)}, ..., e_{I_σ(k)}) and to 0
// on lists that are not a permutation of I.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "lass/exactq.hpp"

namespace lass {

using MultiIndex = std::vector<std::size_t>;

/// Sorts `idx` in place and returns the sign of the sorting permutation, or 0
/// if an index repeats.
int sort_with_sign(MultiIndex& idx);

/// All strictly increasing k-subsets of {0, ..., n-1}, lexicographic.
std::vector<MultiIndex> subsets(std::size_t n, std::size_t k);

std::size_t binomial(std::size_t n, std::size_t k);

/// Lookup tables for ∧^k of an n-dimensional space, k = 0..n.
class ExteriorBasis {
public:
    explicit ExteriorBasis(std::size_t n);

    [[nodiscard]] std::size_t rank() const { return n_; }
    [[nodiscard]] std::size_t dim(std::size_t k) const { return k <= n_ ? by_degree_[k].size() : 0; }
    [[nodiscard]] const std::vector<MultiIndex>& elements(std::size_t k) const { return by_degree_.at(k); }
    [[nodiscard]] const MultiIndex& element(std::size_t k, std::size_t i) const { return by_degree_.at(k).at(i); }
    /// Position of a sorted multi-index within its degree.
    [[nodiscard]] std::size_t index_of(const MultiIndex& sorted) const;

private:
    std::size_t n_;
    std::vector<std::vector<MultiIndex>> by_degree_;
    std::unordered_map<std::uint64_t, std::size_t> position_;
};

/// Induced map on k-th exterior powers: entry (I, J) = det(m[I, J]) over
/// lexicographically ordered k-subsets of rows I and columns J.
Matrix exterior_power_matrix(const Matrix& m, std::size_t k);

/// I with the entries at positions `drop` (sorted ascending) removed.
MultiIndex remove_positions(const MultiIndex& idx, std::span<const std::size_t> drop);

}  // namespace lass
