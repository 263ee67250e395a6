#pragma once

// Spectral sequence of a finitely filtered cochain complex.
//
//   Z_r^{p,q} = F^p C^{p+q} ∩ d^{-1}(F^{p+r} C^{p+q+1}),   Z_{-1}^{p,q} = F^p C^{p+q}
//   E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2})
//   d_r : E_r^{p,q} -> E_r^{p+r,q-r+1}
//
// Every page is computed from this closed form; the cohomology of the previous
// page is only used as a cross-check (turn_page_check).

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "lass/cochain.hpp"
#include "lass/exactq.hpp"
#include "lass/verdict.hpp"

namespace lass {

struct PageEntry {
    int p = 0;
    int q = 0;
    QuotientSpace space;
};

struct PageDifferential {
    int p = 0;  // source (p, q)
    int q = 0;
    int r = 0;
    Matrix matrix;  // dim E_r^{p+r,q-r+1} x dim E_r^{p,q}
    std::size_t rank = 0;
};

/// Dimensions of one page over the window 0 <= p <= max_p, 0 <= p+q <= top.
struct PageTable {
    int r = 0;
    int max_p = 0;
    int top = 0;
    /// dims[p][n] = dim E_r^{p, n-p}.
    std::vector<std::vector<std::size_t>> dims;
    /// Nonzero differentials only.
    std::vector<std::tuple<int, int, std::size_t>> ranks;  // (p, q, rank)

    [[nodiscard]] std::size_t dim(int p, int q) const;
    [[nodiscard]] std::size_t rank_from(int p, int q) const;
    friend bool operator==(const PageTable&, const PageTable&) = default;
};

struct Page {
    int r = 0;
    std::vector<PageEntry> entries;  // every cell of the window, including zero-dimensional ones
    std::vector<PageDifferential> differentials;  // every source cell with a nonzero source
    [[nodiscard]] PageTable table(int max_p, int top) const;
};

struct Stabilization {
    int page = 1;  // smallest r* >= 1 with d_s = 0 for all s >= r*
    std::vector<PageTable> tables;  // pages 0..page
};

class SpectralSequence {
public:
    explicit SpectralSequence(FilteredComplex filtered);

    [[nodiscard]] const FilteredComplex& filtered() const { return filtered_; }
    [[nodiscard]] int max_p() const { return filtered_.length(); }
    [[nodiscard]] int top() const { return filtered_.top(); }
    /// Pages r > max_p() + 1 add nothing: d_r vanishes for r > max_p().
    [[nodiscard]] int last_page() const { return max_p() + 1; }

    /// Z_r^{p,q}; r >= -1.
    [[nodiscard]] Subspace z_space(int r, int p, int q) const;
    /// Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}; r >= 0.
    [[nodiscard]] Subspace b_space(int r, int p, int q) const;
    [[nodiscard]] const QuotientSpace& e_entry(int r, int p, int q) const;
    [[nodiscard]] std::size_t dim(int r, int p, int q) const { return e_entry(r, p, q).dim(); }

    /// Matrix of d_r : E_r^{p,q} -> E_r^{p+r,q-r+1} in representative coordinates.
    /// r = 0 gives the degree-internal differential E_0^{p,q} -> E_0^{p,q+1}.
    /// Throws ConsistencyError if a representative's image leaves Z_r^{p+r,q-r+1}.
    [[nodiscard]] Matrix d_matrix(int r, int p, int q) const;
    /// Same map computed from explicitly supplied source representatives
    /// (ambient vectors in Z_r^{p,q}).
    [[nodiscard]] Matrix d_matrix_from(int r, int p, int q, const Matrix& representatives) const;

    [[nodiscard]] Page page(int r) const;
    [[nodiscard]] PageTable table(int r) const;

    /// dim E_{r+1} from the closed form equals the cohomology of (E_r, d_r) at every cell.
    [[nodiscard]] Verdict turn_page_check(int r) const;
    /// d_r ∘ d_r = 0 on every cell.
    [[nodiscard]] Verdict d_squared_check(int r) const;
    /// d_r computed from representatives shifted by random denominator elements agrees.
    [[nodiscard]] Verdict well_definedness_check(int r, std::uint64_t seed) const;

    [[nodiscard]] Stabilization stabilization() const;
    /// E_∞^{p,n-p} = gr^p H^n for every cell, with E_∞ = E_{last_page()}.
    [[nodiscard]] Verdict convergence_check() const;

private:
    using Key = std::tuple<int, int, int>;  // (r, p, total degree)

    FilteredComplex filtered_;
    mutable std::shared_mutex mutex_;
    mutable std::map<Key, std::shared_ptr<const Subspace>> z_memo_;
    mutable std::map<Key, std::shared_ptr<const QuotientSpace>> e_memo_;
};

// Free-function forms over a filtered complex.
Subspace z_space(const FilteredComplex& f, int r, int p, int q);
PageEntry e_entry(const FilteredComplex& f, int r, int p, int q);
Matrix d_r_matrix(const FilteredComplex& f, int r, int p, int q);
Page page(const FilteredComplex& f, int r);
Verdict turn_page_check(const FilteredComplex& f, int r);
Stabilization stabilization(const FilteredComplex& f);
Verdict convergence_check(const FilteredComplex& f);

/// ASCII grid: rows q descending, columns p ascending, followed by one line per
/// nonzero differential "(p,q)->(p+r,q-r+1): rank".
std::string render_grid(const PageTable& table);

}  // namespace lass
