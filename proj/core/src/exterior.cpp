#include "lass/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace lass {

namespace {

std::uint64_t mask_of(const MultiIndex& idx) {
    std::uint64_t m = 0;
    for (auto i : idx) m |= std::uint64_t{1} << i;
    return m;
}

}  // namespace

int sort_with_sign(MultiIndex& idx) {
    int sign = 1;
    // Insertion sort; index lists are short.
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i - 1] == idx[i]) return 0;
    return sign;
}

std::vector<MultiIndex> subsets(std::size_t n, std::size_t k) {
    std::vector<MultiIndex> out;
    if (k > n) return out;
    MultiIndex cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ExteriorBasis::ExteriorBasis(std::size_t n) : n_(n) {
    if (n >= 64) throw std::invalid_argument("ExteriorBasis: rank too large");
    for (std::size_t k = 0; k <= n; ++k) {
        by_degree_.push_back(subsets(n, k));
        const auto& list = by_degree_.back();
        for (std::size_t i = 0; i < list.size(); ++i) position_.emplace(mask_of(list[i]), i);
    }
}

std::size_t ExteriorBasis::index_of(const MultiIndex& sorted) const {
    const auto it = position_.find(mask_of(sorted));
    if (it == position_.end()) throw std::out_of_range("ExteriorBasis::index_of: unknown multi-index");
    return it->second;
}

Matrix exterior_power_matrix(const Matrix& m, std::size_t k) {
    const auto rows = subsets(m.rows(), k);
    const auto cols = subsets(m.cols(), k);
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Matrix r = m.select_rows(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = determinant(r.select_columns(cols[j]));
    }
    return out;
}

MultiIndex remove_positions(const MultiIndex& idx, std::span<const std::size_t> drop) {
    MultiIndex out;
    out.reserve(idx.size());
    std::size_t d = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (d < drop.size() && drop[d] == i) {
            ++d;
            continue;
        }
        out.push_back(idx[i]);
    }
    return out;
}

}  // namespace lass
