#include "lass/spectral.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "lass/parallel.hpp"

namespace lass {

std::size_t PageTable::dim(int p, int q) const {
    const int n = p + q;
    if (p < 0 || p > max_p || n < 0 || n > top) return 0;
    return dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)];
}

std::size_t PageTable::rank_from(int p, int q) const {
    for (const auto& [sp, sq, rk] : ranks)
        if (sp == p && sq == q) return rk;
    return 0;
}

PageTable Page::table(int max_p, int top) const {
    PageTable t;
    t.r = r;
    t.max_p = max_p;
    t.top = top;
    t.dims.assign(static_cast<std::size_t>(max_p + 1), std::vector<std::size_t>(static_cast<std::size_t>(top + 1), 0));
    for (const auto& e : entries) {
        const int n = e.p + e.q;
        if (e.p >= 0 && e.p <= max_p && n >= 0 && n <= top)
            t.dims[static_cast<std::size_t>(e.p)][static_cast<std::size_t>(n)] = e.space.dim();
    }
    for (const auto& d : differentials)
        if (d.rank > 0) t.ranks.emplace_back(d.p, d.q, d.rank);
    return t;
}

SpectralSequence::SpectralSequence(FilteredComplex filtered) : filtered_(std::move(filtered)) {}

Subspace SpectralSequence::z_space(int r, int p, int q) const {
    const int n = p + q;
    const Key key{std::max(r, -1), p, n};
    {
        std::shared_lock lock(mutex_);
        if (auto it = z_memo_.find(key); it != z_memo_.end()) return *it->second;
    }
    Subspace z;
    const Subspace fp = filtered_.step(p, n);
    if (r < 0 || fp.dim() == 0) {
        z = fp;
    } else {
        const Matrix d = filtered_.complex().differential(n);
        z = intersect(fp, preimage(d, filtered_.step(p + r, n + 1)));
    }
    std::unique_lock lock(mutex_);
    return *z_memo_.try_emplace(key, std::make_shared<const Subspace>(std::move(z))).first->second;
}

Subspace SpectralSequence::b_space(int r, int p, int q) const {
    const int n = p + q;
    const Subspace lower = z_space(r - 1, p + 1, q - 1);
    const Subspace source = z_space(r - 1, p - r + 1, q + r - 2);
    if (source.dim() == 0) return lower;
    return sum(lower, image(filtered_.complex().differential(n - 1), source));
}

const QuotientSpace& SpectralSequence::e_entry(int r, int p, int q) const {
    const Key key{r, p, p + q};
    {
        std::shared_lock lock(mutex_);
        if (auto it = e_memo_.find(key); it != e_memo_.end()) return *it->second;
    }
    auto entry = std::make_shared<const QuotientSpace>(z_space(r, p, q), b_space(r, p, q));
    std::unique_lock lock(mutex_);
    return *e_memo_.try_emplace(key, std::move(entry)).first->second;
}

Matrix SpectralSequence::d_matrix_from(int r, int p, int q, const Matrix& representatives) const {
    const int n = p + q;
    const QuotientSpace& target = e_entry(r, p + r, q - r + 1);
    const Matrix d = filtered_.complex().differential(n);
    Matrix out(target.dim(), representatives.cols());
    for (std::size_t j = 0; j < representatives.cols(); ++j) {
        const Vector image_vec = d * representatives.column(j);
        if (!target.numerator().contains(image_vec)) {
            throw ConsistencyError("d_" + std::to_string(r) + " image of a representative at (" + std::to_string(p) + "," +
                                   std::to_string(q) + ") leaves Z_r^{" + std::to_string(p + r) + "," +
                                   std::to_string(q - r + 1) + "}");
        }
        out.set_column(j, target.project(image_vec));
    }
    return out;
}

Matrix SpectralSequence::d_matrix(int r, int p, int q) const {
    return d_matrix_from(r, p, q, e_entry(r, p, q).representatives());
}

Page SpectralSequence::page(int r) const {
    std::vector<std::pair<int, int>> cells;
    for (int p = 0; p <= max_p(); ++p)
        for (int n = 0; n <= top(); ++n) cells.emplace_back(p, n);

    Page out;
    out.r = r;
    out.entries.resize(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto [p, n] = cells[i];
        out.entries[i] = PageEntry{p, n - p, e_entry(r, p, n - p)};
    });
    std::vector<std::optional<PageDifferential>> diffs(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto [p, n] = cells[i];
        if (out.entries[i].space.dim() == 0) return;
        Matrix m = d_matrix(r, p, n - p);
        const std::size_t rk = rank(m);
        diffs[i] = PageDifferential{p, n - p, r, std::move(m), rk};
    });
    for (auto& d : diffs)
        if (d) out.differentials.push_back(std::move(*d));
    return out;
}

PageTable SpectralSequence::table(int r) const { return page(r).table(max_p(), top()); }

Verdict SpectralSequence::turn_page_check(int r) const {
    const PageTable cur = table(r);
    for (int p = 0; p <= max_p(); ++p) {
        for (int n = 0; n <= top(); ++n) {
            const int q = n - p;
            const std::size_t cohom = cur.dim(p, q) - cur.rank_from(p, q) - cur.rank_from(p - r, q + r - 1);
            const std::size_t next = dim(r + 1, p, q);
            if (cohom != next) {
                return Verdict::fail("E_" + std::to_string(r + 1) + "^{" + std::to_string(p) + "," + std::to_string(q) +
                                         "} has dim " + std::to_string(next) + " but H(E_" + std::to_string(r) +
                                         ", d_" + std::to_string(r) + ") has dim " + std::to_string(cohom),
                                     {r, p, q});
            }
        }
    }
    return Verdict::pass();
}

Verdict SpectralSequence::d_squared_check(int r) const {
    for (int p = 0; p <= max_p(); ++p) {
        for (int n = 0; n <= top(); ++n) {
            const int q = n - p;
            if (dim(r, p, q) == 0) continue;
            const Matrix first = d_matrix(r, p, q);
            const Matrix second = d_matrix(r, p + r, q - r + 1);
            if (!(second * first).is_zero())
                return Verdict::fail("d_r d_r != 0 starting at (" + std::to_string(p) + "," + std::to_string(q) + ")", {r, p, q});
        }
    }
    return Verdict::pass();
}

Verdict SpectralSequence::well_definedness_check(int r, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int p = 0; p <= max_p(); ++p) {
        for (int n = 0; n <= top(); ++n) {
            const int q = n - p;
            const QuotientSpace& e = e_entry(r, p, q);
            if (e.dim() == 0) continue;
            Matrix shifted = e.representatives();
            const Matrix& den = e.denominator().basis();
            for (std::size_t j = 0; j < shifted.cols(); ++j)
                for (std::size_t k = 0; k < den.cols(); ++k) {
                    const Scalar c = coeff(rng);
                    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, j) += c * den(i, k);
                }
            if (d_matrix_from(r, p, q, shifted) != d_matrix(r, p, q))
                return Verdict::fail("d_r depends on the representative choice at (" + std::to_string(p) + "," +
                                         std::to_string(q) + ")",
                                     {r, p, q});
        }
    }
    return Verdict::pass();
}

Stabilization SpectralSequence::stabilization() const {
    Stabilization out;
    int last_nonzero = 0;
    std::vector<PageTable> tables;
    for (int r = 0; r <= last_page(); ++r) {
        tables.push_back(table(r));
        if (r >= 1 && !tables.back().ranks.empty()) last_nonzero = r;
    }
    out.page = last_nonzero + 1;
    tables.resize(static_cast<std::size_t>(out.page + 1));
    out.tables = std::move(tables);
    return out;
}

Verdict SpectralSequence::convergence_check() const {
    const int inf = last_page();
    for (int n = 0; n <= top(); ++n) {
        const auto graded = induced_filtration_on_H(filtered_, n);
        for (int p = 0; p <= max_p(); ++p) {
            const std::size_t expect = graded[static_cast<std::size_t>(p)] - graded[static_cast<std::size_t>(p + 1)];
            const std::size_t got = dim(inf, p, n - p);
            if (expect != got)
                return Verdict::fail("E_inf^{" + std::to_string(p) + "," + std::to_string(n - p) + "} has dim " +
                                         std::to_string(got) + " but gr^" + std::to_string(p) + " H^" + std::to_string(n) +
                                         " has dim " + std::to_string(expect),
                                     {p, n - p});
        }
    }
    return Verdict::pass();
}

Subspace z_space(const FilteredComplex& f, int r, int p, int q) { return SpectralSequence(f).z_space(r, p, q); }

PageEntry e_entry(const FilteredComplex& f, int r, int p, int q) {
    return PageEntry{p, q, SpectralSequence(f).e_entry(r, p, q)};
}

Matrix d_r_matrix(const FilteredComplex& f, int r, int p, int q) { return SpectralSequence(f).d_matrix(r, p, q); }

Page page(const FilteredComplex& f, int r) { return SpectralSequence(f).page(r); }

Verdict turn_page_check(const FilteredComplex& f, int r) { return SpectralSequence(f).turn_page_check(r); }

Stabilization stabilization(const FilteredComplex& f) { return SpectralSequence(f).stabilization(); }

Verdict convergence_check(const FilteredComplex& f) { return SpectralSequence(f).convergence_check(); }

std::string render_grid(const PageTable& t) {
    int q_min = 0;
    int q_max = 0;
    bool any = false;
    for (int p = 0; p <= t.max_p; ++p)
        for (int n = 0; n <= t.top; ++n) {
            const int q = n - p;
            if (!any) {
                q_min = q_max = q;
                any = true;
            }
            q_min = std::min(q_min, q);
            q_max = std::max(q_max, q);
        }
    std::ostringstream os;
    os << "E_" << t.r << "\n";
    if (!any) return os.str();
    for (int q = q_max; q >= q_min; --q) {
        os.width(4);
        os << q << " |";
        for (int p = 0; p <= t.max_p; ++p) {
            const int n = p + q;
            os.width(4);
            if (n < 0 || n > t.top)
                os << ".";
            else
                os << t.dim(p, q);
        }
        os << "\n";
    }
    os << "     +";
    for (int p = 0; p <= t.max_p; ++p) os << "----";
    os << "\n      ";
    for (int p = 0; p <= t.max_p; ++p) {
        os.width(4);
        os << p;
    }
    os << "\n";
    for (const auto& [p, q, rk] : t.ranks)
        os << "  (" << p << "," << q << ")->(" << p + t.r << "," << q - t.r + 1 << "): " << rk << "\n";
    return os.str();
}

}  // namespace lass
