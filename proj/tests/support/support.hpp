#pragma once

// Shared test helpers: a hand-rolled rank, random filtered complexes whose
// spectral sequence is known by construction, and catalog fixtures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lass/catalog.hpp"
#include "lass/serre.hpp"

namespace lass::test {

inline std::string catalog_path() { return LASS_TEST_CATALOG_DIR; }

/// Rank by plain elimination, kept separate from the library's rref.
inline std::size_t naive_rank(const Matrix& m) {
    std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (sgn(a[i][c]) == 0) continue;
            const Scalar f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline Scalar small_rational(std::mt19937_64& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 2);
    Scalar x(num(rng), den(rng));
    x.canonicalize();
    return x;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = small_rational(rng);
        if (naive_rank(m) == n) return m;
    }
}

/// Filtered complex built as g d0 g^-1 where d0 pairs basis vectors x -> y
/// (deg y = deg x + 1, level y >= level x) and g preserves the filtration by
/// levels. The pages are then determined by the pairs alone.
struct KnownComplex {
    struct Pair {
        int n;      // degree of the source
        int a;      // level of the source
        int b;      // level of the target
    };
    FilteredComplex filtered;
    std::vector<std::vector<int>> levels;  // levels[n][i]
    std::vector<Pair> pairs;
    std::vector<std::pair<int, int>> free;  // (degree, level) of unpaired vectors

    [[nodiscard]] int length() const {
        int l = 0;
        for (const auto& lv : levels)
            for (int x : lv) l = std::max(l, x);
        return l;
    }

    /// dim E_r^{p, n-p}.
    [[nodiscard]] std::size_t dim(int r, int p, int n) const {
        std::size_t d = 0;
        if (r == 0) {
            if (n >= 0 && n < static_cast<int>(levels.size()))
                for (int x : levels[static_cast<std::size_t>(n)]) d += x == p;
            return d;
        }
        for (const auto& [fn, fl] : free) d += fn == n && fl == p;
        for (const auto& pr : pairs) {
            if (pr.b - pr.a < r) continue;
            d += pr.n == n && pr.a == p;
            d += pr.n + 1 == n && pr.b == p;
        }
        return d;
    }

    /// rank of d_r out of (p, n - p).
    [[nodiscard]] std::size_t rank(int r, int p, int n) const {
        std::size_t k = 0;
        for (const auto& pr : pairs) k += pr.n == n && pr.a == p && pr.b - pr.a == r;
        return k;
    }

    [[nodiscard]] int stabilization() const {
        int g = 0;
        for (const auto& pr : pairs) g = std::max(g, pr.b - pr.a);
        return g + 1;
    }
};

/// Total dimension at most `max_total`; with `scramble` the filtration steps
/// are moved off the coordinate subspaces by a further basis change per degree.
inline KnownComplex random_known_complex(std::uint64_t seed, std::size_t max_total = 30, bool scramble = true) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> top_d(1, 4);
    std::uniform_int_distribution<int> len_d(1, 4);
    const int top = top_d(rng);
    const int len = len_d(rng);
    std::uniform_int_distribution<int> lvl(0, len);
    std::uniform_int_distribution<int> coin(0, 2);

    KnownComplex k;
    k.levels.assign(static_cast<std::size_t>(top) + 1, {});
    std::vector<std::tuple<int, std::size_t, std::size_t>> edges;  // (n, src index, dst index)
    std::size_t total = 0;
    auto add = [&](int n, int level) {
        k.levels[static_cast<std::size_t>(n)].push_back(level);
        ++total;
        return k.levels[static_cast<std::size_t>(n)].size() - 1;
    };
    std::uniform_int_distribution<int> deg(0, top);
    while (total + 2 <= max_total) {
        const int n = deg(rng);
        if (coin(rng) == 0 || n == top) {
            const int l = lvl(rng);
            add(n, l);
            k.free.push_back({n, l});
        } else {
            int a = lvl(rng);
            int b = lvl(rng);
            if (b < a) std::swap(a, b);
            const std::size_t s = add(n, a);
            const std::size_t t = add(n + 1, b);
            edges.emplace_back(n, s, t);
            k.pairs.push_back({n, a, b});
        }
        if (coin(rng) == 0 && total >= max_total / 2) break;
    }

    std::vector<std::size_t> dims;
    for (const auto& lv : k.levels) dims.push_back(lv.size());
    // g_n: filtration preserving, g(e_i) = e_i + Σ_{level j >= level i} c e_j.
    std::vector<Matrix> g, g_inv;
    for (int n = 0; n <= top; ++n) {
        const auto& lv = k.levels[static_cast<std::size_t>(n)];
        const std::size_t m = lv.size();
        Matrix gm = Matrix::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j && lv[j] >= lv[i] && j > i) gm(j, i) = small_rational(rng, 2);
        // j > i keeps gm unitriangular, hence invertible
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (lv[j] > lv[i] && coin(rng) == 0) gm(j, i) = small_rational(rng, 2);
        auto inv = inverse(gm);
        if (!inv) {
            gm = Matrix::identity(m);
            inv = gm;
        }
        g.push_back(gm);
        g_inv.push_back(*inv);
    }
    std::vector<Matrix> d;
    for (int n = 0; n < top; ++n) {
        Matrix d0(dims[static_cast<std::size_t>(n) + 1], dims[static_cast<std::size_t>(n)]);
        for (const auto& [en, s, t] : edges)
            if (en == n) d0(t, s) = 1;
        d.push_back(g[static_cast<std::size_t>(n) + 1] * d0 * g_inv[static_cast<std::size_t>(n)]);
    }
    std::vector<Matrix> h(g.size());
    for (std::size_t n = 0; n < g.size(); ++n)
        h[n] = scramble ? random_invertible(rng, dims[n]) : Matrix::identity(dims[n]);
    std::vector<Matrix> dh;
    for (int n = 0; n < top; ++n) {
        const auto un = static_cast<std::size_t>(n);
        dh.push_back(h[un + 1] * d[un] * *inverse(h[un]));
    }
    const int length = k.length();
    std::vector<std::vector<Subspace>> steps(dims.size());
    for (std::size_t n = 0; n < dims.size(); ++n) {
        for (int p = 0; p <= length; ++p) {
            std::vector<Vector> cols;
            for (std::size_t i = 0; i < dims[n]; ++i)
                if (k.levels[n][i] >= p) cols.push_back(h[n].column(i));
            steps[n].push_back(Subspace(dims[n], cols));
        }
    }
    k.filtered = FilteredComplex(CochainComplex(GradedSpace(dims), dh), steps);
    return k;
}

/// A named filtered complex taken from the catalog.
struct CatalogComplex {
    std::string name;
    FilteredComplex filtered;
};

inline Representation jet_module(const Document& d) {
    return d.jet_module ? *d.jet_module : Representation::trivial(d.jet->fiber_algebra());
}

/// Every filtered complex of the catalog: HS and extension entries with their
/// subalgebra filtration, jet entries at each listed order, bare Lie algebras
/// with the trivial filtration.
inline std::vector<CatalogComplex> catalog_complexes() {
    std::vector<CatalogComplex> out;
    for (const auto& e : catalog_load_all(catalog_path())) {
        const Document& d = e.doc;
        if (d.kind == "jet") {
            for (unsigned k : d.orders)
                out.push_back({d.name + "@" + std::to_string(k),
                               jet_complex(d.jet->with_order(k), jet_module(d)).filtered});
        } else if (d.kind == "lie") {
            out.push_back({d.name, FilteredComplex::trivial(ce_complex(*d.g, module_of(d)))});
        } else {
            const Matrix& span = d.subalgebra ? *d.subalgebra : *d.ideal;
            out.push_back({d.name, hs_filtration(Subalgebra(*d.g, span), module_of(d)).filtered});
        }
    }
    return out;
}

inline std::vector<PageTable> all_tables(const SpectralSequence& ss) {
    std::vector<PageTable> out;
    for (int r = 0; r <= ss.last_page(); ++r) out.push_back(ss.table(r));
    return out;
}

/// Basis e'_i = e_{perm[i]} of the Lie algebra, with the module matrices reordered.
inline Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
    Matrix b(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) b(perm[i], i) = 1;
    return b;
}

inline Representation permute_rep(const Representation& v, const std::vector<std::size_t>& perm) {
    std::vector<Matrix> m;
    for (auto i : perm) m.push_back(v.action(i));
    return Representation(v.dim(), m);
}

inline PolyJetAlgebroid permute_jet(const PolyJetAlgebroid& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.rank();
    std::vector<std::vector<Polynomial>> anchor;
    for (auto i : perm) anchor.push_back(a.anchors()[i]);
    std::vector<Polynomial> structure(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) structure[(x * n + y) * n + z] = a.structure(perm[x], perm[y], perm[z]);
    return PolyJetAlgebroid(n, a.base_dim(), a.order(), anchor, structure);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Page tables of a catalog entry after permuting the algebra basis and
/// conjugating the module; jet entries at their first listed order.
inline std::vector<PageTable> transformed_tables(const Document& d, const std::vector<std::size_t>& perm,
                                                 const Matrix& conj) {
    if (d.kind == "jet") {
        const unsigned k = d.orders.front();
        const PolyJetAlgebroid a = permute_jet(d.jet->with_order(k), perm);
        const Representation v = permute_rep(jet_module(d), perm).conjugate(conj);
        return all_tables(*jet_complex(a, v).engine);
    }
    const Matrix b = permutation_matrix(perm);
    const LieAlgebra g = d.g->change_basis(b);
    const Representation v = permute_rep(module_of(d), perm).conjugate(conj);
    if (d.kind == "lie") return all_tables(SpectralSequence(FilteredComplex::trivial(ce_complex(g, v))));
    const Matrix span = b.transpose() * (d.subalgebra ? *d.subalgebra : *d.ideal);
    return all_tables(hs_filtration(Subalgebra(g, span), v).ss());
}

inline std::vector<PageTable> original_tables(const Document& d) {
    const std::size_t n = d.kind == "jet" ? d.jet->rank() : d.g->dim();
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    const std::size_t m = d.kind == "jet" ? jet_module(d).dim() : module_of(d).dim();
    return transformed_tables(d, id, Matrix::identity(m));
}

inline std::size_t module_dim(const Document& d) {
    return d.kind == "jet" ? jet_module(d).dim() : module_of(d).dim();
}

inline std::size_t algebra_dim(const Document& d) { return d.kind == "jet" ? d.jet->rank() : d.g->dim(); }

}  // namespace lass::test
