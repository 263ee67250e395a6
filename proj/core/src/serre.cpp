#include "lass/serre.hpp"

#include <algorithm>
#include <random>

#include "lass/exterior.hpp"

namespace lass {

namespace {

/// ψ-count of an adapted multi-index (entries >= s are complement duals).
std::size_t psi_count(const MultiIndex& idx, std::size_t s) {
    std::size_t c = 0;
    for (auto i : idx)
        if (i >= s) ++c;
    return c;
}

/// Adapted-coordinate form -> ξ-coordinates: (∧^n U)^T ⊗ 1 with U the inverse adapted basis.
Matrix adapted_extension(const Subalgebra& h, std::size_t module_dim, std::size_t n) {
    return kronecker(exterior_power_matrix(h.adapted_inverse(), n).transpose(), Matrix::identity(module_dim));
}

FilteredComplex build_filtration(const Subalgebra& h, const Representation& v, CochainComplex complex) {
    const std::size_t dim = h.parent().dim();
    const std::size_t s = h.dim();
    const std::size_t m = v.dim();
    std::vector<std::vector<Subspace>> steps;
    for (std::size_t n = 0; n <= dim; ++n) {
        const Matrix ext = adapted_extension(h, m, n);
        const auto monomials = subsets(dim, n);
        std::vector<Subspace> degree;
        for (std::size_t p = 0; p <= std::min(n, h.codim()); ++p) {
            std::vector<std::size_t> cols;
            for (std::size_t i = 0; i < monomials.size(); ++i)
                if (psi_count(monomials[i], s) >= p)
                    for (std::size_t a = 0; a < m; ++a) cols.push_back(i * m + a);
            degree.emplace_back(ext.select_columns(cols));
        }
        steps.push_back(std::move(degree));
    }
    return FilteredComplex(std::move(complex), std::move(steps));
}

HSInstance make_instance(const Subalgebra& h, const Representation& v) {
    FilteredComplex f = build_filtration(h, v, ce_complex(h.parent(), v));
    auto engine = std::make_shared<const SpectralSequence>(f);
    return HSInstance{h, v, std::move(f), std::move(engine)};
}

std::string cell(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

/// Value of an adapted-coordinate (k)-form on the adapted basis vectors `args`, per module component.
Vector evaluate_adapted(const Vector& form, const ExteriorBasis& ext, std::size_t m, MultiIndex args) {
    Vector out(m);
    const int sign = sort_with_sign(args);
    if (sign == 0) return out;
    const std::size_t base = ext.index_of(args) * m;
    for (std::size_t a = 0; a < m; ++a) out[a] = sign * form[base + a];
    return out;
}

}  // namespace

Matrix adapted_evaluation(const Subalgebra& h, std::size_t module_dim, std::size_t n) {
    return kronecker(exterior_power_matrix(h.adapted_basis(), n).transpose(), Matrix::identity(module_dim));
}

HSInstance hs_filtration(const Subalgebra& h, const Representation& v) {
    if (!h.is_closed()) throw PreconditionError("hs_filtration: subspace is not a subalgebra");
    return make_instance(h, v);
}

HSInstance hs_filtration(const Subalgebra& h) { return hs_filtration(h, Representation::trivial(h.parent())); }

HSInstance hs_filtration_unchecked(const Subalgebra& h, const Representation& v) {
    FilteredComplex f = build_filtration(h, v, ce_complex(h.parent(), v));
    // The engine is still constructed; callers are expected to run check_filtration first.
    auto engine = std::make_shared<const SpectralSequence>(f);
    return HSInstance{h, v, std::move(f), std::move(engine)};
}

Matrix pr_map(const Subalgebra& h, std::size_t module_dim, int p, int q) {
    const std::size_t s = h.dim();
    const std::size_t t = h.codim();
    const std::size_t m = module_dim;
    const ExteriorBasis ext(h.parent().dim());
    const Matrix ev = adapted_evaluation(h, m, static_cast<std::size_t>(p + q));
    const auto h_subsets = subsets(s, static_cast<std::size_t>(q));
    const auto c_subsets = subsets(t, static_cast<std::size_t>(p));
    std::vector<std::size_t> rows;
    for (const auto& I : h_subsets)
        for (const auto& P : c_subsets) {
            MultiIndex S = I;
            for (auto j : P) S.push_back(s + j);
            const std::size_t base = ext.index_of(S) * m;
            for (std::size_t b = 0; b < m; ++b) rows.push_back(base + b);
        }
    return ev.select_rows(rows);
}

Matrix e0_pr_map(const HSInstance& inst, int p, int q) {
    return pr_map(inst.h, inst.v.dim(), p, q) * inst.ss().e_entry(0, p, q).representatives();
}

Representation e1_coefficients(const HSInstance& inst, int p) {
    return tensor_rep(exterior_power_rep(dual_rep(bott_rep(inst.h)), static_cast<std::size_t>(p)),
                      restrict_rep(inst.v, inst.h));
}

Verdict e0_check(const HSInstance& inst, int p, int q) {
    const Matrix pr = e0_pr_map(inst, p, q);
    if (pr.rows() != pr.cols() || rank(pr) != pr.rows())
        return Verdict::fail("pr is not invertible on E_0 at " + cell(p, q), {p, q});
    const CochainComplex oracle = ce_complex(subalgebra_lie_algebra(inst.h), e1_coefficients(inst, p));
    const Matrix lhs = e0_pr_map(inst, p, q + 1) * inst.ss().d_matrix(0, p, q);
    const Matrix rhs = oracle.differential(q) * pr;
    if (lhs != rhs) return Verdict::fail("pr does not intertwine d_0 with the h-differential at " + cell(p, q), {p, q});
    return Verdict::pass();
}

Identification e1_identification(const HSInstance& inst, int p, int q) {
    Identification out{p, q, inst.ss().dim(1, p, q), 0, {}};
    const CochainComplex oracle = ce_complex(subalgebra_lie_algebra(inst.h), e1_coefficients(inst, p));
    const QuotientSpace h_q = cohomology(oracle, q);
    out.oracle_dim = h_q.dim();
    if (out.engine_dim != out.oracle_dim) {
        out.verdict = Verdict::fail("E_1 dimension mismatch at " + cell(p, q), {p, q});
        return out;
    }
    const Matrix images = pr_map(inst.h, inst.v.dim(), p, q) * inst.ss().e_entry(1, p, q).representatives();
    if (!(oracle.differential(q) * images).is_zero()) {
        out.verdict = Verdict::fail("pr of an E_1 representative is not a cocycle at " + cell(p, q), {p, q});
        return out;
    }
    const Subspace boundaries = h_q.denominator();
    if (sum(boundaries, Subspace(images)).dim() != boundaries.dim() + images.cols()) {
        out.verdict = Verdict::fail("pr does not descend to an injection on E_1 at " + cell(p, q), {p, q});
        return out;
    }
    out.verdict = Verdict::pass();
    return out;
}

InducedRep induced_rep_on_H(const Subalgebra& h, const Representation& v, int q,
                            std::optional<std::uint64_t> randomize_seed) {
    if (!h.is_ideal()) throw PreconditionError("induced_rep_on_H: subalgebra is not an ideal");
    const LieAlgebra& g = h.parent();
    const std::size_t s = h.dim();
    const std::size_t t = h.codim();
    const std::size_t m = v.dim();
    const std::size_t uq = static_cast<std::size_t>(q);

    const LieAlgebra h_alg = subalgebra_lie_algebra(h);
    const CochainComplex ce_h = ce_complex(h_alg, restrict_rep(v, h));
    QuotientSpace hq = cohomology(ce_h, q);
    const CochainComplex ce_g = ce_complex(g, v);

    const ExteriorBasis ext_g(g.dim());
    const ExteriorBasis ext_h(s);
    const Matrix extend = adapted_extension(h, m, uq);
    const Matrix ev_next = adapted_evaluation(h, m, uq + 1);
    const Matrix d_g = ce_g.differential(q);
    const Matrix d_h = ce_h.differential(q);

    std::mt19937_64 rng(randomize_seed.value_or(0));
    std::uniform_int_distribution<int> coeff(-2, 2);

    std::vector<Matrix> matrices;
    for (std::size_t j = 0; j < t; ++j) {
        Matrix nabla(hq.dim(), hq.dim());
        for (std::size_t i = 0; i < hq.dim(); ++i) {
            const Vector eta = hq.representative(i);
            Vector adapted(ext_g.dim(uq) * m);
            for (const auto& I : ext_h.elements(uq))
                for (std::size_t a = 0; a < m; ++a)
                    adapted[ext_g.index_of(I) * m + a] = eta[ext_h.index_of(I) * m + a];
            if (randomize_seed) {
                for (std::size_t k = 0; k < ext_g.dim(uq); ++k)
                    if (psi_count(ext_g.element(uq, k), s) > 0)
                        for (std::size_t a = 0; a < m; ++a) adapted[k * m + a] += coeff(rng);
            }
            const Vector y = ev_next * (d_g * (extend * adapted));

            // Lift of the j-th complement vector, in adapted coordinates.
            Vector lift(g.dim());
            lift[s + j] = 1;
            if (randomize_seed)
                for (std::size_t k = 0; k < s; ++k) lift[k] = coeff(rng);

            Vector w(ext_h.dim(uq) * m);
            for (const auto& I : ext_h.elements(uq)) {
                for (std::size_t k = 0; k < g.dim(); ++k) {
                    if (sgn(lift[k]) == 0) continue;
                    MultiIndex args{k};
                    args.insert(args.end(), I.begin(), I.end());
                    const Vector val = evaluate_adapted(y, ext_g, m, args);
                    for (std::size_t a = 0; a < m; ++a) w[ext_h.index_of(I) * m + a] += lift[k] * val[a];
                }
            }
            if (const Vector dw = d_h * w; std::any_of(dw.begin(), dw.end(), [](const Scalar& x) { return sgn(x) != 0; }))
                throw ConsistencyError("induced_rep_on_H: contracted form is not closed on h");
            nabla.set_column(i, hq.project(w));
        }
        matrices.push_back(std::move(nabla));
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < hq.dim(); ++i) labels.push_back("[H" + std::to_string(q) + "_" + std::to_string(i + 1) + "]");
    Representation rep(hq.dim(), std::move(matrices), std::move(labels));
    return InducedRep{quotient_lie_algebra(h), std::move(hq), std::move(rep)};
}

namespace {

Identification e2_against(const HSInstance& inst, const InducedRep& induced, int p, int q) {
    Identification out{p, q, inst.ss().dim(2, p, q), 0, {}};
    if (const Verdict flat = check_flat(induced.quotient, induced.rep); !flat) {
        out.verdict = Verdict::fail("induced representation on H^" + std::to_string(q) + " is not flat", {p, q});
        return out;
    }
    const CochainComplex oracle = ce_complex(induced.quotient, induced.rep);
    out.oracle_dim = cohomology(oracle, p).dim();
    out.verdict = out.engine_dim == out.oracle_dim ? Verdict::pass()
                                                   : Verdict::fail("E_2 dimension mismatch at " + cell(p, q), {p, q});
    return out;
}

}  // namespace

Identification e2_identification(const HSInstance& inst, int p, int q) {
    return e2_against(inst, induced_rep_on_H(inst.h, inst.v, q), p, q);
}

std::vector<Identification> e1_table(const HSInstance& inst) {
    std::vector<Identification> out;
    for (int p = 0; p <= static_cast<int>(inst.h.codim()); ++p)
        for (int q = 0; q <= static_cast<int>(inst.h.dim()); ++q) out.push_back(e1_identification(inst, p, q));
    return out;
}

std::vector<Identification> e2_table(const HSInstance& inst) {
    std::vector<Identification> out;
    for (int q = 0; q <= static_cast<int>(inst.h.dim()); ++q) {
        const InducedRep induced = induced_rep_on_H(inst.h, inst.v, q);
        for (int p = 0; p <= static_cast<int>(inst.h.codim()); ++p) out.push_back(e2_against(inst, induced, p, q));
    }
    return out;
}

}  // namespace lass
