#include "lass/extension.hpp"

#include "lass/exterior.hpp"

namespace lass {

namespace {

// Calibrated against the brute-force engine d_2 on the Heisenberg instances.
constexpr int kD2Sign = -1;
constexpr int kContractionParity = 1;

Scalar parity(std::size_t k) { return Scalar(k % 2 == 0 ? 1 : -1); }

std::string cell(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Matrix default_splitting(const Subalgebra& l) {
    Matrix s(l.parent().dim(), l.codim());
    for (std::size_t j = 0; j < l.codim(); ++j) s.set_column(j, l.complement_vector(j));
    return s;
}

}  // namespace

AbelianExtension::AbelianExtension(Subalgebra l, Representation v, std::optional<Matrix> splitting)
    : l_(std::move(l)), v_(std::move(v)) {
    if (!l_.is_ideal()) throw PreconditionError("extension: l is not an ideal");
    for (std::size_t i = 0; i < l_.dim(); ++i)
        for (std::size_t j = 0; j < l_.dim(); ++j) {
            const Vector b = g().bracket(l_.basis_vector(i), l_.basis_vector(j));
            for (const auto& x : b)
                if (sgn(x) != 0) throw PreconditionError("extension: l is not abelian");
        }
    if (v_.generators() != g().dim()) throw DimensionError("extension: representation does not match g");
    for (std::size_t i = 0; i < l_.dim(); ++i)
        if (!v_.act(l_.basis_vector(i)).is_zero()) throw PreconditionError("extension: l does not act by zero on V");
    base_ = quotient_lie_algebra(l_);
    sigma_ = splitting ? *splitting : default_splitting(l_);
    if (sigma_.rows() != g().dim() || sigma_.cols() != l_.codim())
        throw DimensionError("extension: splitting has the wrong shape");
    if (projection() * sigma_ != Matrix::identity(l_.codim()))
        throw StructuralError("extension: splitting is not a section of g -> B");
}

AbelianExtension::AbelianExtension(Subalgebra l) : AbelianExtension(l, Representation::trivial(l.parent())) {}

Matrix AbelianExtension::projection() const {
    std::vector<std::size_t> rows;
    for (std::size_t j = 0; j < l_.codim(); ++j) rows.push_back(l_.dim() + j);
    return l_.adapted_inverse().select_rows(rows);
}

Representation AbelianExtension::nabla() const {
    const std::size_t s = l_.dim();
    std::vector<Matrix> out;
    for (std::size_t b = 0; b < l_.codim(); ++b) {
        Matrix m(s, s);
        for (std::size_t c = 0; c < s; ++c)
            m.set_column(c, l_.span().coordinates(g().bracket(sigma_.column(b), l_.basis_vector(c))));
        out.push_back(std::move(m));
    }
    return Representation(s, std::move(out), l_.labels());
}

AbelianExtension AbelianExtension::shifted(const Matrix& lambda) const {
    if (lambda.rows() != l_.dim() || lambda.cols() != l_.codim())
        throw DimensionError("extension: shift has the wrong shape");
    return AbelianExtension(l_, v_, sigma_ + l_.span().basis() * lambda);
}

Vector curvature_value(const AbelianExtension& ext, std::size_t i, std::size_t j) {
    const Matrix& sigma = ext.splitting();
    Vector value = ext.g().bracket(sigma.column(i), sigma.column(j));
    const Vector lifted = sigma * ext.base().structure(i, j);
    for (std::size_t k = 0; k < value.size(); ++k) value[k] -= lifted[k];
    if (!ext.l().span().contains(value))
        throw StructuralError("curvature: value escapes l at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return ext.l().span().coordinates(value);
}

Vector curvature(const AbelianExtension& ext) {
    const std::size_t s = ext.l().dim();
    const ExteriorBasis ext_b(ext.base().dim());
    if (ext.base().dim() < 2) return {};
    Vector gamma(ext_b.dim(2) * s);
    for (std::size_t k = 0; k < ext_b.dim(2); ++k) {
        const MultiIndex& K = ext_b.element(2, k);
        const Vector value = curvature_value(ext, K[0], K[1]);
        for (std::size_t c = 0; c < s; ++c) gamma[k * s + c] = value[c];
    }
    return gamma;
}

Verdict check_curvature_closed(const AbelianExtension& ext) {
    const CochainComplex c = ce_complex(ext.base(), ext.nabla());
    const Vector gamma = curvature(ext);
    if (gamma.empty()) return Verdict::pass();
    const Vector dg = c.differential(2) * gamma;
    for (std::size_t i = 0; i < dg.size(); ++i)
        if (sgn(dg[i]) != 0) return Verdict::fail("curvature is not d_B-closed", {static_cast<long>(i)});
    return Verdict::pass();
}

ExtensionClass extension_class(const AbelianExtension& ext) {
    const CochainComplex c = ce_complex(ext.base(), ext.nabla());
    ExtensionClass out;
    out.h2 = cohomology(c, 2);
    Vector gamma = curvature(ext);
    if (gamma.empty()) gamma = Vector(c.dim(2));
    out.coordinates = out.h2.project(gamma);
    out.primitive = solve(c.differential(1), gamma);
    return out;
}

Representation fiber_rep(const AbelianExtension& ext, int q) {
    std::vector<Matrix> on_v;
    for (std::size_t b = 0; b < ext.base().dim(); ++b) on_v.push_back(ext.v().act(ext.splitting().column(b)));
    const Representation v_b(ext.v().dim(), std::move(on_v), ext.v().labels());
    return tensor_rep(exterior_power_rep(dual_rep(ext.nabla()), static_cast<std::size_t>(q)), v_b);
}

Matrix contract_igamma(const AbelianExtension& ext, int p, int q) {
    const std::size_t t = ext.base().dim();
    const std::size_t s = ext.l().dim();
    const std::size_t m = ext.v().dim();
    const ExteriorBasis ext_b(t);
    const ExteriorBasis ext_l(s);
    auto count = [](const ExteriorBasis& e, int k) {
        return k < 0 ? std::size_t{0} : e.dim(static_cast<std::size_t>(k));
    };
    const std::size_t src_fiber = count(ext_l, q) * m;
    const std::size_t dst_fiber = count(ext_l, q - 1) * m;
    Matrix out(count(ext_b, p + 2) * dst_fiber, count(ext_b, p) * src_fiber);
    if (q <= 0 || out.rows() == 0 || out.cols() == 0) return out;

    for (std::size_t k = 0; k < ext_b.dim(static_cast<std::size_t>(p + 2)); ++k) {
        const MultiIndex& K = ext_b.element(static_cast<std::size_t>(p + 2), k);
        for (std::size_t i = 0; i < K.size(); ++i)
            for (std::size_t j = i + 1; j < K.size(); ++j) {
                const Vector gamma = curvature_value(ext, K[i], K[j]);
                const std::size_t drop[] = {i, j};
                const std::size_t src_b = ext_b.index_of(remove_positions(K, drop));
                const Scalar shuffle = parity(i + j + 1);
                for (std::size_t c = 0; c < s; ++c) {
                    if (sgn(gamma[c]) == 0) continue;
                    for (std::size_t r = 0; r < ext_l.dim(static_cast<std::size_t>(q - 1)); ++r) {
                        const MultiIndex& Qp = ext_l.element(static_cast<std::size_t>(q - 1), r);
                        MultiIndex Q{c};
                        Q.insert(Q.end(), Qp.begin(), Qp.end());
                        const int insert = sort_with_sign(Q);
                        if (insert == 0) continue;
                        const std::size_t src_l = ext_l.index_of(Q);
                        for (std::size_t a = 0; a < m; ++a)
                            out(k * dst_fiber + r * m + a, src_b * src_fiber + src_l * m + a) +=
                                shuffle * insert * gamma[c];
                    }
                }
            }
    }
    return out;
}

int contraction_parity() { return kContractionParity; }
int d2_sign() { return kD2Sign; }

Verdict check_contraction_chain_map(const AbelianExtension& ext) {
    const int t = static_cast<int>(ext.base().dim());
    const int s = static_cast<int>(ext.l().dim());
    for (int q = 1; q <= s; ++q) {
        const CochainComplex src = ce_complex(ext.base(), fiber_rep(ext, q));
        const CochainComplex dst = ce_complex(ext.base(), fiber_rep(ext, q - 1));
        for (int p = 0; p <= t; ++p) {
            const Matrix lhs = dst.differential(p + 2) * contract_igamma(ext, p, q);
            const Matrix rhs = contract_igamma(ext, p + 1, q) * src.differential(p);
            if (lhs != Scalar(kContractionParity) * rhs)
                return Verdict::fail("i_gamma does not intertwine d_B at " + cell(p, q), {p, q});
        }
    }
    return Verdict::pass();
}

Matrix e2_transport(const AbelianExtension& ext, const HSInstance& inst, int p, int q) {
    const std::size_t t = ext.base().dim();
    const std::size_t s = ext.l().dim();
    const std::size_t m = ext.v().dim();
    const QuotientSpace& e2 = inst.ss().e_entry(2, p, q);
    if (p < 0 || q < 0 || static_cast<std::size_t>(p) > t || static_cast<std::size_t>(q) > s)
        return Matrix(0, e2.dim());
    const CochainComplex model = ce_complex(ext.base(), fiber_rep(ext, q));
    const QuotientSpace h = cohomology(model, p);

    // Evaluation frame with B first: (σb_1..σb_t, l_1..l_s).
    Matrix frame(ext.g().dim(), t + s);
    for (std::size_t b = 0; b < t; ++b) frame.set_column(b, ext.splitting().column(b));
    for (std::size_t c = 0; c < s; ++c) frame.set_column(t + c, ext.l().basis_vector(c));
    const std::size_t n = static_cast<std::size_t>(p + q);
    const Matrix ev = kronecker(exterior_power_matrix(frame, n).transpose(), Matrix::identity(m));
    const ExteriorBasis ext_g(t + s);
    const auto b_sets = subsets(t, static_cast<std::size_t>(p));
    const auto l_sets = subsets(s, static_cast<std::size_t>(q));
    std::vector<std::size_t> rows;
    for (const auto& P : b_sets)
        for (const auto& Q : l_sets) {
            MultiIndex S = P;
            for (auto c : Q) S.push_back(t + c);
            for (std::size_t a = 0; a < m; ++a) rows.push_back(ext_g.index_of(S) * m + a);
        }
    return h.projector() * (ev.select_rows(rows) * e2.representatives());
}

std::vector<D2Comparison> d2_check(const AbelianExtension& ext) {
    const HSInstance inst = hs_filtration(ext.l(), ext.v());
    const int t = static_cast<int>(ext.base().dim());
    const int s = static_cast<int>(ext.l().dim());
    std::vector<D2Comparison> out;
    for (int p = 0; p <= t; ++p)
        for (int q = 0; q <= s; ++q) {
            D2Comparison cmp{p, q, {}, {}, 0, 0, false, {}};
            const Matrix src = e2_transport(ext, inst, p, q);
            const Matrix dst = e2_transport(ext, inst, p + 2, q - 1);
            const QuotientSpace& e_src = inst.ss().e_entry(2, p, q);
            const QuotientSpace& e_dst = inst.ss().e_entry(2, p + 2, q - 1);
            if (src.rows() != src.cols() || rank(src) != src.rows() || dst.rows() != dst.cols() ||
                rank(dst) != dst.rows() || src.rows() != e_src.dim() || dst.rows() != e_dst.dim()) {
                cmp.verdict = Verdict::fail("E_2 transport is not an isomorphism at " + cell(p, q), {p, q});
                out.push_back(std::move(cmp));
                continue;
            }
            cmp.engine = dst * inst.ss().d_matrix(2, p, q) * *inverse(src);

            if (dst.rows() == 0 || src.rows() == 0) {
                cmp.oracle = Matrix(dst.rows(), src.rows());
            } else {
                const QuotientSpace h_src = cohomology(ce_complex(ext.base(), fiber_rep(ext, q)), p);
                const QuotientSpace h_dst = cohomology(ce_complex(ext.base(), fiber_rep(ext, q - 1)), p + 2);
                const Scalar sign = Scalar(kD2Sign) * parity(static_cast<std::size_t>(p));
                cmp.oracle = sign * (h_dst.projector() * contract_igamma(ext, p, q) * h_src.representatives());
            }
            cmp.engine_rank = rank(cmp.engine);
            cmp.oracle_rank = rank(cmp.oracle);
            cmp.equal = cmp.engine == cmp.oracle;
            cmp.verdict = cmp.equal ? Verdict::pass() : Verdict::fail("d_2 differs from (-1)^p i_gamma at " + cell(p, q), {p, q});
            out.push_back(std::move(cmp));
        }
    return out;
}

}  // namespace lass
