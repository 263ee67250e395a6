#include "lass/ce.hpp"

#include "lass/exterior.hpp"
#include "lass/polynomial.hpp"

namespace lass {

namespace {

std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
    return out;
}

std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<Vector> brackets, std::vector<std::string> labels)
    : dim_(dim), brackets_(std::move(brackets)), labels_(std::move(labels)) {
    if (brackets_.size() != dim_ * dim_) throw StructuralError("LieAlgebra: expected dim^2 bracket vectors");
    for (const auto& b : brackets_)
        if (b.size() != dim_) throw StructuralError("LieAlgebra: bracket vector has wrong length");
    if (labels_.empty()) labels_ = default_labels("e", dim_);
    if (labels_.size() != dim_) throw StructuralError("LieAlgebra: label count mismatch");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, std::vector<Vector>(dim * dim, Vector(dim))); }

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<BracketEntry>& entries,
                                     std::vector<std::string> labels) {
    std::vector<Vector> b(dim * dim, Vector(dim));
    std::vector<bool> given(dim * dim, false);
    for (const auto& e : entries) {
        if (e.i >= dim || e.j >= dim || e.coeffs.size() != dim)
            throw StructuralError("LieAlgebra: bracket entry out of range");
        b[e.i * dim + e.j] = e.coeffs;
        given[e.i * dim + e.j] = true;
    }
    for (const auto& e : entries) {
        const std::size_t mirror = e.j * dim + e.i;
        if (!given[mirror]) {
            for (std::size_t k = 0; k < dim; ++k) b[mirror][k] = -e.coeffs[k];
        }
    }
    return LieAlgebra(dim, std::move(b), std::move(labels));
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionError("bracket: vector length mismatch");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(v[j]) == 0) continue;
            const Scalar c = u[i] * v[j];
            const Vector& s = structure(i, j);
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(s[k]) != 0) out[k] += c * s[k];
        }
    }
    return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = structure(i, j)[k];
    return m;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& new_basis) const {
    const auto inv = inverse(new_basis);
    if (!inv) throw PreconditionError("change_basis: matrix is not invertible");
    std::vector<Vector> b;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) b.push_back(*inv * bracket(new_basis.column(i), new_basis.column(j)));
    return LieAlgebra(dim_, std::move(b));
}

// ---------------------------------------------------------------- Representation

Representation::Representation(std::size_t dim, std::vector<Matrix> matrices, std::vector<std::string> labels)
    : dim_(dim), matrices_(std::move(matrices)), labels_(std::move(labels)) {
    for (const auto& m : matrices_)
        if (m.rows() != dim_ || m.cols() != dim_) throw StructuralError("Representation: matrix has wrong shape");
    if (labels_.empty()) labels_ = default_labels("v", dim_);
    if (labels_.size() != dim_) throw StructuralError("Representation: label count mismatch");
}

Representation Representation::trivial(const LieAlgebra& g, std::size_t dim) {
    return Representation(dim, std::vector<Matrix>(g.dim(), Matrix(dim, dim)));
}

Representation Representation::adjoint(const LieAlgebra& g) {
    std::vector<Matrix> m;
    for (std::size_t i = 0; i < g.dim(); ++i) m.push_back(g.ad(i));
    return Representation(g.dim(), std::move(m), g.labels());
}

Matrix Representation::act(const Vector& x) const {
    if (x.size() != matrices_.size()) throw DimensionError("Representation::act: length mismatch");
    Matrix out(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) out = out + x[i] * matrices_[i];
    return out;
}

Representation Representation::conjugate(const Matrix& p) const {
    const auto inv = inverse(p);
    if (!inv) throw PreconditionError("conjugate: matrix is not invertible");
    std::vector<Matrix> m;
    for (const auto& a : matrices_) m.push_back(*inv * a * p);
    return Representation(dim_, std::move(m));
}

// ---------------------------------------------------------------- checks

Verdict check_antisymmetry(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (g.structure(i, j)[k] != -g.structure(j, i)[k])
                    return Verdict::fail("antisymmetry fails: c" + idx3(i, j, k) + " != -c" + idx3(j, i, k),
                                         {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)});
    return Verdict::pass();
}

Verdict check_jacobi(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    auto unit = [n](std::size_t i) {
        Vector v(n);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ei = unit(i), ej = unit(j), ek = unit(k);
                const Vector a = g.bracket(ei, g.bracket(ej, ek));
                const Vector b = g.bracket(ej, g.bracket(ek, ei));
                const Vector c = g.bracket(ek, g.bracket(ei, ej));
                for (std::size_t m = 0; m < n; ++m)
                    if (sgn(a[m] + b[m] + c[m]) != 0)
                        return Verdict::fail("Jacobi identity fails for basis triple " + idx3(i, j, k),
                                             {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)});
            }
    return Verdict::pass();
}

Verdict check_flat(const LieAlgebra& g, const Representation& v) {
    if (v.generators() != g.dim())
        return Verdict::fail("representation has " + std::to_string(v.generators()) + " matrices for a " +
                             std::to_string(g.dim()) + "-dimensional algebra");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            const Matrix lhs = v.act(g.structure(i, j));
            const Matrix rhs = v.action(i) * v.action(j) - v.action(j) * v.action(i);
            if (lhs != rhs)
                return Verdict::fail("flatness fails: rho([e" + std::to_string(i) + ",e" + std::to_string(j) +
                                         "]) != [rho_i, rho_j]",
                                     {static_cast<long>(i), static_cast<long>(j)});
        }
    return Verdict::pass();
}

// ---------------------------------------------------------------- Subalgebra

Subalgebra::Subalgebra(LieAlgebra parent, const Matrix& spanning, bool check) : parent_(std::move(parent)) {
    if (spanning.rows() != parent_.dim()) throw DimensionError("Subalgebra: vectors have the wrong length");
    span_ = Subspace(spanning);
    std::vector<bool> is_pivot(parent_.dim(), false);
    for (auto p : span_.pivots()) is_pivot[p] = true;
    adapted_ = Matrix(parent_.dim(), parent_.dim());
    for (std::size_t j = 0; j < span_.dim(); ++j) adapted_.set_column(j, span_.basis_vector(j));
    std::size_t col = span_.dim();
    for (std::size_t i = 0; i < parent_.dim(); ++i)
        if (!is_pivot[i]) adapted_(i, col++) = 1;
    adapted_inverse_ = *inverse(adapted_);
    if (check && !is_closed()) throw PreconditionError("subspace is not closed under the bracket");
}

Subalgebra::Subalgebra(LieAlgebra parent, const Matrix& spanning) : Subalgebra(std::move(parent), spanning, true) {}

Subalgebra Subalgebra::unchecked(LieAlgebra parent, const Matrix& spanning) {
    return Subalgebra(std::move(parent), spanning, false);
}

bool Subalgebra::is_closed() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (!span_.contains(parent_.bracket(basis_vector(i), basis_vector(j)))) return false;
    return true;
}

bool Subalgebra::is_ideal() const {
    for (std::size_t i = 0; i < parent_.dim(); ++i) {
        Vector e(parent_.dim());
        e[i] = 1;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!span_.contains(parent_.bracket(e, basis_vector(j)))) return false;
    }
    return true;
}

std::vector<std::string> Subalgebra::labels() const {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < dim(); ++j) {
        const Vector v = basis_vector(j);
        std::size_t nonzero = 0, at = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0) ++nonzero, at = i;
        out.push_back(nonzero == 1 && v[at] == 1 ? parent_.labels()[at] : "h" + std::to_string(j + 1));
    }
    return out;
}

std::vector<std::string> Subalgebra::complement_labels() const {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < codim(); ++j) {
        const Vector v = complement_vector(j);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(v[i]) != 0) out.push_back("[" + parent_.labels()[i] + "]");
    }
    return out;
}

// ---------------------------------------------------------------- complexes

CochainComplex koszul_complex(const KoszulData& data) {
    const std::size_t n = data.rank;
    const std::size_t m = data.module_dim;
    if (data.action.size() != n || data.bracket.size() != n * n)
        throw StructuralError("koszul_complex: action/bracket data does not match the rank");
    const ExteriorBasis ext(n);

    auto add_block = [m](Matrix& d, std::size_t row_block, std::size_t col_block, const Scalar& s, const Matrix& op) {
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a)
                if (sgn(op(b, a)) != 0) d(row_block * m + b, col_block * m + a) += s * op(b, a);
    };

    std::vector<Matrix> diffs;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix d(ext.dim(k + 1) * m, ext.dim(k) * m);
        const auto& targets = ext.elements(k + 1);
        for (std::size_t jt = 0; jt < targets.size(); ++jt) {
            const MultiIndex& J = targets[jt];
            // Σ_i (-1)^i ∇_{α_i} ω(..., α̂_i, ...)
            for (std::size_t i = 0; i <= k; ++i) {
                const std::size_t drop[] = {i};
                const MultiIndex rest = remove_positions(J, drop);
                add_block(d, jt, ext.index_of(rest), Scalar(i % 2 == 0 ? 1 : -1), data.action[J[i]]);
            }
            // Σ_{i<l} (-1)^{i+l} ω([α_i, α_l], ..., α̂_i, ..., α̂_l, ...)
            for (std::size_t i = 0; i <= k; ++i)
                for (std::size_t l = i + 1; l <= k; ++l) {
                    const std::size_t drop[] = {i, l};
                    const MultiIndex rest = remove_positions(J, drop);
                    const Scalar sign((i + l) % 2 == 0 ? 1 : -1);
                    for (const auto& [target, op] : data.bracket[J[i] * n + J[l]]) {
                        MultiIndex I{target};
                        I.insert(I.end(), rest.begin(), rest.end());
                        const int s = sort_with_sign(I);
                        if (s == 0) continue;
                        add_block(d, jt, ext.index_of(I), sign * s, op);
                    }
                }
        }
        diffs.push_back(std::move(d));
    }

    std::vector<std::size_t> dims;
    std::vector<std::vector<std::string>> labels;
    for (std::size_t k = 0; k <= n; ++k) {
        dims.push_back(ext.dim(k) * m);
        std::vector<std::string> l;
        for (const auto& I : ext.elements(k)) {
            std::string form;
            for (std::size_t t = 0; t < I.size(); ++t)
                form += (t ? "∧ξ_" : "ξ_") +
                        (data.generator_labels.empty() ? std::to_string(I[t] + 1) : data.generator_labels[I[t]]);
            if (form.empty()) form = "1";
            for (std::size_t a = 0; a < m; ++a) {
                if (m == 1 && data.module_labels.empty())
                    l.push_back(form);
                else
                    l.push_back(form + "⊗" + (data.module_labels.empty() ? "v" + std::to_string(a + 1) : data.module_labels[a]));
            }
        }
        labels.push_back(std::move(l));
    }
    return CochainComplex(GradedSpace(std::move(dims), std::move(labels)), std::move(diffs));
}

CochainComplex ce_complex(const LieAlgebra& g, const Representation& v) {
    if (const Verdict flat = check_flat(g, v); !flat) throw PreconditionError("ce_complex: " + flat.detail);
    KoszulData data;
    data.rank = g.dim();
    data.module_dim = v.dim();
    data.action = v.matrices();
    data.bracket.resize(g.dim() * g.dim());
    const Matrix id = Matrix::identity(v.dim());
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = 0; b < g.dim(); ++b)
            for (std::size_t d = 0; d < g.dim(); ++d) {
                const Scalar& c = g.structure(a, b)[d];
                if (sgn(c) != 0) data.bracket[a * g.dim() + b].emplace_back(d, c * id);
            }
    data.generator_labels = g.labels();
    if (v.dim() > 1) data.module_labels = v.labels();
    return koszul_complex(data);
}

CochainComplex ce_complex(const LieAlgebra& g) { return ce_complex(g, Representation::trivial(g)); }

// ---------------------------------------------------------------- derived representations

Representation dual_rep(const Representation& v) {
    std::vector<Matrix> m;
    for (const auto& a : v.matrices()) m.push_back(Scalar(-1) * a.transpose());
    std::vector<std::string> labels;
    for (const auto& l : v.labels()) labels.push_back(l + "*");
    return Representation(v.dim(), std::move(m), std::move(labels));
}

Representation exterior_power_rep(const Representation& v, std::size_t p) {
    const ExteriorBasis ext(v.dim());
    const std::size_t dim = ext.dim(p);
    std::vector<Matrix> out;
    for (const auto& a : v.matrices()) {
        Matrix m(dim, dim);
        for (std::size_t s = 0; s < dim; ++s) {
            const MultiIndex& S = ext.element(p, s);
            for (std::size_t pos = 0; pos < p; ++pos)
                for (std::size_t t = 0; t < v.dim(); ++t) {
                    const Scalar& c = a(t, S[pos]);
                    if (sgn(c) == 0) continue;
                    MultiIndex T = S;
                    T[pos] = t;
                    const int sign = sort_with_sign(T);
                    if (sign == 0) continue;
                    m(ext.index_of(T), s) += sign * c;
                }
        }
        out.push_back(std::move(m));
    }
    std::vector<std::string> labels;
    for (const auto& S : ext.elements(p)) {
        std::string l;
        for (std::size_t i = 0; i < S.size(); ++i) l += (i ? "∧" : "") + v.labels()[S[i]];
        labels.push_back(l.empty() ? "1" : l);
    }
    return Representation(dim, std::move(out), std::move(labels));
}

Representation sym_power_rep(const Representation& v, std::size_t p) {
    const MonomialBasis basis(v.dim(), static_cast<unsigned>(p), static_cast<unsigned>(p));
    const std::size_t dim = basis.size();
    std::vector<Matrix> out;
    for (const auto& a : v.matrices()) {
        Matrix m(dim, dim);
        for (std::size_t s = 0; s < dim; ++s) {
            const Exponent& e = basis.monomial(s);
            for (std::size_t j = 0; j < v.dim(); ++j) {
                if (e[j] == 0) continue;
                for (std::size_t t = 0; t < v.dim(); ++t) {
                    const Scalar& c = a(t, j);
                    if (sgn(c) == 0) continue;
                    Exponent f = e;
                    --f[j];
                    ++f[t];
                    m(basis.index_of(f), s) += c * static_cast<long>(e[j]);
                }
            }
        }
        out.push_back(std::move(m));
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
        const Exponent& e = basis.monomial(i);
        std::string l;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (unsigned r = 0; r < e[j]; ++r) l += (l.empty() ? "" : "·") + v.labels()[j];
        labels.push_back(l.empty() ? "1" : l);
    }
    return Representation(dim, std::move(out), std::move(labels));
}

Representation tensor_rep(const Representation& v, const Representation& w) {
    if (v.generators() != w.generators()) throw DimensionError("tensor_rep: representations of different algebras");
    const Matrix iv = Matrix::identity(v.dim());
    const Matrix iw = Matrix::identity(w.dim());
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < v.generators(); ++i)
        out.push_back(kronecker(v.action(i), iw) + kronecker(iv, w.action(i)));
    std::vector<std::string> labels;
    for (const auto& a : v.labels())
        for (const auto& b : w.labels()) labels.push_back(a + "⊗" + b);
    return Representation(v.dim() * w.dim(), std::move(out), std::move(labels));
}

// ---------------------------------------------------------------- subalgebra constructions

LieAlgebra subalgebra_lie_algebra(const Subalgebra& h) {
    const std::size_t s = h.dim();
    std::vector<Vector> b;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            const Vector y = h.adapted_coordinates(h.parent().bracket(h.basis_vector(i), h.basis_vector(j)));
            b.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(s));
        }
    return LieAlgebra(s, std::move(b), h.labels());
}

Representation restrict_rep(const Representation& v, const Subalgebra& h) {
    std::vector<Matrix> m;
    for (std::size_t i = 0; i < h.dim(); ++i) m.push_back(v.act(h.basis_vector(i)));
    return Representation(v.dim(), std::move(m), v.labels());
}

LieAlgebra quotient_lie_algebra(const Subalgebra& h) {
    if (!h.is_ideal()) throw PreconditionError("quotient_lie_algebra: subalgebra is not an ideal");
    const std::size_t s = h.dim();
    const std::size_t t = h.codim();
    std::vector<Vector> b;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const Vector y = h.adapted_coordinates(h.parent().bracket(h.complement_vector(i), h.complement_vector(j)));
            b.emplace_back(y.begin() + static_cast<std::ptrdiff_t>(s), y.end());
        }
    return LieAlgebra(t, std::move(b), h.complement_labels());
}

Representation bott_rep(const Subalgebra& h) {
    const std::size_t s = h.dim();
    const std::size_t t = h.codim();
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < s; ++i) {
        Matrix m(t, t);
        for (std::size_t j = 0; j < t; ++j) {
            const Vector y = h.adapted_coordinates(h.parent().bracket(h.basis_vector(i), h.complement_vector(j)));
            for (std::size_t k = 0; k < t; ++k) m(k, j) = y[s + k];
        }
        out.push_back(std::move(m));
    }
    return Representation(t, std::move(out), h.complement_labels());
}

}  // namespace lass
