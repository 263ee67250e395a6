#include "lass/jets.hpp"

#include <functional>
#include <tuple>

#include "lass/exterior.hpp"

namespace lass {

namespace {

Exponent unit(std::size_t m, std::size_t j) {
    Exponent e(m, 0);
    e[j] = 1;
    return e;
}

Scalar coefficient(const Polynomial& f, const Exponent& e) {
    const auto it = f.find(e);
    return it == f.end() ? Scalar(0) : it->second;
}

std::string site3(std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string monomial_text(const Exponent& e) {
    std::string out = "[";
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
    return out + "]";
}

/// First nonzero term of f as " at monomial [..]".
std::string where(const Polynomial& f) {
    for (const auto& [e, c] : f)
        if (sgn(c) != 0) return " at monomial " + monomial_text(e);
    return "";
}

Matrix operator_matrix(const MonomialBasis& basis, const std::function<Polynomial(const Polynomial&)>& op) {
    Matrix out(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const Polynomial image = op(monomial(basis.monomial(col)));
        for (const auto& [e, c] : image) {
            const std::size_t row = basis.index_of(e);
            if (row < basis.size()) out(row, col) += c;
        }
    }
    return out;
}

/// Polynomial degree of each coordinate of C^n.
std::vector<unsigned> coordinate_degrees(const JetInstance& inst, int n) {
    const MonomialBasis basis = jet_monomials(inst.algebroid);
    const std::size_t mv = inst.v.dim();
    const std::size_t forms = binomial(inst.algebroid.rank(), static_cast<std::size_t>(n));
    std::vector<unsigned> out;
    out.reserve(forms * basis.size() * mv);
    for (std::size_t i = 0; i < forms; ++i)
        for (std::size_t mono = 0; mono < basis.size(); ++mono)
            for (std::size_t a = 0; a < mv; ++a) out.push_back(basis.degree(mono));
    return out;
}

}  // namespace

PolyJetAlgebroid::PolyJetAlgebroid(std::size_t rank, std::size_t base_dim, unsigned order,
                                   std::vector<std::vector<Polynomial>> anchor, std::vector<Polynomial> structure)
    : rank_(rank), base_dim_(base_dim), order_(order), anchor_(std::move(anchor)), structure_(std::move(structure)) {
    if (anchor_.size() != rank_) throw StructuralError("jet algebroid: expected one anchor field per generator");
    if (structure_.size() != rank_ * rank_ * rank_)
        throw StructuralError("jet algebroid: structure functions have the wrong count");
    for (auto& field : anchor_) {
        if (field.size() != base_dim_) throw StructuralError("jet algebroid: anchor field has the wrong length");
        for (auto& p : field) {
            for (const auto& [e, c] : p) {
                if (e.size() != base_dim_) throw StructuralError("jet algebroid: monomial has the wrong length");
                if (total_degree(e) == 0 && sgn(c) != 0)
                    throw StructuralError("jet algebroid: anchor does not vanish at the origin");
            }
            p = truncate(p, order_);
        }
    }
    for (auto& c : structure_) {
        for (const auto& [e, x] : c)
            if (e.size() != base_dim_) throw StructuralError("jet algebroid: monomial has the wrong length");
        c = truncate(c, order_);
    }
}

PolyJetAlgebroid PolyJetAlgebroid::action(const LieAlgebra& g, const Representation& rho, unsigned order) {
    const std::size_t n = g.dim();
    const std::size_t m = rho.dim();
    if (rho.generators() != n) throw DimensionError("action algebroid: representation does not match the algebra");
    if (const Verdict flat = check_flat(g, rho); !flat) throw PreconditionError("action algebroid: " + flat.detail);
    std::vector<std::vector<Polynomial>> anchor(n, std::vector<Polynomial>(m));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (sgn(rho.action(a)(i, j)) != 0) anchor[a][i][unit(m, j)] = -rho.action(a)(i, j);
    std::vector<Polynomial> structure(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d)
                if (sgn(g.structure(a, b)[d]) != 0) structure[(a * n + b) * n + d] = constant(m, g.structure(a, b)[d]);
    return PolyJetAlgebroid(n, m, order, std::move(anchor), std::move(structure));
}

Polynomial PolyJetAlgebroid::apply_anchor(std::size_t a, const Polynomial& f) const {
    Polynomial out;
    for (std::size_t i = 0; i < base_dim_; ++i) out = add(out, multiply(anchor_[a][i], derivative(f, i), order_));
    return out;
}

bool PolyJetAlgebroid::is_linear() const {
    for (const auto& field : anchor_)
        for (const auto& p : field)
            for (const auto& [e, c] : p)
                if (total_degree(e) != 1 && sgn(c) != 0) return false;
    for (const auto& s : structure_)
        for (const auto& [e, c] : s)
            if (total_degree(e) != 0 && sgn(c) != 0) return false;
    return true;
}

PolyJetAlgebroid PolyJetAlgebroid::with_order(unsigned order) const {
    return PolyJetAlgebroid(rank_, base_dim_, order, anchor_, structure_);
}

LieAlgebra PolyJetAlgebroid::fiber_algebra() const {
    std::vector<Vector> brackets;
    const Exponent zero(base_dim_, 0);
    for (std::size_t a = 0; a < rank_; ++a)
        for (std::size_t b = 0; b < rank_; ++b) {
            Vector v(rank_);
            for (std::size_t d = 0; d < rank_; ++d) v[d] = coefficient(structure(a, b, d), zero);
            brackets.push_back(std::move(v));
        }
    return LieAlgebra(rank_, std::move(brackets));
}

Representation PolyJetAlgebroid::normal_rep() const {
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < rank_; ++a) {
        Matrix m(base_dim_, base_dim_);
        for (std::size_t i = 0; i < base_dim_; ++i)
            for (std::size_t j = 0; j < base_dim_; ++j) m(j, i) = coefficient(anchor_[a][i], unit(base_dim_, j));
        out.push_back(std::move(m));
    }
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < base_dim_; ++j) labels.push_back("w" + std::to_string(j + 1));
    return Representation(base_dim_, std::move(out), std::move(labels));
}

Verdict check_axioms_mod(const PolyJetAlgebroid& A) {
    const std::size_t n = A.rank();
    const std::size_t m = A.base_dim();
    const unsigned k = A.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d) {
                const Polynomial s = add(A.structure(a, b, d), A.structure(b, a, d));
                if (!is_zero(s))
                    return Verdict::fail("antisymmetry fails for c" + site3(a, b, d) + where(s),
                                         {static_cast<long>(a), static_cast<long>(b), static_cast<long>(d)});
            }
    // [X_a, X_b]^i = X_a(P_b^i) - X_b(P_a^i) against Σ_d c_ab^d P_d^i.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t i = 0; i < m; ++i) {
                Polynomial diff = add(A.apply_anchor(a, A.anchor(b, i)), scale(-1, A.apply_anchor(b, A.anchor(a, i))));
                for (std::size_t d = 0; d < n; ++d)
                    diff = add(diff, scale(-1, multiply(A.structure(a, b, d), A.anchor(d, i), k)));
                if (!is_zero(diff))
                    return Verdict::fail("anchor is not bracket-compatible for generators (" + std::to_string(a) + "," +
                                             std::to_string(b) + "), coordinate " + std::to_string(i) + where(diff),
                                         {static_cast<long>(a), static_cast<long>(b), static_cast<long>(i)});
            }
    // Σ_cyc ( Σ_d c_ab^d c_dc^f - X_c(c_ab^f) ) = 0.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t f = 0; f < n; ++f) {
                    Polynomial total;
                    const std::size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                    for (const auto& t : cyc) {
                        for (std::size_t d = 0; d < n; ++d)
                            total = add(total, multiply(A.structure(t[0], t[1], d), A.structure(d, t[2], f), k));
                        total = add(total, scale(-1, A.apply_anchor(t[2], A.structure(t[0], t[1], f))));
                    }
                    if (!is_zero(total))
                        return Verdict::fail("Jacobi identity fails for generators " + site3(a, b, c) + ", component " +
                                                 std::to_string(f) + where(total),
                                             {static_cast<long>(a), static_cast<long>(b), static_cast<long>(c)});
                }
    return Verdict::pass();
}

MonomialBasis jet_monomials(const PolyJetAlgebroid& a) { return MonomialBasis(a.base_dim(), a.order()); }

JetInstance jet_complex(const PolyJetAlgebroid& A, const Representation& v) {
    if (const Verdict ax = check_axioms_mod(A); !ax) throw PreconditionError("jet_complex: " + ax.detail);
    if (v.generators() != A.rank()) throw DimensionError("jet_complex: representation does not match the fiber algebra");
    const std::size_t n = A.rank();
    const MonomialBasis basis = jet_monomials(A);
    const Matrix id_v = Matrix::identity(v.dim());
    const Matrix id_p = Matrix::identity(basis.size());

    KoszulData data;
    data.rank = n;
    data.module_dim = basis.size() * v.dim();
    for (std::size_t a = 0; a < n; ++a) {
        const Matrix lie = operator_matrix(basis, [&](const Polynomial& f) { return A.apply_anchor(a, f); });
        data.action.push_back(kronecker(lie, id_v) + kronecker(id_p, v.action(a)));
    }
    data.bracket.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t d = 0; d < n; ++d) {
                const Polynomial& c = A.structure(a, b, d);
                if (is_zero(c)) continue;
                const Matrix mult = operator_matrix(basis, [&](const Polynomial& f) { return multiply(c, f, A.order()); });
                data.bracket[a * n + b].emplace_back(d, kronecker(mult, id_v));
            }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t b = 0; b < v.dim(); ++b) {
            std::string label = basis.label(i);
            if (v.dim() > 1 || !v.labels().empty())
                label += "⊗" + (v.labels().empty() ? "v" + std::to_string(b + 1) : v.labels()[b]);
            data.module_labels.push_back(std::move(label));
        }
    CochainComplex complex = koszul_complex(data);
    if (const Verdict sq = check_complex(complex); !sq)
        throw StructuralError("jet_complex: d does not square to zero (" + sq.detail + ")");

    std::vector<std::vector<Subspace>> steps;
    const std::size_t mv = v.dim();
    for (int deg = 0; deg <= complex.top(); ++deg) {
        const std::size_t forms = binomial(n, static_cast<std::size_t>(deg));
        std::vector<Subspace> by_p;
        for (unsigned p = 0; p <= A.order(); ++p) {
            std::vector<std::size_t> coords;
            for (std::size_t i = 0; i < forms; ++i)
                for (std::size_t mono = 0; mono < basis.size(); ++mono)
                    if (basis.degree(mono) >= p)
                        for (std::size_t b = 0; b < mv; ++b) coords.push_back((i * basis.size() + mono) * mv + b);
            by_p.push_back(Subspace::coordinate(complex.dim(deg), coords));
        }
        steps.push_back(std::move(by_p));
    }
    FilteredComplex filtered(std::move(complex), std::move(steps));
    auto engine = std::make_shared<const SpectralSequence>(filtered);
    return JetInstance{A, v, std::move(filtered), std::move(engine)};
}

JetInstance jet_complex(const PolyJetAlgebroid& a) {
    return jet_complex(a, Representation::trivial(a.fiber_algebra()));
}

std::size_t sym_cohomology_dim(const PolyJetAlgebroid& a, const Representation& v, std::size_t j, int n) {
    const LieAlgebra g0 = a.fiber_algebra();
    const CochainComplex c = ce_complex(g0, tensor_rep(sym_power_rep(a.normal_rep(), j), v));
    if (n < 0 || n > c.top()) return 0;
    return cohomology(c, n).dim();
}

JetE1Report e1_invariant_check(const JetInstance& inst) {
    JetE1Report out;
    const int k = static_cast<int>(inst.algebroid.order());
    const int top = inst.complex().top();
    for (int p = 0; p <= k + 1; ++p)
        for (int n = 0; n <= top; ++n) {
            JetE1Cell cell{p, n - p, inst.ss().dim(1, p, n - p), 0, false};
            if (p <= k) cell.oracle_dim = sym_cohomology_dim(inst.algebroid, inst.v, static_cast<std::size_t>(p), n);
            cell.ok = cell.engine_dim == cell.oracle_dim;
            out.cells.push_back(cell);
        }
    out.verdict = Verdict::pass();
    for (const auto& c : out.cells)
        if (!c.ok) {
            out.verdict = Verdict::fail("E_1 mismatch at (" + std::to_string(c.p) + "," + std::to_string(c.q) +
                                            "): engine " + std::to_string(c.engine_dim) + ", oracle " +
                                            std::to_string(c.oracle_dim),
                                        {c.p, c.q});
            break;
        }
    return out;
}

LinearisableReport stabilization_report(const JetInstance& inst) {
    LinearisableReport out;
    const SpectralSequence& ss = inst.ss();
    for (int r = 1; r <= ss.last_page(); ++r)
        for (const auto& [p, q, rk] : ss.table(r).ranks) out.nonzero_differentials.emplace_back(r, p, q, rk);
    out.betti = betti_numbers(inst.complex());
    for (int n = 0; n <= inst.complex().top(); ++n) {
        std::size_t total = 0;
        for (unsigned j = 0; j <= inst.algebroid.order(); ++j) total += sym_cohomology_dim(inst.algebroid, inst.v, j, n);
        out.product_formula.push_back(total);
    }
    out.degree_preserving = true;
    for (int n = 0; n < inst.complex().top() && out.degree_preserving; ++n) {
        const Matrix d = inst.complex().differential(n);
        const auto rows = coordinate_degrees(inst, n + 1);
        const auto cols = coordinate_degrees(inst, n);
        for (std::size_t i = 0; i < d.rows() && out.degree_preserving; ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (rows[i] != cols[j] && sgn(d(i, j)) != 0) {
                    out.degree_preserving = false;
                    break;
                }
    }
    if (!out.nonzero_differentials.empty()) {
        const auto& [r, p, q, rk] = out.nonzero_differentials.front();
        out.verdict = Verdict::fail("d_" + std::to_string(r) + " has rank " + std::to_string(rk) + " at (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")",
                                    {r, p, q});
    } else if (out.betti != out.product_formula) {
        out.verdict = Verdict::fail("Betti numbers differ from the product formula");
    } else if (!out.degree_preserving) {
        out.verdict = Verdict::fail("E_1-degenerate but d does not preserve polynomial degree");
    } else {
        out.verdict = Verdict::pass();
    }
    return out;
}

LinearisableReport linearisable_stabilization_check(const JetInstance& inst) {
    if (!inst.algebroid.is_linear())
        throw PreconditionError("linearisable_stabilization_check: anchor is not linear or structure is not constant");
    return stabilization_report(inst);
}

Verdict scalar_pullback_check(const JetInstance& inst, const Scalar& lambda) {
    if (sgn(lambda) == 0) throw PreconditionError("scalar_pullback_check: lambda must be nonzero");
    auto scaling = [&](int n) {
        const auto degrees = coordinate_degrees(inst, n);
        Matrix s(degrees.size(), degrees.size());
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            Scalar x = 1;
            for (unsigned e = 0; e < degrees[i]; ++e) x *= lambda;
            s(i, i) = x;
        }
        return s;
    };
    for (int n = 0; n < inst.complex().top(); ++n) {
        const Matrix d = inst.complex().differential(n);
        if (d * scaling(n) != scaling(n + 1) * d)
            return Verdict::fail("m_lambda^* does not commute with d in degree " + std::to_string(n), {n});
    }
    return Verdict::pass();
}

}  // namespace lass
