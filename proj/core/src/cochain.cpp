#include "lass/cochain.hpp"

#include <algorithm>

namespace lass {

GradedSpace::GradedSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (std::size_t n = 0; n < dims_.size(); ++n) {
        std::vector<std::string> l;
        for (std::size_t i = 0; i < dims_[n]; ++i) l.push_back("c" + std::to_string(n) + "_" + std::to_string(i));
        labels_.push_back(std::move(l));
    }
}

GradedSpace::GradedSpace(std::vector<std::size_t> dims, std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
    if (labels_.size() != dims_.size()) throw StructuralError("GradedSpace: label degrees do not match dimensions");
    for (std::size_t n = 0; n < dims_.size(); ++n) {
        if (labels_[n].size() != dims_[n]) throw StructuralError("GradedSpace: label count mismatch in degree " + std::to_string(n));
        auto sorted = labels_[n];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw StructuralError("GradedSpace: duplicate label in degree " + std::to_string(n));
    }
}

std::size_t GradedSpace::dim(int n) const {
    if (n < 0 || n > top()) return 0;
    return dims_[static_cast<std::size_t>(n)];
}

const std::vector<std::string>& GradedSpace::labels(int n) const {
    static const std::vector<std::string> none;
    if (n < 0 || n > top()) return none;
    return labels_[static_cast<std::size_t>(n)];
}

CochainComplex::CochainComplex(GradedSpace spaces, std::vector<Matrix> differentials)
    : spaces_(std::move(spaces)), differentials_(std::move(differentials)) {
    const int top = spaces_.top();
    if (static_cast<int>(differentials_.size()) != std::max(top, 0))
        throw StructuralError("CochainComplex: expected " + std::to_string(std::max(top, 0)) + " differentials, got " +
                              std::to_string(differentials_.size()));
    for (int n = 0; n < top; ++n) {
        const Matrix& d = differentials_[static_cast<std::size_t>(n)];
        if (d.cols() != spaces_.dim(n) || d.rows() != spaces_.dim(n + 1))
            throw StructuralError("CochainComplex: d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) +
                                  "x" + std::to_string(d.cols()));
    }
}

Matrix CochainComplex::differential(int n) const {
    if (n < 0 || n >= top()) return Matrix(dim(n + 1), dim(n));
    return differentials_[static_cast<std::size_t>(n)];
}

Verdict check_complex(const CochainComplex& c) {
    for (int n = 0; n + 1 < c.top(); ++n) {
        if (!(c.differential(n + 1) * c.differential(n)).is_zero())
            return Verdict::fail("d_" + std::to_string(n + 1) + " * d_" + std::to_string(n) + " != 0", {n});
    }
    return Verdict::pass();
}

QuotientSpace cohomology(const CochainComplex& c, int n) {
    const Matrix d_in = c.differential(n - 1);
    const Matrix d_out = c.differential(n);
    if (!(d_out * d_in).is_zero()) throw StructuralError("cohomology: d_" + std::to_string(n) + " d_" + std::to_string(n - 1) + " != 0");
    return QuotientSpace(kernel(d_out), image(d_in));
}

std::vector<std::size_t> betti_numbers(const CochainComplex& c) {
    std::vector<std::size_t> b;
    for (int n = 0; n <= c.top(); ++n) b.push_back(cohomology(c, n).dim());
    return b;
}

long euler_characteristic(const CochainComplex& c) {
    long chi = 0;
    for (int n = 0; n <= c.top(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.dim(n));
    return chi;
}

FilteredComplex::FilteredComplex(CochainComplex complex, std::vector<std::vector<Subspace>> steps)
    : complex_(std::move(complex)), steps_(std::move(steps)) {
    if (static_cast<int>(steps_.size()) != complex_.top() + 1)
        throw StructuralError("FilteredComplex: filtration must list every degree of the complex");
    for (int n = 0; n <= complex_.top(); ++n) {
        auto& s = steps_[static_cast<std::size_t>(n)];
        for (const auto& sub : s)
            if (sub.ambient_dim() != complex_.dim(n))
                throw StructuralError("FilteredComplex: filtration step has wrong ambient in degree " + std::to_string(n));
        while (!s.empty() && s.back().dim() == 0) s.pop_back();
        if (!s.empty()) length_ = std::max(length_, static_cast<int>(s.size()) - 1);
    }
}

FilteredComplex FilteredComplex::trivial(CochainComplex complex) {
    std::vector<std::vector<Subspace>> steps;
    for (int n = 0; n <= complex.top(); ++n) steps.push_back({Subspace::full(complex.dim(n))});
    return FilteredComplex(std::move(complex), std::move(steps));
}

Subspace FilteredComplex::step(int p, int n) const {
    const std::size_t d = complex_.dim(n);
    if (n < 0 || n > top()) return Subspace::zero(0);
    if (p <= 0) {
        const auto& s = steps_[static_cast<std::size_t>(n)];
        return s.empty() ? Subspace::full(d) : s.front();
    }
    const auto& s = steps_[static_cast<std::size_t>(n)];
    if (static_cast<std::size_t>(p) >= s.size()) return Subspace::zero(d);
    return s[static_cast<std::size_t>(p)];
}

Verdict check_filtration(const FilteredComplex& f) {
    for (int n = 0; n <= f.top(); ++n) {
        const std::size_t d = f.complex().dim(n);
        if (d > 0 && f.step(0, n).dim() != d) return Verdict::fail("F^0 C^" + std::to_string(n) + " is not the whole space", {0, n});
        const Matrix dn = f.complex().differential(n);
        for (int p = 0; p <= f.length() + 1; ++p) {
            const Subspace fp = f.step(p, n);
            if (!fp.contains(f.step(p + 1, n)))
                return Verdict::fail("F^" + std::to_string(p + 1) + " not contained in F^" + std::to_string(p) +
                                         " in degree " + std::to_string(n),
                                     {p + 1, n});
            if (n < f.top() && !f.step(p, n + 1).contains(image(dn, fp)))
                return Verdict::fail("d does not preserve F^" + std::to_string(p) + " in degree " + std::to_string(n), {p, n});
        }
    }
    return Verdict::pass();
}

std::vector<std::size_t> induced_filtration_on_H(const FilteredComplex& f, int n) {
    const auto& c = f.complex();
    const Subspace cycles = kernel(c.differential(n));
    const Subspace boundaries = image(c.differential(n - 1));
    std::vector<std::size_t> dims;
    for (int p = 0; p <= f.length() + 1; ++p) {
        const Subspace fp_cycles = intersect(cycles, f.step(p, n));
        dims.push_back(sum(fp_cycles, boundaries).dim() - boundaries.dim());
    }
    return dims;
}

}  // namespace lass
