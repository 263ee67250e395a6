#pragma once

// Monomials and truncated polynomials in m variables over Q.
//
// Monomials are ordered by total degree, and within a degree by descending
// lexicographic order of their exponent vectors (w1^2, w1 w2, w2^2, ...).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lass/exactq.hpp"

namespace lass {

using Exponent = std::vector<unsigned>;

/// Exponent vectors of total degree `degree` in m variables, descending lex.
std::vector<Exponent> monomials_of_degree(std::size_t m, unsigned degree);

unsigned total_degree(const Exponent& e);

/// Basis of polynomials of degree min_degree..max_degree in m variables.
class MonomialBasis {
public:
    MonomialBasis(std::size_t variables, unsigned max_degree, unsigned min_degree = 0);

    [[nodiscard]] std::size_t variables() const { return variables_; }
    [[nodiscard]] unsigned max_degree() const { return max_degree_; }
    [[nodiscard]] std::size_t size() const { return monomials_.size(); }
    [[nodiscard]] const Exponent& monomial(std::size_t i) const { return monomials_.at(i); }
    [[nodiscard]] unsigned degree(std::size_t i) const { return total_degree(monomials_.at(i)); }
    /// Index of an exponent vector, or size() if it is outside the basis.
    [[nodiscard]] std::size_t index_of(const Exponent& e) const;
    [[nodiscard]] std::string label(std::size_t i) const;

private:
    std::size_t variables_;
    unsigned max_degree_;
    std::vector<Exponent> monomials_;
    std::map<Exponent, std::size_t> position_;
};

/// Sparse polynomial: exponent vector -> coefficient, zero terms omitted.
using Polynomial = std::map<Exponent, Scalar>;

Polynomial truncate(const Polynomial& f, unsigned max_degree);
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Scalar& s, const Polynomial& a);
Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned max_degree);
Polynomial derivative(const Polynomial& f, std::size_t variable);
Polynomial constant(std::size_t variables, const Scalar& c);
Polynomial monomial(const Exponent& e, const Scalar& c = 1);
bool is_zero(const Polynomial& f);
/// Lowest total degree of a nonzero term; f must be nonzero.
unsigned order(const Polynomial& f);

}  // namespace lass
