#pragma once

// Exact rational linear algebra over Q.
//
// Every vector space in the library is a coordinate space Q^n. Subspaces are
// kept in reduced column echelon form so that two subspaces with the same span
// carry identical basis data, and quotients carry explicit representatives and
// a projector onto quotient coordinates.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lass {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Thrown when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a quotient is requested for a denominator not contained in the numerator.
class ContainmentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& x);

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Matrix whose columns are the given vectors, all of length `rows`.
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Vector column(std::size_t c) const;
    [[nodiscard]] Vector row(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    /// Columns [first, first + count).
    [[nodiscard]] Matrix columns(std::size_t first, std::size_t count) const;
    [[nodiscard]] Matrix select_rows(std::span<const std::size_t> which) const;
    [[nodiscard]] Matrix select_columns(std::span<const std::size_t> which) const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);

/// Side-by-side concatenation; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// Vertical concatenation; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block diagonal matrix diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Some x with m * x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// A linear subspace of Q^ambient_dim.
///
/// The basis is the reduced column echelon form of any spanning set: column j
/// has a 1 in row pivot(j), every other basis column is 0 there, and pivots
/// increase with j. Equal spans therefore compare equal with operator==.
class Subspace {
public:
    Subspace() = default;
    /// Span of the columns of `spanning`; ambient dimension is spanning.rows().
    explicit Subspace(const Matrix& spanning);
    Subspace(std::size_t ambient_dim, std::span<const Vector> spanning);

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    /// Span of the standard basis vectors e_i for i in `coords`.
    static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> coords);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t dim() const { return pivots_.size(); }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    [[nodiscard]] Vector basis_vector(std::size_t j) const { return basis_.column(j); }

    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// Coordinates of v in the echelon basis. Throws ContainmentError if v is not in the span.
    [[nodiscard]] Vector coordinates(const Vector& v) const;
    /// Matrix of linear functionals whose common kernel is this subspace.
    [[nodiscard]] Matrix annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_dim_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {x : m x in s}.
Subspace preimage(const Matrix& m, const Subspace& s);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& m, const Subspace& s);

/// num / den with chosen representatives and a projector onto quotient coordinates.
///
/// Representatives are the numerator basis vectors at coordinates that are not
/// pivots of the denominator's echelon form in numerator coordinates. The
/// projector is only meaningful on vectors of the numerator.
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(Subspace numerator, Subspace denominator);

    [[nodiscard]] std::size_t ambient_dim() const { return numerator_.ambient_dim(); }
    [[nodiscard]] std::size_t dim() const { return representatives_.cols(); }
    [[nodiscard]] const Subspace& numerator() const { return numerator_; }
    [[nodiscard]] const Subspace& denominator() const { return denominator_; }
    /// ambient_dim x dim, one column per quotient basis vector.
    [[nodiscard]] const Matrix& representatives() const { return representatives_; }
    /// dim x ambient_dim.
    [[nodiscard]] const Matrix& projector() const { return projector_; }

    [[nodiscard]] Vector project(const Vector& v) const { return projector_ * v; }
    [[nodiscard]] Vector representative(std::size_t j) const { return representatives_.column(j); }

private:
    Subspace numerator_;
    Subspace denominator_;
    Matrix representatives_;
    Matrix projector_;
};

QuotientSpace quotient(const Subspace& num, const Subspace& den);

}  // namespace lass
