#include "lass/exactq.hpp"

#include <algorithm>
#include <regex>

namespace lass {

Scalar parse_scalar(std::string_view text) {
    static const std::regex pattern(R"(\s*[+-]?[0-9]+(/[0-9]+)?\s*)");
    const std::string s(text);
    if (!std::regex_match(s, pattern)) {
        throw std::invalid_argument("not a rational number: \"" + s + "\"");
    }
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
    }
    // mpq_class rejects a leading '+' and surrounding whitespace.
    std::string cleaned;
    for (char ch : s) {
        if (ch != ' ' && ch != '\t' && ch != '+') cleaned.push_back(ch);
    }
    Scalar x(cleaned, 10);
    x.canonicalize();
    return x;
}

std::string to_string(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return c.get_str();
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionError("column range out of bounds");
    Matrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> which) const {
    Matrix m(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(which[i], c);
    return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> which) const {
    Matrix m(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < which.size(); ++i) m(r, i) = (*this)(r, which[i]);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) m(i, j) += aik * b(k, j);
            }
        }
    }
    return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector product: length mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (sgn(x[k]) != 0) y[i] += a(i, k) * x[k];
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape mismatch");
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shape mismatch");
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
    return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}};
    Matrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
        }
        const Scalar inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a(i, col)) == 0) continue;
            const Scalar factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                if (sgn(a(row, j)) != 0) a(i, j) -= factor * a(row, j);
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (sgn(a(i, col)) == 0) continue;
            const Scalar factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const auto r = rref(hstack(m, Matrix::identity(n)));
    if (r.rank() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    return r.reduced.columns(n, n);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto r = rref(aug);
    Vector x(m.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return x;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const Matrix& spanning) : ambient_dim_(spanning.rows()) {
    const auto r = rref(spanning.transpose());
    basis_ = Matrix(ambient_dim_, r.rank());
    for (std::size_t j = 0; j < r.rank(); ++j)
        for (std::size_t i = 0; i < ambient_dim_; ++i) basis_(i, j) = r.reduced(j, i);
    pivots_ = r.pivots;
}

Subspace::Subspace(std::size_t ambient_dim, std::span<const Vector> spanning)
    : Subspace(Matrix::from_columns(ambient_dim, spanning)) {}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Matrix(ambient_dim, 0)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(Matrix::identity(ambient_dim)); }

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> coords) {
    Matrix m(ambient_dim, coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) m(coords[j], j) = 1;
    return Subspace(m);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim_) throw DimensionError("Subspace::contains: ambient mismatch");
    Vector w = v;
    for (std::size_t j = 0; j < dim(); ++j) {
        const Scalar c = v[pivots_[j]];
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i < ambient_dim_; ++i) w[i] -= c * basis_(i, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim_) throw DimensionError("Subspace::contains: ambient mismatch");
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.basis_vector(j))) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw ContainmentError("vector is not in the subspace");
    Vector c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = v[pivots_[j]];
    return c;
}

Matrix Subspace::annihilator() const { return kernel(basis_.transpose()).basis().transpose(); }

Subspace kernel(const Matrix& m) {
    const auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.reduced(i, f);
        vectors.push_back(std::move(x));
    }
    return Subspace(m.cols(), vectors);
}

Subspace image(const Matrix& m) { return Subspace(m); }

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("image: map domain does not match subspace ambient");
    return Subspace(m * s.basis());
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("sum: ambient dimension mismatch");
    return Subspace(hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect: ambient dimension mismatch");
    // (x, y) in ker [A | -B]  <=>  A x = B y.
    const Matrix stacked = hstack(a.basis(), Scalar(-1) * b.basis());
    const Subspace k = kernel(stacked);
    const Matrix top = k.basis().select_rows([&] {
        std::vector<std::size_t> idx(a.dim());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return idx;
    }());
    return Subspace(a.basis() * top);
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (s.ambient_dim() != m.rows()) throw DimensionError("preimage: subspace ambient does not match map codomain");
    const Matrix ann = s.annihilator();
    if (ann.rows() == 0) return Subspace::full(m.cols());
    return kernel(ann * m);
}

// ---------------------------------------------------------------- QuotientSpace

QuotientSpace::QuotientSpace(Subspace numerator, Subspace denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (numerator_.ambient_dim() != denominator_.ambient_dim())
        throw DimensionError("quotient: ambient dimension mismatch");
    if (!numerator_.contains(denominator_)) throw ContainmentError("quotient: denominator not contained in numerator");

    const std::size_t k = numerator_.dim();
    const std::size_t n = numerator_.ambient_dim();
    std::vector<Vector> den_coords;
    for (std::size_t j = 0; j < denominator_.dim(); ++j)
        den_coords.push_back(numerator_.coordinates(denominator_.basis_vector(j)));
    const Subspace den_in_num(k, den_coords);

    std::vector<bool> is_pivot(k, false);
    for (auto p : den_in_num.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < k; ++i)
        if (!is_pivot[i]) free.push_back(i);

    representatives_ = numerator_.basis().select_columns(free);

    // x -> numerator coordinates -> reduce by the denominator echelon basis -> free coordinates.
    Matrix to_num(k, n);
    for (std::size_t j = 0; j < k; ++j) to_num(j, numerator_.pivots()[j]) = 1;
    Matrix reduce = Matrix::identity(k);
    const Matrix& d = den_in_num.basis();
    for (std::size_t j = 0; j < den_in_num.dim(); ++j) {
        const std::size_t p = den_in_num.pivots()[j];
        for (std::size_t i = 0; i < k; ++i) reduce(i, p) -= d(i, j);
    }
    Matrix select(free.size(), k);
    for (std::size_t i = 0; i < free.size(); ++i) select(i, free[i]) = 1;
    projector_ = select * reduce * to_num;
}

QuotientSpace quotient(const Subspace& num, const Subspace& den) { return QuotientSpace(num, den); }

}  // namespace lass
