#include <doctest.h>

#include "lass/exactq.hpp"
#include "support.hpp"

using namespace lass;

TEST_CASE("scalar text round trip") {
    CHECK(parse_scalar("3") == 3);
    CHECK(parse_scalar("-1/2") == Scalar(-1, 2));
    CHECK(parse_scalar("4/6") == Scalar(2, 3));
    CHECK(to_string(Scalar(-1, 2)) == "-1/2");
    CHECK(to_string(Scalar(6, 3)) == "2");
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("rank, determinant, inverse and solve on small matrices") {
    const Matrix a{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(rank(a) == 2);
    CHECK(determinant(a) == 0);
    CHECK_FALSE(inverse(a).has_value());

    const Matrix b{{2, 1}, {1, 1}};
    CHECK(determinant(b) == 1);
    const auto bi = inverse(b);
    REQUIRE(bi);
    CHECK(b * *bi == Matrix::identity(2));

    const auto x = solve(a, Vector{6, 15, 24});
    REQUIRE(x);
    CHECK(a * *x == Vector{6, 15, 24});
    CHECK_FALSE(solve(a, Vector{1, 0, 0}).has_value());
}

TEST_CASE("shape mismatches raise DimensionError") {
    const Matrix a(2, 3);
    const Matrix b(2, 3);
    CHECK_THROWS_AS(a * b, DimensionError);
    CHECK_THROWS_AS(hstack(a, Matrix(3, 1)), DimensionError);
    CHECK_THROWS_AS(vstack(a, Matrix(1, 2)), DimensionError);
    CHECK_THROWS_AS((a * Vector{1, 2}), DimensionError);
}

TEST_CASE("kronecker and block diagonal") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix i = Matrix::identity(2);
    const Matrix k = kronecker(a, i);
    CHECK(k.rows() == 4);
    CHECK(k(2, 0) == 3);
    CHECK(k(3, 1) == 3);
    CHECK(k(2, 1) == 0);
    const Matrix bd = block_diagonal(a, Matrix{{5}});
    CHECK(bd(2, 2) == 5);
    CHECK(bd(0, 2) == 0);
}

TEST_CASE("rref rank agrees with a separate elimination on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> sz(1, 7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = static_cast<std::size_t>(sz(rng));
        const std::size_t c = static_cast<std::size_t>(sz(rng));
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? Scalar(0) : test::small_rational(rng);
        CHECK(rank(m) == test::naive_rank(m));
        CHECK(rank(m.transpose()) == rank(m));
        CHECK(kernel(m).dim() + rank(m) == c);
        CHECK(image(m).dim() == rank(m));
    }
}

TEST_CASE("subspaces have canonical bases") {
    const Subspace a(Matrix{{1, 1}, {1, 2}, {0, 0}});
    const Subspace b(Matrix{{2}, {0}, {0}});
    const Subspace c(Matrix{{0}, {3}, {0}});
    CHECK(a == sum(b, c));
    CHECK(a.dim() == 2);
    CHECK(a.contains(Vector{5, -1, 0}));
    CHECK_FALSE(a.contains(Vector{0, 0, 1}));
    CHECK(a.coordinates(Vector{5, -1, 0}) == Vector{5, -1});
    CHECK_THROWS_AS((void)a.coordinates(Vector{0, 0, 1}), ContainmentError);
    const Matrix ann = a.annihilator();
    CHECK(kernel(ann) == a);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng() % 5;
        auto random_space = [&] {
            const std::size_t k = rng() % (n + 1);
            std::vector<Vector> cols;
            for (std::size_t i = 0; i < k; ++i) {
                Vector v(n);
                for (auto& x : v) x = rng() % 2 ? test::small_rational(rng) : Scalar(0);
                cols.push_back(v);
            }
            return Subspace(n, cols);
        };
        const Subspace a = random_space();
        const Subspace b = random_space();
        const Subspace s = sum(a, b);
        const Subspace i = intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(s.contains(a));
        CHECK(a.contains(i));
        CHECK(b.contains(i));
    }
}

TEST_CASE("preimage and image under a map") {
    const Matrix m{{1, 0, 0}, {0, 1, 0}};
    const Subspace line(Matrix{{1}, {0}});
    const Subspace pre = preimage(m, line);
    CHECK(pre.dim() == 2);
    CHECK(pre.contains(Vector{1, 0, 0}));
    CHECK(pre.contains(Vector{0, 0, 1}));
    CHECK(image(m, pre) == line);
}

TEST_CASE("quotients carry representatives and a projector") {
    const Subspace num = Subspace::full(3);
    const Subspace den(Matrix{{1}, {1}, {0}});
    const QuotientSpace q = quotient(num, den);
    CHECK(q.dim() == 2);
    CHECK(q.projector() * q.representatives() == Matrix::identity(2));
    const Vector zero{0, 0};
    CHECK(q.project(Vector{1, 1, 0}) == zero);
    CHECK_THROWS_AS(quotient(den, num), ContainmentError);

    const QuotientSpace trivial = quotient(den, den);
    CHECK(trivial.dim() == 0);
}
