#include <doctest.h>

#include "lass/ce.hpp"
#include "lass/exterior.hpp"
#include "support.hpp"

using namespace lass;

namespace {

LieAlgebra heisenberg() {
    return LieAlgebra::from_brackets(3, {{0, 1, {0, 0, 1}}}, {"x", "y", "z"});
}

LieAlgebra sl2() {
    return LieAlgebra::from_brackets(3, {{0, 1, {-2, 0, 0}}, {1, 2, {0, 0, -2}}, {0, 2, {0, 1, 0}}}, {"e", "h", "f"});
}

Representation sl2_standard() {
    return Representation(2, {Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, -1}}, Matrix{{0, 0}, {1, 0}}}, {"u1", "u2"});
}

}  // namespace

TEST_CASE("brackets are antisymmetric and sl2 satisfies Jacobi") {
    const LieAlgebra g = sl2();
    CHECK(check_antisymmetry(g));
    CHECK(check_jacobi(g));
    CHECK(g.bracket(Vector{0, 1, 0}, Vector{1, 0, 0}) == Vector{2, 0, 0});
    CHECK(g.bracket(Vector{1, 0, 0}, Vector{0, 0, 1}) == Vector{0, 1, 0});
}

TEST_CASE("a Jacobi failure names the basis triple") {
    // [x,y] = z and [x,z] = x
    const LieAlgebra bad = LieAlgebra::from_brackets(3, {{0, 1, {0, 0, 1}}, {0, 2, {1, 0, 0}}});
    const Verdict v = check_jacobi(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.site == std::vector<long>{0, 1, 2});
}

TEST_CASE("the Heisenberg differential matches the hand computation") {
    // dξ_z = -ξ_x∧ξ_y, all other d's vanish.
    const CochainComplex c = ce_complex(heisenberg());
    const Matrix d1 = c.differential(1);
    const Matrix expect{{0, 0, -1}, {0, 0, 0}, {0, 0, 0}};
    CHECK(d1 == expect);
    CHECK(c.differential(0).is_zero());
    CHECK(c.differential(2).is_zero());
    CHECK(betti_numbers(c) == std::vector<std::size_t>{1, 2, 2, 1});
}

TEST_CASE("abelian algebras have binomial Betti numbers") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto b = betti_numbers(ce_complex(LieAlgebra::abelian(n)));
        for (std::size_t k = 0; k <= n; ++k) CHECK(b[k] == binomial(n, k));
    }
}

TEST_CASE("sl2 with adjoint and standard coefficients is acyclic") {
    const LieAlgebra g = sl2();
    CHECK(betti_numbers(ce_complex(g, Representation::adjoint(g))) == std::vector<std::size_t>{0, 0, 0, 0});
    const Representation v = sl2_standard();
    CHECK(check_flat(g, v));
    CHECK(betti_numbers(ce_complex(g, v)) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("Euler characteristic vanishes for nonzero algebras") {
    const LieAlgebra g = sl2();
    CHECK(euler_characteristic(ce_complex(g, sl2_standard())) == 0);
    CHECK(euler_characteristic(ce_complex(heisenberg())) == 0);
}

TEST_CASE("non-flat representations are caught") {
    const LieAlgebra g = sl2();
    const Representation bad(2, {Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, 1}}, Matrix{{0, 0}, {1, 0}}});
    const Verdict v = check_flat(g, bad);
    CHECK_FALSE(v.ok);
    CHECK(v.site.size() == 2);
    CHECK_THROWS(Representation(2, {Matrix(2, 2)}).act(Vector{1, 2}));
}

TEST_CASE("derived representations stay flat") {
    const LieAlgebra g = sl2();
    const Representation v = sl2_standard();
    CHECK(check_flat(g, dual_rep(v)));
    CHECK(check_flat(g, tensor_rep(v, v)));
    CHECK(check_flat(g, exterior_power_rep(Representation::adjoint(g), 2)));
    const Representation s3 = sym_power_rep(v, 3);
    CHECK(s3.dim() == 4);
    CHECK(check_flat(g, s3));
    CHECK(exterior_power_rep(v, 2).dim() == 1);
    CHECK(exterior_power_rep(v, 2).action(1).is_zero());
}

TEST_CASE("subalgebras, ideals and quotients") {
    const LieAlgebra g = sl2();
    const Subalgebra cartan(g, Matrix{{0}, {1}, {0}});
    CHECK(cartan.is_closed());
    CHECK_FALSE(cartan.is_ideal());
    CHECK(cartan.dim() == 1);
    CHECK(cartan.codim() == 2);
    CHECK(cartan.adapted_basis() * cartan.adapted_inverse() == Matrix::identity(3));

    const Subalgebra borel(g, Matrix{{1, 0}, {0, 1}, {0, 0}});
    CHECK(borel.is_closed());
    CHECK_THROWS_AS(Subalgebra(g, Matrix{{1, 0}, {0, 0}, {0, 1}}), PreconditionError);

    const Subalgebra center(heisenberg(), Matrix{{0}, {0}, {1}});
    CHECK(center.is_ideal());
    const LieAlgebra q = quotient_lie_algebra(center);
    CHECK(q.dim() == 2);
    CHECK(betti_numbers(ce_complex(q)) == std::vector<std::size_t>{1, 2, 1});
    CHECK_THROWS_AS(quotient_lie_algebra(cartan), PreconditionError);
}

TEST_CASE("Bott representation of h on g/h") {
    const LieAlgebra g = sl2();
    const Subalgebra cartan(g, Matrix{{0}, {1}, {0}});
    const Representation b = bott_rep(cartan);
    CHECK(b.dim() == 2);
    CHECK(b.generators() == 1);
    // h acts on e and f by the weights 2 and -2
    std::vector<Scalar> eig{b.action(0)(0, 0), b.action(0)(1, 1)};
    std::sort(eig.begin(), eig.end());
    CHECK(eig == std::vector<Scalar>{-2, 2});
    CHECK(b.action(0)(0, 1) == 0);
}

TEST_CASE("restriction to a subalgebra") {
    const LieAlgebra g = sl2();
    const Subalgebra cartan(g, Matrix{{0}, {1}, {0}});
    const Representation r = restrict_rep(sl2_standard(), cartan);
    CHECK(r.generators() == 1);
    CHECK(r.action(0) == (Matrix{{1, 0}, {0, -1}}));
    const LieAlgebra h = subalgebra_lie_algebra(cartan);
    CHECK(h.dim() == 1);
}

TEST_CASE("change of basis keeps the cohomology") {
    std::mt19937_64 rng(5);
    const LieAlgebra g = sl2();
    for (int t = 0; t < 5; ++t) {
        const Matrix b = test::random_invertible(rng, 3);
        const LieAlgebra g2 = g.change_basis(b);
        CHECK(check_jacobi(g2));
        CHECK(betti_numbers(ce_complex(g2)) == std::vector<std::size_t>{1, 0, 0, 1});
    }
}

TEST_CASE("basis labels describe cochains") {
    const CochainComplex c = ce_complex(heisenberg());
    REQUIRE(c.spaces().labels(2).size() == 3);
    CHECK(c.spaces().labels(2)[0].find("x") != std::string::npos);
}
