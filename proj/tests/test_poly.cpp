#include "orbitdesigns/poly.hpp"

#include "doctest.h"

using namespace orbitdesigns;

namespace {

MultiPoly var(int n, int i) { return MultiPoly::variable(n, i); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("arithmetic and canonical printing") {
    MultiPoly x = var(2, 0), y = var(2, 1);
    MultiPoly sq = (x + y) * (x + y);
    CHECK(sq == x * x + x * y.scaled(Scalar(2)) + y * y);
    CHECK(sq.degree() == 2);
    CHECK(sq.homogeneous());
    CHECK((x - y).pow(2).str() == "x1^2 - 2 * x1 x2 + x2^2");
    CHECK((sq - sq).is_zero());
    CHECK(MultiPoly(2).str() == "0");
    CHECK(MultiPoly::radius2(3) == var(3, 0).pow(2) + var(3, 1).pow(2) + var(3, 2).pow(2));
    CHECK(!(x * x + y).homogeneous());
}

TEST_CASE("coefficient access and term order") {
    MultiPoly f = MultiPoly::monomial(Expo{1, 2}, Scalar(5));
    f.add_term(Expo{3, 0}, Scalar(ratio(1, 2)));
    f.add_term(Expo{1, 2}, Scalar(-5));   // cancels the first term
    CHECK(f.coeff(Expo{3, 0}) == Scalar(ratio(1, 2)));
    CHECK(f.coeff(Expo{1, 2}).is_zero());
    CHECK(f.terms().size() == 1);
    // graded lex: degree first, then x1-major
    MonoOrder less;
    CHECK(less(Expo{2, 0}, Expo{1, 0}));
    CHECK(less(Expo{2, 1}, Expo{1, 2}));
    CHECK(!less(Expo{0, 3}, Expo{3, 0}));
}

TEST_CASE("laplacian") {
    MultiPoly x = var(2, 0), y = var(2, 1);
    CHECK(laplacian(x * x - y * y).is_zero());
    CHECK(laplacian(x * y).is_zero());
    CHECK(laplacian(x * x) == MultiPoly::constant(2, Scalar(2)));
    CHECK(laplacian(MultiPoly::radius2(5)) == MultiPoly::constant(5, Scalar(10)));
}

TEST_CASE("harmonic basis dimensions and harmonicity") {
    // dim Harm_l(R^n) = C(n+l-1, l) - C(n+l-3, l-2)
    for (int l = 0; l <= 5; ++l) {
        auto basis = harm_basis(3, l);
        CHECK((long long)basis.size() == (l == 0 ? 1 : 2 * l + 1));
        for (const auto& f : basis) {
            CHECK(laplacian(f).is_zero());
            CHECK(f.homogeneous());
            CHECK(f.degree() == (l == 0 ? 0 : l));
        }
    }
    CHECK(harm_basis(4, 3).size() ==
          (size_t)(binomial(6, 3) - binomial(4, 1)));
}

TEST_CASE("monomials and binomial") {
    CHECK(monomials_of_degree(3, 4).size() == (size_t)binomial(6, 4));
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    auto ms = monomials_of_degree(2, 2);
    CHECK(ms.front() == Expo{2, 0});
    CHECK(ms.back() == Expo{0, 2});
}

TEST_CASE("group action is orthogonal-only and contravariant") {
    // 90-degree rotation
    Mat rot = {{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}};
    Mat flip = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    MultiPoly x = var(2, 0), y = var(2, 1);
    CHECK(act(rot, x) == y);                       // f(g^{-1} e1-direction)
    CHECK(act(rot, y) == -x);
    CHECK(act(flip, x * x * y) == y * y * x);
    CHECK(act(mat_mul(rot, flip), x * x * y) ==
          act(rot, act(flip, x * x * y)));
    Mat shear = {{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}};
    CHECK_THROWS_AS(act(shear, x), scalar_error);
}

TEST_CASE("symmetrization sums distinct permutation images once") {
    MultiPoly f = sym(MultiPoly::monomial(Expo{4, 0, 0}));
    CHECK(f.terms().size() == 3);
    CHECK(f.coeff(Expo{0, 4, 0}) == Scalar(1));
    MultiPoly g = sym(MultiPoly::monomial(Expo{2, 2, 0}));
    CHECK(g.terms().size() == 3);   // {220, 202, 022}, each once
}

TEST_CASE("evaluation is exact") {
    MultiPoly f = var(2, 0).pow(2) - var(2, 1).pow(2);
    Scalar s2 = Scalar::sqrt_int(2);
    CHECK(f.evaluate({s2, Scalar(1)}) == Scalar(1));
    CHECK(f.evaluate({Scalar(ratio(3, 2)), Scalar(ratio(1, 2))}) == Scalar(2));
}

TEST_CASE("prune drops only sub-tolerance float terms") {
    Config::ensure();
    MultiPoly f(1);
    f.add_term(Expo{1}, Scalar(BigFloat("1e-60")));
    f.add_term(Expo{2}, Scalar(BigFloat("0.5")));
    f.prune(BigFloat("1e-50"));
    CHECK(f.terms().size() == 1);
    CHECK(f.coeff(Expo{1}).is_zero());
}

TEST_CASE("matrix utilities") {
    Mat id = mat_identity(3);
    CHECK(mat_is_orthogonal(id));
    Mat rot = {{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}};
    CHECK(mat_is_orthogonal(rot));
    CHECK(mat_mul(rot, mat_transpose(rot)) == mat_identity(2));
    Vec v = mat_apply(rot, {Scalar(1), Scalar(0)});
    CHECK(v == Vec{Scalar(0), Scalar(1)});
    CHECK(dot({Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}) == Scalar(11));
}

}  // TEST_SUITE
