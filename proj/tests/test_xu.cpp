#include "orbitdesigns/xu.hpp"

#include "doctest.h"

using namespace orbitdesigns;

namespace {

BigFloat big_pi() { return atan(BigFloat(1)) * 4; }

}  // namespace

TEST_SUITE("xu") {

TEST_CASE("radial weights expose their moments") {
    RadialWeight G = RadialWeight::gaussian();
    CHECK(G.mu(0) == Scalar(ratio(1, 2)));     // 0!/2
    CHECK(G.mu(3) == Scalar(3));               // 3!/2
    RadialWeight U = RadialWeight::unit_disk();
    CHECK(U.mu(0) == Scalar(ratio(1, 2)));
    CHECK(U.mu(2) == Scalar(ratio(1, 6)));
    RadialWeight C = RadialWeight::custom({Scalar(1), Scalar(ratio(1, 3))});
    CHECK(C.mu(1) == Scalar(ratio(1, 3)));
    CHECK_THROWS_AS(C.mu(2), scalar_error);
}

TEST_CASE("formula shape: circles, angles, center") {
    XuFormula F2 = make_xu_formula(XuFamily::odd_degree, 2, {Scalar(ratio(1, 2))},
                                   {Scalar(1)});
    CHECK(F2.m == 1);
    CHECK(F2.sigma == std::vector<int>{0});
    CHECK(F2.angle_count() == 4);
    CHECK(!F2.has_center());
    CHECK(F2.degree() == 3);

    XuFormula F3 = make_xu_formula(XuFamily::odd_degree, 3, {Scalar(ratio(1, 4))},
                                   {Scalar(1)}, Scalar(ratio(1, 10)));
    CHECK(F3.m == 1);
    CHECK(F3.angle_count() == 6);
    CHECK(F3.has_center());
    CHECK(F3.degree() == 5);

    XuFormula E2 = make_xu_formula(XuFamily::even_degree, 2,
                                   {Scalar(ratio(1, 4)), Scalar(ratio(1, 4))},
                                   {Scalar(ratio(1, 2)), Scalar(1)});
    CHECK(E2.m == 1);
    CHECK(E2.angle_count() == 3);
    CHECK(E2.degree() == 4);
    CHECK(E2.sigma == std::vector<int>{0, 1});  // adjacent circles alternate

    // wrong circle count and misplaced center weight are rejected
    CHECK_THROWS_AS(make_xu_formula(XuFamily::odd_degree, 2,
                                    {Scalar(1), Scalar(1)}, {Scalar(1), Scalar(2)}),
                    scalar_error);
    CHECK_THROWS_AS(make_xu_formula(XuFamily::odd_degree, 2, {Scalar(ratio(1, 2))},
                                    {Scalar(1)}, Scalar(1)),
                    scalar_error);
    CHECK_THROWS_AS(make_xu_formula(XuFamily::odd_degree, 2, {Scalar(-1)},
                                    {Scalar(1)}),
                    scalar_error);
}

TEST_CASE("points of the degree-3 Gaussian formula") {
    XuFormula F = make_xu_formula(XuFamily::odd_degree, 2, {Scalar(ratio(1, 2))},
                                  {Scalar(1)});
    auto pts = build_points(F);
    REQUIRE(pts.size() == 4);
    BigFloat total(0);
    for (const XuPoint& p : pts) total += p.w;
    CHECK(abs(total - big_pi()) < BigFloat("1e-70"));      // 4 * 2pi*lambda/4
    CHECK(abs(pts[0].x - 1) < BigFloat("1e-70"));          // sigma = 0: angle 0
    CHECK(abs(pts[0].y) < BigFloat("1e-70"));

    RadialWeight G = RadialWeight::gaussian();
    XuConditionReport rep = verify_conditions(F, G);
    CHECK(rep.pass);
    CHECK(rep.includes_j0);
    CHECK(rep.max_residual < 1e-30);
    bool saw_extra = false;
    for (const auto& row : rep.rows) saw_extra = saw_extra || (row.extra && row.j == 0);
    CHECK(saw_extra);

    XuDegreeReport deg3 = verify_degree(F, G, 3);
    CHECK(deg3.pass);
    CHECK(deg3.monomial_count == 10);

    // degree 4 fails, and specifically on x^4 (machine value pi/2 vs 3pi/4)
    XuDegreeReport deg4 = verify_degree(F, G, 4);
    CHECK(!deg4.pass);
    bool saw_x4 = false;
    for (const auto& f : deg4.failures)
        saw_x4 = saw_x4 || (!f.invariant && f.a == 4 && f.b == 0);
    CHECK(saw_x4);
}

TEST_CASE("solver: all square cases for both weights") {
    RadialWeight WG = RadialWeight::gaussian();
    RadialWeight WU = RadialWeight::unit_disk();
    for (const RadialWeight* W : {&WG, &WU}) {
        for (auto [fam, n] : {std::pair{XuFamily::odd_degree, 2},
                              {XuFamily::odd_degree, 3},
                              {XuFamily::even_degree, 2}}) {
            CAPTURE(W->name);
            CAPTURE(n);
            XuFormula F = solve_moment_system(*W, n, fam);
            XuConditionReport rep = verify_conditions(F, *W);
            CHECK(rep.pass);
            CHECK(rep.max_residual < 1e-12);
            CHECK(verify_degree(F, *W, F.degree()).pass);
            CHECK(!verify_degree(F, *W, F.degree() + 1).pass);

            std::string text = xu_formula_to_json_text(F);
            XuFormula F2 = xu_formula_from_json_text(text);
            CHECK(verify_conditions(F2, *W).pass);
        }
    }
    // the classical solutions appear exactly
    XuFormula G2 = solve_moment_system(WG, 2, XuFamily::odd_degree);
    CHECK(abs(G2.lambda[0].to_bigfloat() - BigFloat("0.5")) < 1e-12);
    CHECK(abs(G2.r[0].to_bigfloat() - 1) < 1e-12);
    XuFormula U2 = solve_moment_system(WU, 2, XuFamily::odd_degree);
    CHECK(abs(U2.r[0].to_bigfloat() * U2.r[0].to_bigfloat() - BigFloat("0.5")) < 1e-12);
    XuFormula G3 = solve_moment_system(WG, 3, XuFamily::odd_degree);
    REQUIRE(G3.lambda0.has_value());
    CHECK(G3.lambda0->to_bigfloat() > 0);
}

TEST_CASE("solver refuses the overdetermined shapes with explicit counts") {
    RadialWeight WG = RadialWeight::gaussian();
    RadialWeight WU = RadialWeight::unit_disk();
    for (const RadialWeight* W : {&WG, &WU}) {
        for (auto [fam, n] : {std::pair{XuFamily::odd_degree, 4},
                              {XuFamily::odd_degree, 5},
                              {XuFamily::odd_degree, 6},
                              {XuFamily::even_degree, 3},
                              {XuFamily::even_degree, 4},
                              {XuFamily::even_degree, 5},
                              {XuFamily::even_degree, 6}}) {
            CAPTURE(W->name);
            CAPTURE(n);
            CHECK_THROWS_AS(solve_moment_system(*W, n, fam), xu_solve_error);
        }
    }
    try {
        solve_moment_system(WG, 4, XuFamily::odd_degree);
        CHECK(false);
    } catch (const xu_solve_error& e) {
        // the message states the unknown/equation counts
        CHECK(std::string(e.what()).find("unknown") != std::string::npos);
    }
}

TEST_CASE("perturbations flip the condition and degree checks together") {
    RadialWeight G = RadialWeight::gaussian();
    XuFormula F = solve_moment_system(G, 3, XuFamily::odd_degree);

    XuFormula P = F;
    P.lambda[0] = Scalar(BigFloat(P.lambda[0].to_bigfloat() * BigFloat("1.001")));
    CHECK(!verify_conditions(P, G).pass);
    CHECK(!verify_degree(P, G, P.degree()).pass);

    XuFormula Q = F;
    Q.r[0] = Scalar(BigFloat(Q.r[0].to_bigfloat() * BigFloat("1.0005")));
    CHECK(!verify_conditions(Q, G).pass);
    CHECK(!verify_degree(Q, G, Q.degree()).pass);
}

TEST_CASE("family parsing and json schema errors") {
    CHECK(parse_xu_family("odd") == XuFamily::odd_degree);
    CHECK(parse_xu_family("even") == XuFamily::even_degree);
    CHECK_THROWS_AS(parse_xu_family("cubic"), scalar_error);
    CHECK(xu_family_name(XuFamily::even_degree) == "even");
    CHECK_THROWS_AS(xu_formula_from_json_text("{\"family\": \"odd\"}"), scalar_error);
    CHECK_THROWS_AS(xu_formula_from_json_text("not json"), scalar_error);
}

TEST_CASE("dihedral invariant reduction and reconstruction") {
    MultiPoly u = MultiPoly::radius2(2);
    DihedralExpansion e = dihedral_reduce(u, 5);
    CHECK(e.coeff.size() == 1);
    CHECK(e.coeff.at({1, 0}) == 1);

    // v = Re((x+iy)^4) = x^4 - 6 x^2 y^2 + y^4
    MultiPoly v4 = MultiPoly::monomial(Expo{4, 0}) +
                   MultiPoly::monomial(Expo{2, 2}, Scalar(-6)) +
                   MultiPoly::monomial(Expo{0, 4});
    DihedralExpansion e2 = dihedral_reduce(v4, 4);
    CHECK(e2.coeff.size() == 1);
    CHECK(e2.coeff.at({0, 1}) == 1);

    MultiPoly mix = u.pow(3) + v4 + (u * v4).scaled(Scalar(ratio(7, 3)));
    DihedralExpansion e3 = dihedral_reduce(mix, 4);
    CHECK(e3.coeff.at({1, 1}) == ratio(7, 3));
    CHECK((dihedral_reconstruct(e3) - mix).is_zero());

    // non-invariant inputs are rejected
    CHECK_THROWS_AS(dihedral_reduce(MultiPoly::monomial(Expo{3, 0}), 4), scalar_error);
    CHECK_THROWS_AS(dihedral_reduce(v4, 3), scalar_error);
}

}  // TEST_SUITE
