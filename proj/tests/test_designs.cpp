#include "orbitdesigns/catalogue.hpp"
#include "orbitdesigns/designs.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace orbitdesigns;

namespace {

using Key = std::tuple<int, int, std::vector<int>>;   // (t, n, J)

std::set<Key> keys_of(const std::vector<ClassifiedDesign>& rows) {
    std::set<Key> out;
    for (const auto& r : rows) out.insert({r.t, r.n, r.J});
    return out;
}

int all_three(const WeightedDesign& X, const ReflectionGroup& G, int t_max) {
    int a = strength_invariant(X, G, t_max).t_certified;
    int b = strength_full(X, t_max).t_certified;
    int c = strength_direct(X, t_max).t_certified;
    CHECK(a == b);
    CHECK(b == c);
    return a;
}

}  // namespace

TEST_SUITE("designs") {

TEST_CASE("octagon: both corner orbits of B2 at equal radius") {
    std::map<int, Scalar> r{{1, Scalar(1)}, {2, Scalar(1)}};
    std::map<int, Scalar> w{{1, Scalar(1)}, {2, Scalar(1)}};
    WeightedDesign X = make_orbit_design(GroupType::B, 2, {1, 2}, r, w);
    CHECK(X.size() == 8);
    CHECK(X.shells.size() == 2);       // one shell per orbit ...
    CHECK(X.distinct_radii() == 1);    // ... on a single sphere
    ReflectionGroup G = build_group(GroupType::B, 2);
    CHECK(all_three(X, G, 8) == 7);
    TightnessReport tr = is_tight(X, 7);
    CHECK(tr.tight);
    CHECK(tr.bound == 8);
}

TEST_CASE("A4 {1,3} with r3^2 = 1/6 and w3 = 27 is a tight 4-design") {
    std::map<int, Scalar> r{{1, Scalar(1)}, {3, Scalar(ratio(1, 6)).sqrt()}};
    std::map<int, Scalar> w{{1, Scalar(1)}, {3, Scalar(27)}};
    WeightedDesign X = make_orbit_design(GroupType::A, 4, {1, 3}, r, w);
    CHECK(X.size() == 15);
    ReflectionGroup G = build_group(GroupType::A, 4);
    StrengthReport inv = strength_invariant(X, G, 5);
    CHECK(inv.t_certified == 4);
    CHECK(strength_full(X, 5).t_certified == 4);
    CHECK(strength_direct(X, 5).t_certified == 4);
    CHECK(is_tight(X, 4).tight);
    for (const Residual& res : inv.residuals)
        if (res.l + 2 * res.j <= 4) {
            CHECK(res.exact);
            CHECK(res.zero);
        }
}

TEST_CASE("explicit point sets: shells, strengths, degenerate cases") {
    Scalar h = Scalar::sqrt_int(2) * Scalar(ratio(1, 2));
    std::vector<Vec> oct = {{Scalar(1), Scalar(0)}, {Scalar(-1), Scalar(0)},
                            {Scalar(0), Scalar(1)}, {Scalar(0), Scalar(-1)},
                            {h, h},                 {h, -h},
                            {-h, h},                {-h, -h}};
    WeightedDesign X = make_explicit_design(oct, std::vector<Scalar>(8, Scalar(ratio(1, 8))));
    CHECK(X.shells.size() == 1);
    CHECK(!X.orbit_based);
    CHECK(strength_full(X, 8).t_certified == 7);
    CHECK(strength_direct(X, 8).t_certified == 7);

    std::vector<Vec> cross;
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            Vec v(3, Scalar(0));
            v[i] = Scalar(s);
            cross.push_back(v);
        }
    WeightedDesign C = make_explicit_design(cross, std::vector<Scalar>(6, Scalar(1)));
    CHECK(strength_full(C, 5).t_certified == 3);
    CHECK(strength_direct(C, 5).t_certified == 3);

    WeightedDesign P = make_explicit_design({{Scalar(1), Scalar(0), Scalar(0)}},
                                            {Scalar(1)});
    CHECK(strength_full(P, 3).t_certified == 0);

    // the origin is carried as a separate member, not a shell
    WeightedDesign O = make_explicit_design(
        {{Scalar(0), Scalar(0), Scalar(0)},
         {Scalar(1), Scalar(0), Scalar(0)},
         {Scalar(-1), Scalar(0), Scalar(0)}},
        {Scalar(1), Scalar(1), Scalar(1)});
    CHECK(O.contains_origin);
    CHECK(O.shells.size() == 1);
    CHECK(O.size() == 3);
}

TEST_CASE("input validation") {
    std::map<int, Scalar> r{{1, Scalar(1)}};
    CHECK_THROWS_AS(make_orbit_design(GroupType::B, 3, {1},
                                      {{1, Scalar(1)}}, {{1, Scalar(0)}}),
                    scalar_error);
    CHECK_THROWS_AS(make_orbit_design(GroupType::B, 3, {5}, r, r), scalar_error);
    CHECK_THROWS_AS(make_orbit_design(GroupType::B, 3, {}, {}, {}), scalar_error);
    CHECK_THROWS_AS(make_explicit_design({{Scalar(1), Scalar(0)}},
                                         {Scalar(1), Scalar(2)}),
                    scalar_error);
    CHECK_THROWS_AS(strength_full(make_explicit_design({}, {}), 3), scalar_error);
}

TEST_CASE("dimension formulas and Fisher-type bounds") {
    CHECK(dim_P(2, 2, 2, 0) == 6);
    CHECK(dim_P(3, 2, 2, 0) == 10);
    // one sphere: polynomials restricted to S^{n-1} in degree <= l
    CHECK(dim_P(3, 2, 1, 0) == 9);
    CHECK(dim_Pstar(3, 2, 2, 0) == 7);   // so the t=5, p=2 bound is 14
    // worked bound values
    CHECK(fisher_bound(3, 3, Parity::odd, 2, false, false) == 14);
    CHECK(fisher_bound(3, 4, Parity::odd, 3, false, false) == 26);
    CHECK(fisher_bound(2, 4, Parity::odd, 1, false, false) == 8);
    CHECK(fisher_bound(2, 2, Parity::even, 2, false, false) == 6);
    // odd e with the origin present subtracts exactly one
    CHECK(fisher_bound(3, 3, Parity::odd, 2, true, true) ==
          2 * dim_Pstar(3, 2, 2, 1) - 1);
}

TEST_CASE("B3 {1,3} free-radius family certifies at t = 5") {
    std::map<int, Scalar> r{{1, Scalar(1)}, {3, Scalar(2)}};
    std::map<int, Scalar> w{{1, Scalar(1)}, {3, Scalar(ratio(9, 128))}};
    WeightedDesign X = make_orbit_design(GroupType::B, 3, {1, 3}, r, w);
    ReflectionGroup G = build_group(GroupType::B, 3);
    CHECK(all_three(X, G, 6) == 5);
    CHECK(is_tight(X, 5).tight);
}

TEST_CASE("A3 {1,2,3}: the correct middle weight is 8/(9 s^2), not its reciprocal") {
    std::map<int, Scalar> r{{1, Scalar(1)}, {2, Scalar(2)}, {3, Scalar(1)}};
    std::map<int, Scalar> w{{1, Scalar(1)}, {2, Scalar(ratio(1, 18))}, {3, Scalar(1)}};
    WeightedDesign X = make_orbit_design(GroupType::A, 3, {1, 2, 3}, r, w);
    ReflectionGroup G = build_group(GroupType::A, 3);
    CHECK(all_three(X, G, 6) == 5);
    CHECK(is_tight(X, 5).tight);

    std::map<int, Scalar> wbad{{1, Scalar(1)}, {2, Scalar(ratio(9, 128))}, {3, Scalar(1)}};
    WeightedDesign Y = make_orbit_design(GroupType::A, 3, {1, 2, 3}, r, wbad);
    CHECK(strength_full(Y, 5).t_certified < 5);
}

TEST_CASE("strength is invariant under a global dilation") {
    std::map<int, Scalar> r{{1, Scalar(1)}, {3, Scalar(2)}};
    std::map<int, Scalar> w{{1, Scalar(1)}, {3, Scalar(ratio(9, 128))}};
    WeightedDesign X = make_orbit_design(GroupType::B, 3, {1, 3}, r, w);
    std::map<int, Scalar> r2{{1, Scalar(ratio(3, 2))}, {3, Scalar(3)}};
    WeightedDesign Y = make_orbit_design(GroupType::B, 3, {1, 3}, r2, w);
    CHECK(strength_full(X, 6).t_certified == strength_full(Y, 6).t_certified);
    CHECK(strength_direct(Y, 6).t_certified == 5);
}

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(3, Expo{4, 0, 0}) == ratio(1, 5));
    CHECK(sphere_moment(3, Expo{2, 2, 0}) == ratio(1, 15));
    CHECK(sphere_moment(3, Expo{1, 2, 0}) == 0);
    CHECK(sphere_moment(2, Expo{2, 0}) == ratio(1, 2));
    CHECK(sphere_moment(4, Expo{0, 0, 0, 0}) == 1);
    // degree-2 moments sum to 1 over the coordinates
    Rational sum = 0;
    for (int i = 0; i < 3; ++i) {
        Expo e(3, 0);
        e[i] = 2;
        sum += sphere_moment(3, e);
    }
    CHECK(sum == 1);
}

TEST_CASE("three strength methods agree on random invariant designs") {
    std::mt19937_64 rng(20240817);
    auto rnd_rational = [&](int lo, int hi) {
        std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
        return Rational(num(rng)) / Rational(den(rng));
    };
    for (int trial = 0; trial < 12; ++trial) {
        GroupType type = trial % 3 == 0  ? GroupType::A
                         : trial % 3 == 1 ? GroupType::B
                                          : GroupType::D;
        int n = type == GroupType::D ? 4 : 2 + trial % 3;
        ReflectionGroup G = build_group(type, n);
        std::uniform_int_distribution<int> pick(1, n);
        std::set<int> Jset = {pick(rng), pick(rng)};
        std::vector<int> J(Jset.begin(), Jset.end());
        std::map<int, Scalar> radii, weights;
        for (int k : J) {
            radii[k] = Scalar(rnd_rational(1, 5));
            weights[k] = Scalar(rnd_rational(1, 9));
        }
        WeightedDesign X = make_orbit_design(type, n, J, radii, weights);
        CAPTURE(trial);
        all_three(X, G, 5);   // asserts the three results match
    }
}

TEST_CASE("obstruction sign tables") {
    for (const ObstructionRow& row : nonexistence_obstruction(GroupType::A, 4)) {
        CHECK(row.sign == -1);
        CHECK(row.value.sign() == -1);
    }
    for (const ObstructionRow& row : nonexistence_obstruction(GroupType::B, 4))
        CHECK(row.sign == 1);
    for (const ObstructionRow& row : nonexistence_obstruction(GroupType::D, 5))
        CHECK(row.sign == 1);
}

TEST_CASE("classification: exhaustive search at small rank") {
    auto rows_a = classify_corner_designs(GroupType::A, 3, 7);
    CHECK(keys_of(rows_a) ==
          std::set<Key>{{2, 2, {1}},
                        {2, 2, {2}},
                        {2, 3, {1}},
                        {2, 3, {3}},
                        {3, 3, {2}},
                        {4, 2, {1, 2}},
                        {5, 2, {1, 2}},
                        {5, 3, {1, 2, 3}}});
    for (const auto& r : rows_a) {
        CHECK(r.resolved);
        CHECK(r.cardinality == r.bound);
        for (size_t s = 0; s < r.samples.size(); ++s) {
            WeightedDesign X = design_from_classified(r, s);
            CHECK(strength_full(X, r.t).t_certified == r.t);
            CHECK(is_tight(X, r.t).tight);
        }
    }

    auto rows_b = classify_corner_designs(GroupType::B, 2, 7);
    CHECK(keys_of(rows_b) == std::set<Key>{{3, 2, {1}},
                                           {3, 2, {2}},
                                           {5, 2, {1, 2}},
                                           {7, 2, {1, 2}}});
    // the hexagon family: one free squared radius
    for (const auto& r : rows_b)
        if (r.t == 5) {
            CHECK(r.family);
            CHECK(r.samples.size() == 3);
        }

    CHECK_THROWS_AS(classify_corner_designs(GroupType::B, 3, 1), scalar_error);
    CHECK_THROWS_AS(classify_corner_designs(GroupType::B, 99, 7), scalar_error);
}

TEST_CASE("catalogue matches the exhaustive search up to rank 4") {
    for (auto [type, nmax] : {std::pair{GroupType::A, 4}, {GroupType::B, 4},
                              {GroupType::D, 4}}) {
        CAPTURE(group_type_name(type));
        auto found = classify_corner_designs(type, nmax, 7);
        CatalogueCheck chk = check_against_catalogue(type, found, nmax);
        for (const std::string& p : chk.problems) {
            CAPTURE(p);
            CHECK(false);
        }
        CHECK(chk.ok);
        CHECK(chk.matched > 0);
    }
}

TEST_CASE("catalogue instances materialize and certify") {
    auto inst_b = catalogue_instances(GroupType::B, 2, 3);
    CHECK(!inst_b.empty());
    for (const CatalogueInstance& i : inst_b) {
        CAPTURE(i.label);
        WeightedDesign X = i.design();
        CHECK(strength_full(X, i.t + 1).t_certified == i.t);
        CHECK(is_tight(X, i.t).tight);
    }
    // every family instance respects its validity window
    auto inst_d = catalogue_instances(GroupType::D, 4, 4);
    bool saw_family = false, saw_mirror = false;
    for (const CatalogueInstance& i : inst_d) {
        saw_family = saw_family || i.family;
        saw_mirror = saw_mirror || i.is_dual;
        WeightedDesign X = i.design();
        CHECK(strength_full(X, i.t).t_certified == i.t);
    }
    CHECK(saw_family);
    CHECK(saw_mirror);
}

TEST_CASE("catalogue closed forms at a fresh parameter value") {
    // the B3 t=7 family at s = 9: w2 = 4/(5 s^3), r3^2 = 3s/(5s-2)
    auto inst = catalogue_instances(GroupType::B, 3, 3, {Rational(9)});
    bool found = false;
    for (const CatalogueInstance& i : inst) {
        if (i.t != 7 || i.n != 3 || !i.family) continue;
        found = true;
        CHECK(i.radius2.at(2) == Scalar(9));
        CHECK(i.radius2.at(3) == Scalar(ratio(27, 43)));
        CHECK(i.weight.at(2) == Scalar(ratio(4, 5 * 729)));
        WeightedDesign X = i.design();
        ReflectionGroup G = build_group(GroupType::B, 3);
        CHECK(all_three(X, G, 8) == 7);
        CHECK(is_tight(X, 7).tight);
    }
    CHECK(found);
}

}  // TEST_SUITE
