#include "orbitdesigns/groups.hpp"

#include "doctest.h"

#include <set>

using namespace orbitdesigns;

TEST_SUITE("groups") {

TEST_CASE("type parsing and rank limits") {
    CHECK(parse_group_type("A") == GroupType::A);
    CHECK(parse_group_type("D") == GroupType::D);
    CHECK_THROWS_AS(parse_group_type("E"), scalar_error);
    CHECK(group_type_name(GroupType::B) == "B");
    CHECK(min_rank(GroupType::A) == 2);
    CHECK(min_rank(GroupType::D) == 4);
    CHECK_THROWS_AS(build_group(GroupType::D, 3), scalar_error);
}

TEST_CASE("orders, exponents and m2") {
    struct Row {
        GroupType t;
        int n;
        long long order;
        std::vector<int> exps;
    };
    for (const Row& r : {Row{GroupType::A, 2, 6, {1, 2}},
                         Row{GroupType::A, 3, 24, {1, 2, 3}},
                         Row{GroupType::B, 2, 8, {1, 3}},
                         Row{GroupType::B, 3, 48, {1, 3, 5}},
                         Row{GroupType::D, 4, 192, {1, 3, 3, 5}},
                         Row{GroupType::D, 5, 1920, {1, 3, 5, 7, 4}}}) {
        ReflectionGroup G = build_group(r.t, r.n);
        CHECK(G.order == r.order);
        std::vector<int> sorted = r.exps;
        std::sort(sorted.begin(), sorted.end());
        CHECK(G.exponents == sorted);
        CHECK(G.m2() == sorted[1]);
    }
}

TEST_CASE("fundamental roots and generators") {
    for (auto [t, n] : {std::pair{GroupType::A, 4}, {GroupType::B, 3},
                        {GroupType::D, 4}}) {
        ReflectionGroup G = build_group(t, n);
        REQUIRE((int)G.roots.size() == n);
        for (const Vec& a : G.roots) CHECK(dot(a, a) == Scalar(2));
        for (const Mat& g : G.generators) {
            CHECK(mat_is_orthogonal(g));
            CHECK(mat_mul(g, g) == mat_identity(n));   // reflections square to 1
        }
    }
}

TEST_CASE("corner vectors are dual to the roots") {
    for (auto [t, n] : {std::pair{GroupType::A, 3}, {GroupType::B, 4},
                        {GroupType::D, 5}}) {
        ReflectionGroup G = build_group(t, n);
        auto cvs = corner_vectors(t, n);
        REQUIRE((int)cvs.size() == n);
        for (int k = 1; k <= n; ++k) {
            const CornerVector& v = cvs[k - 1];
            CHECK(v.k == k);
            for (int i = 1; i <= n; ++i) {
                Scalar d = dot(v.scaled, G.roots[i - 1]);
                if (i == k)
                    CHECK(d.sign() != 0);
                else
                    CHECK(d.is_zero());
            }
            CHECK(dot(v.scaled, v.scaled) == v.scaled_norm2);
            if (v.unit_exact) CHECK(dot(v.unit, v.unit) == Scalar(1));
        }
    }
}

TEST_CASE("orbit enumeration matches the closed-form sizes") {
    for (auto [t, nmax] : {std::pair{GroupType::A, 4}, {GroupType::B, 4},
                           {GroupType::D, 5}}) {
        for (int n = min_rank(t); n <= nmax; ++n) {
            ReflectionGroup G = build_group(t, n);
            for (int k = 1; k <= n; ++k) {
                Orbit o = corner_orbit(G, k);
                CHECK((long long)o.size() == corner_orbit_size(t, n, k));
                // every point keeps the common squared norm
                for (const Vec& x : o.points) CHECK(dot(x, x) == o.norm2);
                // no duplicates
                std::set<std::string> seen;
                for (const Vec& x : o.points) {
                    std::string key;
                    for (const Scalar& c : x) key += c.str() + "|";
                    CHECK(seen.insert(key).second);
                }
            }
        }
    }
}

TEST_CASE("specific orbits") {
    ReflectionGroup B3 = build_group(GroupType::B, 3);
    Orbit o = corner_orbit(B3, 2);
    CHECK(o.size() == 12);
    CHECK(o.norm2 == Scalar(2));
    bool found = false;
    for (const Vec& x : o.points)
        found = found || (x == Vec{Scalar(1), Scalar(1), Scalar(0)});
    CHECK(found);

    // A generic seed has trivial stabilizer.
    Orbit g = orbit(build_group(GroupType::B, 2), {Scalar(1), Scalar(2)});
    CHECK(g.size() == 8);

    // the A_2 hexagon needs exact Q(sqrt 3) coordinates
    ReflectionGroup A2 = build_group(GroupType::A, 2);
    CHECK(corner_orbit(A2, 1).size() == 3);
    CHECK(orbit(A2, corner_vectors(GroupType::A, 2)[0].unit).size() == 3);
}

TEST_CASE("molien dimension series") {
    CHECK(molien_dims(build_group(GroupType::B, 2), 8) ==
          std::vector<long long>{1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(molien_dims(build_group(GroupType::D, 4), 8) ==
          std::vector<long long>{1, 0, 0, 0, 2, 0, 1, 0, 3});
    CHECK(molien_dims(build_group(GroupType::A, 3), 6) ==
          std::vector<long long>{1, 0, 0, 1, 1, 0, 1});
    CHECK(molien_dims(build_group(GroupType::A, 2), 3) ==
          std::vector<long long>{1, 0, 0, 1});
}

TEST_CASE("group element enumeration") {
    ReflectionGroup A3 = build_group(GroupType::A, 3);
    auto els = group_elements(A3);
    CHECK((long long)els.size() == A3.order);
    int identities = 0;
    for (const Mat& g : els) {
        CHECK(mat_is_orthogonal(g));
        if (g == mat_identity(3)) ++identities;
    }
    CHECK(identities == 1);
    CHECK_THROWS_AS(group_elements(build_group(GroupType::B, 3), 10), scalar_error);
}

}  // TEST_SUITE
