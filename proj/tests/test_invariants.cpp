#include "orbitdesigns/invariants.hpp"
#include "orbitdesigns/linalg.hpp"

#include "doctest.h"

using namespace orbitdesigns;

namespace {

bool invariant_under(const ReflectionGroup& G, const MultiPoly& f) {
    for (const Mat& g : G.generators)
        if (!(act(g, f) == f)) return false;
    return true;
}

// Is f a linear combination of the basis elements?
bool in_span(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    std::map<Expo, size_t, MonoOrder> rows;
    for (const auto& [e, c] : f.terms()) rows.emplace(e, 0);
    for (const auto& b : basis)
        for (const auto& [e, c] : b.terms()) rows.emplace(e, 0);
    size_t r = 0;
    for (auto& [e, i] : rows) i = r++;
    Mat m(rows.size(), Vec(basis.size(), Scalar(0)));
    Vec rhs(rows.size(), Scalar(0));
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [e, c] : basis[j].terms()) m[rows.at(e)][j] = c;
    for (const auto& [e, c] : f.terms()) rhs[rows.at(e)] = c;
    return solve_linear(m, rhs).has_value();
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("basic invariants generate in the stated degrees") {
    auto& inv_b = basic_invariants(GroupType::B, 3, 6);
    std::vector<int> degs;
    for (const auto& [d, f] : inv_b) degs.push_back(d);
    CHECK(degs == std::vector<int>{2, 4, 6});
    ReflectionGroup B3 = build_group(GroupType::B, 3);
    for (const auto& [d, f] : inv_b) {
        CHECK(f.degree() == d);
        CHECK(invariant_under(B3, f));
    }
    auto& inv_d = basic_invariants(GroupType::D, 4, 8);
    ReflectionGroup D4 = build_group(GroupType::D, 4);
    bool saw_product = false;
    for (const auto& [d, f] : inv_d) {
        CHECK(invariant_under(D4, f));
        saw_product = saw_product || (d == 4 && f.terms().size() == 1);
    }
    CHECK(saw_product);   // x1 x2 x3 x4
    auto& inv_a = basic_invariants(GroupType::A, 3, 4);
    ReflectionGroup A3 = build_group(GroupType::A, 3);
    for (const auto& [d, f] : inv_a) CHECK(invariant_under(A3, f));
}

TEST_CASE("invariant harmonic basis matches the Molien counts") {
    for (auto [t, lo, hi] : {std::tuple{GroupType::A, 2, 4},
                             {GroupType::B, 2, 4}, {GroupType::D, 4, 5}}) {
        for (int n = lo; n <= hi; ++n) {
            ReflectionGroup G = build_group(t, n);
            auto dims = molien_dims(G, 8);
            for (int l = 0; l <= 8; ++l) {
                const auto& basis = invariant_harm_basis(G, l);
                CHECK((long long)basis.size() == dims[l]);
                for (const MultiPoly& f : basis) {
                    CHECK(laplacian(f).is_zero());
                    CHECK(invariant_under(G, f));
                }
            }
        }
    }
}

TEST_CASE("closed forms are harmonic, invariant, and inside the computed span") {
    struct Case {
        GroupType t;
        int n;
        const char* label;
    };
    for (const Case& c : {Case{GroupType::A, 2, "f3"}, {GroupType::A, 3, "f3"},
                          {GroupType::A, 5, "f3"}, {GroupType::A, 3, "f4"},
                          {GroupType::A, 5, "f4"}, {GroupType::A, 4, "f5"},
                          {GroupType::A, 6, "f5"}, {GroupType::B, 2, "f4"},
                          {GroupType::B, 4, "f4"}, {GroupType::B, 3, "f6"},
                          {GroupType::B, 4, "f8"}, {GroupType::D, 4, "f4"},
                          {GroupType::D, 5, "f4"}, {GroupType::D, 4, "f6"},
                          {GroupType::D, 5, "f8"}, {GroupType::D, 4, "f4_2"},
                          {GroupType::D, 5, "f5"}, {GroupType::D, 6, "f6_2"}}) {
        CAPTURE(c.n);
        CAPTURE(c.label);
        MultiPoly f = closed_form_invariant(c.t, c.n, c.label);
        CHECK(laplacian(f).is_zero());
        ReflectionGroup G = build_group(c.t, c.n);
        CHECK(invariant_under(G, f));
        CHECK(in_span(f, invariant_harm_basis(G, f.degree())));
    }
    CHECK_THROWS_AS(closed_form_invariant(GroupType::B, 3, "f5"), scalar_error);
    CHECK_THROWS_AS(closed_form_invariant(GroupType::D, 5, "f4_2"), scalar_error);
}

TEST_CASE("degree-6 obstruction is harmonic but deliberately non-invariant") {
    for (int n : {2, 4, 6}) {
        MultiPoly f = closed_form_invariant(GroupType::A, n, "obstruction6");
        CHECK(f.degree() == 6);
        CHECK(laplacian(f).is_zero());
    }
}

TEST_CASE("harmonic building blocks h4 and h5") {
    for (auto [n, deg, lab] : {std::tuple{4, 4, "h4_1"}, {4, 4, "h4_2"},
                               {4, 4, "h4_3"}, {5, 5, "h5_1"}, {5, 5, "h5_2"},
                               {5, 5, "h5_3"}, {5, 5, "h5_4"}}) {
        CAPTURE(lab);
        MultiPoly f = closed_form_invariant(GroupType::A, n, lab);
        CHECK(laplacian(f).is_zero());
        CHECK(f.homogeneous());
        CHECK(f.degree() == deg);
    }
}

TEST_CASE("closed-form labels by degree") {
    CHECK(closed_form_labels(GroupType::B, 3, 4) == std::vector<std::string>{"f4"});
    CHECK(closed_form_labels(GroupType::B, 3, 5).empty());
    auto d4 = closed_form_labels(GroupType::D, 4, 4);
    CHECK(d4.size() == 2);   // f4 and f4_2
    CHECK(closed_form_labels(GroupType::A, 4, 3) == std::vector<std::string>{"f3"});
}

TEST_CASE("Reynolds operator projects onto invariants") {
    ReflectionGroup B2 = build_group(GroupType::B, 2);
    MultiPoly x4 = MultiPoly::monomial(Expo{4, 0});
    MultiPoly r = reynolds(B2, x4);
    CHECK(invariant_under(B2, r));
    CHECK(reynolds(B2, r) == r);              // idempotent
    MultiPoly inv = MultiPoly::radius2(2).pow(2);
    CHECK(reynolds(B2, inv) == inv);          // fixes invariants
    // Averaging x1^4 over B2 gives (x1^4 + x2^4)/2.
    CHECK(r == (MultiPoly::monomial(Expo{4, 0}) +
                MultiPoly::monomial(Expo{0, 4})).scaled(Scalar(ratio(1, 2))));
    CHECK_THROWS_AS(reynolds(build_group(GroupType::B, 3),
                             MultiPoly::monomial(Expo{4, 0, 0}), 10),
                    std::exception);
}

TEST_CASE("corner evaluation agrees with the printed substitution values") {
    // Types B and D are exact for every rank and corner.
    for (auto [t, n] : {std::pair{GroupType::B, 3}, {GroupType::B, 6},
                        {GroupType::D, 4}, {GroupType::D, 6}}) {
        for (int k = 1; k <= n; ++k) {
            for (const std::string& label : {std::string("f4"), std::string("f6")}) {
                MultiPoly f = closed_form_invariant(t, n, label);
                RadicalSum ex = corner_eval_exact(t, n, k, f);
                Scalar printed = corner_value(t, n, k, label);
                auto exact = ex.to_scalar();
                REQUIRE(exact.has_value());
                CHECK(*exact == printed);
            }
        }
    }
}

TEST_CASE("type A corner values follow the stated sign patterns") {
    // f3 vanishes exactly at the middle corner k = (n+1)/2.
    for (int n : {3, 5}) {
        MultiPoly f3 = closed_form_invariant(GroupType::A, n, "f3");
        for (int k = 1; k <= n; ++k) {
            RadicalSum v = corner_eval_exact(GroupType::A, n, k, f3);
            if (2 * k == n + 1)
                CHECK(v.is_zero());
            else
                CHECK(!v.is_zero());
        }
    }
    // f4 at the corners changes sign as k crosses the stated window.
    MultiPoly f4 = closed_form_invariant(GroupType::A, 5, "f4");
    std::vector<int> signs;
    for (int k = 1; k <= 5; ++k) {
        BigFloat v = corner_eval_exact(GroupType::A, 5, k, f4).to_bigfloat();
        signs.push_back(v > 0 ? 1 : -1);
    }
    CHECK(signs.front() == 1);
    CHECK(signs.back() == 1);
    CHECK(std::count(signs.begin(), signs.end(), -1) >= 1);
}

}  // TEST_SUITE
