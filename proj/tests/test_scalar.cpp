#include "orbitdesigns/jsonio.hpp"
#include "orbitdesigns/scalar.hpp"

#include "doctest.h"

using namespace orbitdesigns;

TEST_SUITE("scalar") {

TEST_CASE("ratio normalizes computed negative denominators") {
    // mpq_rational's raw two-argument constructor reads a negative
    // denominator as unsigned, so every computed ratio must go through
    // ratio().
    CHECK(ratio(3, -6) == ratio(-1, 2));
    CHECK(ratio(-3, 6) == ratio(-1, 2));
    CHECK(ratio(-4, -8) == ratio(1, 2));
    CHECK_THROWS_AS(ratio(1, 0), scalar_error);
}

TEST_CASE("rational arithmetic and signs") {
    Scalar a = Scalar(ratio(2, 3)) + Scalar(ratio(1, 6));
    CHECK(a == Scalar(ratio(5, 6)));
    CHECK((a - a).is_zero());
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(ratio(5, 6)).pow(-2) == Scalar(ratio(36, 25)));
    CHECK(abs(Scalar(-7)) == Scalar(7));
}

TEST_CASE("quadratic extension arithmetic") {
    Scalar s5 = Scalar::sqrt_int(5);
    CHECK(s5.kind() == Scalar::Kind::quadratic);
    CHECK((Scalar(1) + s5) * (Scalar(1) - s5) == Scalar(-4));
    CHECK(s5 * s5 == Scalar(5));

    // sqrt(27) = 3 sqrt(3): the square factor is pulled out.
    Scalar s27 = Scalar::sqrt_int(27);
    CHECK(s27.quad_d() == 3);
    CHECK(s27.quad_b() == 3);
    CHECK(s27 * s27 == Scalar(27));

    // sqrt of a rational stays exact: sqrt(1/6) = sqrt(6)/6.
    Scalar r = Scalar(ratio(1, 6)).sqrt();
    CHECK(r.kind() == Scalar::Kind::quadratic);
    CHECK(r * r == Scalar(ratio(1, 6)));

    // A perfect square collapses back to a rational.
    CHECK(Scalar(ratio(9, 4)).sqrt() == Scalar(ratio(3, 2)));
    CHECK(Scalar(ratio(9, 4)).sqrt().kind() == Scalar::Kind::rational);
}

TEST_CASE("incompatible radicals refuse to mix silently") {
    Scalar s2 = Scalar::sqrt_int(2);
    Scalar s3 = Scalar::sqrt_int(3);
    CHECK_THROWS_AS((void)(s2 + s3), scalar_error);
    CHECK_THROWS_AS((void)(s2 * s3), scalar_error);
    // ... but the same extension combines fine: (1+sqrt 2) + sqrt 8.
    CHECK((Scalar(1) + s2 + Scalar::sqrt_int(8)).quad_b() == 3);
}

TEST_CASE("radical sums carry several radicands exactly") {
    RadicalSum s = RadicalSum::sqrt_of(Rational(2)) + RadicalSum::sqrt_of(Rational(3));
    CHECK(!s.is_zero());
    RadicalSum p = s * s;  // 5 + 2 sqrt 6
    CHECK(p.parts().at(1) == 5);
    CHECK(p.parts().at(6) == 2);
    RadicalSum z = s - RadicalSum::sqrt_of(Rational(3)) - RadicalSum::sqrt_of(Rational(2));
    CHECK(z.is_zero());
    // sqrt(4/9) lands on the rational part.
    CHECK(RadicalSum::sqrt_of(ratio(4, 9)).to_scalar().value() == Scalar(ratio(2, 3)));
    // A pure quadratic converts back to Scalar.
    auto back = (RadicalSum(Rational(1)) + RadicalSum::sqrt_of(Rational(5))).to_scalar();
    REQUIRE(back.has_value());
    CHECK(*back == Scalar(1) + Scalar::sqrt_int(5));
    // p = 5 + 2 sqrt 6 has a single irrational radicand, so it still
    // converts; the two-radicand sum s = sqrt 2 + sqrt 3 does not.
    CHECK(p.to_scalar().has_value());
    CHECK(!s.to_scalar().has_value());
}

TEST_CASE("parse and print round trips") {
    CHECK(Scalar::parse("27/25") == Scalar(ratio(27, 25)));
    CHECK(Scalar::parse("-3/4") == Scalar(ratio(-3, 4)));
    CHECK(Scalar::parse("1+2*sqrt(5)") == Scalar(1) + Scalar(2) * Scalar::sqrt_int(5));
    CHECK(Scalar::parse("sqrt(2)") == Scalar::sqrt_int(2));
    CHECK(Scalar::parse("1/2-sqrt(3)") ==
          Scalar(ratio(1, 2)) - Scalar::sqrt_int(3));
    for (const char* text : {"27/25", "-3/4", "1+2*sqrt(5)", "7"})
        CHECK(Scalar::parse(Scalar::parse(text).str()) == Scalar::parse(text));

    Scalar dec = Scalar::parse("1.5");
    CHECK(dec.kind() == Scalar::Kind::bigfloat);
    CHECK(abs(dec.to_bigfloat() - BigFloat("1.5")) < Config::tolerance());
    CHECK_THROWS_AS(Scalar::parse("not a number"), scalar_error);
}

TEST_CASE("bigfloat precision follows the configuration") {
    Config::set_precision_bits(128);
    CHECK(Config::precision_bits() == 128);
    CHECK(Config::tolerance_exponent() == 64);
    Config::set_precision_bits(32);  // clamped
    CHECK(Config::precision_bits() == 64);
    Config::set_precision_bits(256);
    CHECK(Config::tolerance_exponent() == 128);
    // tolerance = 2^-128 at the default configuration
    BigFloat t = Config::tolerance();
    CHECK(t > 0);
    CHECK(t < BigFloat("1e-38"));
    CHECK(t > BigFloat("1e-39"));
}

TEST_CASE("scalar json round trip keeps the kind") {
    for (const Scalar& v : {Scalar(ratio(27, 25)), Scalar(-7),
                            Scalar(1) + Scalar(2) * Scalar::sqrt_int(5)}) {
        nlohmann::json j = scalar_to_json(v);
        CHECK(scalar_from_json(j) == v);
    }
    nlohmann::json jb = scalar_to_json(Scalar(BigFloat("0.125")));
    CHECK(jb.at("mode") == "bigfloat");
    Scalar back = scalar_from_json(jb);
    CHECK(back.kind() == Scalar::Kind::bigfloat);
    CHECK(abs(back.to_bigfloat() - BigFloat("0.125")) < Config::tolerance());

    CHECK_THROWS_AS(scalar_from_json(nlohmann::json{{"mode", "rational"},
                                                    {"value", "sqrt(2)"}}),
                    scalar_error);
    CHECK_THROWS_AS(scalar_from_json(nlohmann::json::parse("[1,2]")), scalar_error);
}

TEST_CASE("flexible scalar json accepts shorthand forms") {
    CHECK(scalar_from_json_flex(nlohmann::json("3/4")) == Scalar(ratio(3, 4)));
    CHECK(scalar_from_json_flex(nlohmann::json(12)) == Scalar(12));
    Scalar f = scalar_from_json_flex(nlohmann::json(0.25));
    CHECK(f.kind() == Scalar::Kind::bigfloat);
    CHECK(abs(f.to_bigfloat() - BigFloat("0.25")) < Config::tolerance());
}

TEST_CASE("canonical dump is byte-stable") {
    nlohmann::json a{{"b", 1}, {"a", 2}};
    nlohmann::json b{{"a", 2}, {"b", 1}};
    CHECK(canonical_dump(a) == canonical_dump(b));
    CHECK(canonical_dump(a).back() == '\n');
}

}  // TEST_SUITE
