#include <catch2/catch.hpp>

#include <random>

#include "endolift/exact.hpp"
#include "endolift/json.hpp"

using namespace endolift;

namespace {
PiPower pp(long long num, long long den, long long exp_twice) {
    return PiPower(Rat(BigInt(num), BigInt(den)), exp_twice);
}
}  // namespace

TEST_CASE("HalfInt basics") {
    const HalfInt h = HalfInt::from_twice(3);
    CHECK(!h.is_integral());
    CHECK(h.str() == "3/2");
    CHECK(HalfInt::whole(-2).as_integer() == -2);
    CHECK(HalfInt::whole(1) + HalfInt::from_twice(1) == HalfInt::from_twice(3));
    CHECK(-HalfInt::from_twice(5) == HalfInt::from_twice(-5));
    CHECK(HalfInt::from_twice(1) < HalfInt::whole(1));
}

TEST_CASE("HalfInt ring laws on random values") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> d(-1000, 1000);
    for (int it = 0; it < 200; ++it) {
        const auto a = HalfInt::from_twice(d(rng)), b = HalfInt::from_twice(d(rng)), c = HalfInt::from_twice(d(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + HalfInt::whole(0) == a);
        CHECK(a - a == HalfInt::whole(0));
    }
}

TEST_CASE("Rat arithmetic stays reduced") {
    const Rat r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK((Rat(5) / Rat(10)) == Rat(1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK_THROWS_AS(Rat(1) / Rat(0), domain_error);
}

TEST_CASE("PiPower canonical zero and arithmetic") {
    CHECK(PiPower(Rat(0), 5) == PiPower(Rat(0), 0));
    CHECK(pp(2, 1, 2) * pp(3, 1, 4) == pp(6, 1, 6));
    CHECK(pp(3, 2, 3) / pp(3, 1, 1) == pp(1, 2, 2));
    CHECK_THROWS_AS(pp(1, 1, 2) + pp(1, 1, 4), domain_error);
    CHECK(pp(1, 1, 2) + pp(2, 1, 2) == pp(3, 1, 2));
}

TEST_CASE("PiPower multiplication is commutative and associative") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> num(-20, 20), den(1, 9), ex(-6, 6);
    for (int it = 0; it < 200; ++it) {
        const auto a = pp(num(rng), den(rng), ex(rng));
        const auto b = pp(num(rng), den(rng), ex(rng));
        const auto c = pp(num(rng), den(rng), ex(rng));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("gamma_half at integers and half-integers") {
    CHECK(gamma_half(8) == pp(6, 1, 0));    // Gamma(4) = 3!
    CHECK(gamma_half(1) == pp(1, 1, 1));    // Gamma(1/2) = sqrt(pi)
    CHECK(gamma_half(5) == pp(3, 4, 1));    // Gamma(5/2) = 3/4 sqrt(pi)
    CHECK(gamma_half(2) == pp(1, 1, 0));    // Gamma(1) = 1
    CHECK_THROWS_AS(gamma_half(0), domain_error);
    CHECK_THROWS_AS(gamma_half(-3), domain_error);
}

TEST_CASE("gamma_half satisfies Gamma(x+1) = x Gamma(x) exhaustively") {
    for (long long t = 1; t <= 58; ++t) {
        const PiPower lhs = gamma_half(t + 2);
        const PiPower rhs = gamma_half(t) * Rat(BigInt(t), BigInt(2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sphere volumes") {
    CHECK(sphere_volume(2) == pp(2, 1, 2));   // vol(S^1) = 2 pi
    CHECK(sphere_volume(4) == pp(2, 1, 4));   // vol(S^3) = 2 pi^2
    CHECK(sphere_volume(3) == pp(4, 1, 2));   // vol(S^2) = 4 pi
    CHECK(sphere_volume(1) == pp(2, 1, 0));   // vol(S^0) = 2
    CHECK_THROWS_AS(sphere_volume(0), domain_error);
}

TEST_CASE("sphere volume product exponents") {
    // The Gamma factor of an odd argument absorbs one half power of pi, so
    // the product exponent is n + m minus one unit per odd argument.
    for (long long n = 1; n <= 10; ++n)
        for (long long m = 1; m <= 10; ++m) {
            const auto prod = sphere_volume(n) * sphere_volume(m);
            const long long expect = n + m - (n % 2) - (m % 2);
            CHECK(prod.pi_exp_twice() == expect);
            if (n % 2 == 0 && m % 2 == 0) CHECK(prod.pi_exp_twice() == n + m);
        }
}

TEST_CASE("exact JSON shapes") {
    CHECK(to_json(HalfInt::from_twice(-3)) == json{{"twice", -3}});
    const json j = to_json(pp(32, 3, 12));
    CHECK(j["coeff"] == json::array({"32", "3"}));
    CHECK(j["pi_exp_twice"] == 12);
}

TEST_CASE("approximation is display only and sane") {
    CHECK(pp(2, 1, 2).approx() == Approx(6.283185307).epsilon(1e-9));
    CHECK(pp(1, 1, 1).approx() == Approx(1.772453851).epsilon(1e-9));
}
