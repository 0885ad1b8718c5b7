#include "doctest.h"
#include "halg/rings.hpp"

#include <random>

using namespace halg;

namespace {

RingElement series_of(const RingPtr& S, std::vector<long long> coeffs) {
    std::vector<RingElement> parts;
    parts.reserve(S->window);
    for (int i = 0; i < S->window; ++i)
        parts.push_back(RingElement::from_int(
            S->base, i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0));
    return RingElement::composite(S, std::move(parts));
}

}  // namespace

TEST_CASE("ring descriptors print their own syntax") {
    CHECK(ring_str(ring_Z()) == "Z");
    CHECK(ring_str(ring_Q()) == "Q");
    CHECK(ring_str(ring_mod(9)) == "Z/9");
    CHECK(ring_str(ring_padic(3, 2)) == "Zp(3,2)");
    CHECK(ring_str(ring_series(ring_mod(9), "u", 3)) == "series(u;3;Z/9)");
    CHECK(ring_str(ring_product({ring_Z(), ring_Z()})) == "prod(Z;Z)");
    auto F3 = ring_mod(3);
    auto F9 = ring_ext(F3, "w", {RingElement::one(F3), RingElement::zero(F3)});
    CHECK(ring_str(F9) == "ext(w;Z/3;1,0)");
    CHECK(same_ring(ring_padic(3, 2), ring_padic(3, 2)));
    CHECK(!same_ring(ring_padic(3, 2), ring_mod(9)));
}

TEST_CASE("modular and p-adic arithmetic is canonical") {
    auto R = ring_mod(9);
    auto a = RingElement::from_int(R, 13);
    CHECK(a.as_int() == 4);
    CHECK((a + RingElement::from_int(R, 5)).as_int() == 0);
    CHECK((a * a).as_int() == 7);
    CHECK((-a).as_int() == 5);
    CHECK(RingElement::from_int(R, -1).as_int() == 8);

    auto Zp = ring_padic(3, 2);
    CHECK(RingElement::from_int(Zp, 10).as_int() == 1);
    CHECK(ring_inv(RingElement::from_int(Zp, 2)).as_int() == 5);
    CHECK(ring_inv(RingElement::from_int(Zp, 4)).as_int() == 7);  // 4 * 7 = 28 = 1 (mod 9)
    CHECK_THROWS_AS(ring_inv(RingElement::from_int(Zp, 3)), Error);
}

TEST_CASE("rationals normalize sign and gcd") {
    auto Q = ring_Q();
    auto x = RingElement::rational(Q, 6, -4);
    CHECK(x.str() == "-3/2");
    CHECK((x * RingElement::rational(Q, -2, 3)).str() == "1");
    CHECK(ring_inv(x).str() == "-2/3");
    CHECK_THROWS_AS(ring_inv(RingElement::zero(Q)), Error);
}

TEST_CASE("series arithmetic truncates at the window") {
    auto S = ring_series(ring_mod(9), "u", 3);
    auto f = series_of(S, {1, 1});           // 1 + u
    auto g = series_of(S, {0, 1, 1});        // u + u^2
    CHECK((f * g).str() == "u+2*u^2");       // u + 2u^2 + u^3 -> truncated
    CHECK((f * f).str() == "1+2*u+u^2");
    CHECK(ring_inv(f).str() == "1+8*u+u^2");
    CHECK((ring_inv(f) * f).is_one());
    CHECK(series_valuation(g) == 1);
    CHECK(series_valuation(RingElement::zero(S)) == 3);
}

TEST_CASE("series substitution composes truncated polynomials") {
    auto S = ring_series(ring_mod(9), "u", 3);
    auto f = series_of(S, {1, 2, 1});  // 1 + 2u + u^2
    auto g = series_of(S, {0, 1, 1});  // u + u^2
    // f(g) = 1 + 2(u+u^2) + (u+u^2)^2 = 1 + 2u + 3u^2 + ...
    CHECK(series_substitute(f, g).str() == "1+2*u+3*u^2");
    CHECK_THROWS_AS(series_substitute(f, f), Error);  // nonzero constant term
}

TEST_CASE("exact division strips valuation and shrinks the window") {
    auto S = ring_series(ring_mod(9), "u", 4);
    auto f = series_of(S, {0, 3, 3});  // 3u + 3u^2
    auto u = series_of(S, {0, 1});
    auto q = exact_divide(f, u);
    CHECK(q.ring()->window == 3);
    CHECK(q.str() == "3+3*u");
    CHECK_THROWS_AS(exact_divide(series_of(S, {1, 1}), u), Error);        // not divisible
    CHECK_THROWS_AS(exact_divide(f, RingElement::zero(S)), Error);        // zero divisor
    // dividing by a unit keeps the window
    auto one_plus_u = series_of(S, {1, 1});
    CHECK(exact_divide(f, one_plus_u * u).str() == "3");  // 3u(1+u)... window 3
}

TEST_CASE("extension field arithmetic reduces by the monic modulus") {
    auto F3 = ring_mod(3);
    auto F9 = ring_ext(F3, "w", {RingElement::one(F3), RingElement::zero(F3)});  // w^2 = -1
    auto w = RingElement::composite(F9, {RingElement::zero(F3), RingElement::one(F3)});
    CHECK((w * w).str() == "2");  // w^2 = -1 = 2
    auto inv_w = ring_inv(w);
    CHECK((inv_w * w).is_one());
    CHECK(inv_w.str() == "2*w");
    // every nonzero element of F_9 is invertible
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            auto x = RingElement::composite(
                F9, {RingElement::from_int(F3, a), RingElement::from_int(F3, b)});
            CHECK((ring_inv(x) * x).is_one());
        }
}

TEST_CASE("product rings are componentwise") {
    auto P = ring_product({ring_Z(), ring_Z()});
    auto x = RingElement::composite(P, {RingElement::from_int(ring_Z(), 2),
                                        RingElement::from_int(ring_Z(), -1)});
    CHECK(x.str() == "(2,-1)");
    CHECK((x * x).str() == "(4,1)");
    CHECK(RingElement::one(P).str() == "(1,1)");
}

TEST_CASE("checked integer helpers reject overflow") {
    CHECK(checked_add(1, 2) == 3);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK(checked_pow(3, 4) == 81);
    CHECK_THROWS_AS(checked_mul(1LL << 62, 4), Error);
    CHECK_THROWS_AS(checked_pow(10, 40), Error);
}

TEST_CASE("binomial power expands the canonical lift exactly") {
    auto Zp = ring_padic(3, 2);
    auto b4 = binomial_power(RingElement::from_int(Zp, 4), 3);
    CHECK(ring_str(b4.ring()) == "series(u;3;Zp(3,2))");
    CHECK(b4.str() == "1+4*u+6*u^2");
    auto b7 = binomial_power(RingElement::from_int(Zp, 7), 3);
    CHECK(b7.str() == "1+7*u+3*u^2");
    // (1+u)^{1/4} to the 4th power gives back 1+u: the boosted-lift contract
    auto check = pow_int(b7, 4);
    CHECK(check.str() == "1+u");
    // integer exponents terminate and agree with plain powers
    auto b2 = binomial_power(RingElement::from_int(Zp, 2), 4);
    CHECK(b2.str() == "1+2*u+u^2");
}

TEST_CASE("binomial power at negative-style exponents uses the lift") {
    // exponent 8 = -1 mod 9: the expansion is C(8,n), not the alternating
    // geometric series of the true p-adic -1
    auto Zp = ring_padic(3, 2);
    auto b8 = binomial_power(RingElement::from_int(Zp, 8), 3);
    CHECK(b8.str() == "1+8*u+u^2");  // C(8,2) = 28 = 1 (mod 9)
}

TEST_CASE("ring_convert moves along canonical reductions") {
    CHECK(ring_convert(RingElement::from_int(ring_Z(), 13), ring_mod(9)).as_int() == 4);
    CHECK(ring_convert(RingElement::from_int(ring_padic(3, 2), 7), ring_padic(3, 1)).as_int() == 1);
    auto S2 = ring_series(ring_mod(9), "u", 2);
    auto S3 = ring_series(ring_mod(9), "u", 3);
    auto f = series_of(S3, {1, 2, 5});
    CHECK(ring_convert(f, S2).str() == "1+2*u");
    // base conversion inside a series
    auto T3 = ring_series(ring_mod(3), "u", 3);
    CHECK(ring_convert(f, T3).str() == "1+2*u+2*u^2");
    CHECK_THROWS_AS(ring_convert(f, ring_series(ring_mod(9), "v", 3)), Error);
    // prime ring into its extension
    auto F3 = ring_mod(3);
    auto F9 = ring_ext(F3, "w", {RingElement::one(F3), RingElement::zero(F3)});
    CHECK(ring_convert(RingElement::from_int(F3, 2), F9).str() == "2");
}

TEST_CASE("sampling is deterministic under a fixed seed") {
    std::mt19937_64 rng1(42), rng2(42);
    auto S = ring_series(ring_mod(9), "u", 3);
    for (int i = 0; i < 10; ++i) CHECK(sample_element(S, rng1) == sample_element(S, rng2));
}
