#include <memory>
#include <vector>

#include "doctest.h"
#include "halg/dual.hpp"
#include "halg/error.hpp"
#include "halg/hopf.hpp"
#include "halg/rings.hpp"

using namespace halg;

namespace {

// the dual-basis element scaled into a matrix-unit candidate: eps_i * f_j∨
DualElement matrix_unit_dual(const PresPtr& P, int i, int j) {
    return left_A_action(dual_basis(P, j), canonical_generator(P->base, i));
}

// oracle for scalar-etaR presentations: pair both functionals directly
// against the two tensor legs of the coproduct
DualElement delta_pairing_oracle(const DualElement& D2, const DualElement& D1, int W) {
    const Presentation& P = *D1.pres;
    DualVec out = DualVec::zero(P.base, W);
    for (int k = 0; k < W; ++k)
        for (const auto& [j, gj] : P.delta[k].parts())
            out.table[k] = out.table[k] + dual_value(D1, j) * dual_pair(D2.vec, gj);
    out.finite_support = false;
    return {D1.pres, out};
}

}  // namespace

TEST_CASE("dual values respect window promises") {
    auto P = divided_power_algebroid(ring_mod(3), 4);
    DualElement b1 = dual_basis(P, 1);
    CHECK(dual_value(b1, 1).is_one());
    CHECK(dual_value(b1, 3).is_zero());
    CHECK(dual_value(b1, 7).is_zero());  // finite support: known zero past window

    DualElement u = dual_unit(P);
    CHECK(dual_value(u, 0).is_one());
    CHECK_THROWS_AS((void)dual_value(u, 7), Error);  // tail not stored

    CHECK(dual_equal(b1, b1));
    CHECK_FALSE(dual_equal(b1, u));
}

TEST_CASE("the counit is the unit of the dual algebra") {
    auto P = divided_power_algebroid(ring_mod(3), 6);
    DualElement u = dual_unit(P);
    CHECK(dual_value(u, 0).as_int() == 1);
    for (int i = 1; i < 6; ++i) CHECK(dual_value(u, i).is_zero());

    std::vector<DualElement> samples = {dual_basis(P, 0), dual_basis(P, 1), dual_basis(P, 3),
                                        eps_dual(P, RingElement::from_int(P->base, 2))};
    {
        DualElement mixed = dual_basis(P, 1);
        mixed.vec.table[4] = RingElement::from_int(P->base, 2);
        samples.push_back(mixed);
    }
    for (const auto& D : samples) {
        CHECK(dual_equal(dual_mul(u, D), D));
        CHECK(dual_equal(dual_mul(D, u), D));
    }
}

TEST_CASE("divided power duals multiply like a power series variable") {
    auto P = divided_power_algebroid(ring_mod(3), 6);
    SUBCASE("gamma_1 dual squares to gamma_2 dual") {
        DualElement g1 = dual_basis(P, 1);
        CHECK(dual_equal(dual_mul(g1, g1), dual_basis(P, 2)));
    }
    SUBCASE("basis duals compose additively in the index") {
        for (int a = 0; a < 6; ++a)
            for (int b = 0; a + b < 6; ++b)
                CHECK(dual_equal(dual_mul(dual_basis(P, a), dual_basis(P, b)),
                                 dual_basis(P, a + b)));
    }
    SUBCASE("products past the window vanish on the window") {
        DualElement g3 = dual_basis(P, 3);
        CHECK(dual_mul(g3, g3).vec.is_zero());
    }
    SUBCASE("the coproduct-pairing oracle agrees on mixed elements") {
        DualElement x = dual_basis(P, 1);
        x.vec.table[2] = RingElement::from_int(P->base, 2);
        DualElement y = dual_basis(P, 0);
        y.vec.table[3] = RingElement::from_int(P->base, 1);
        for (const auto& [lhs, rhs] : {std::pair{x, y}, {y, x}, {x, x}}) {
            DualElement got = dual_mul(lhs, rhs, 6);
            DualElement want = delta_pairing_oracle(lhs, rhs, 6);
            CHECK(dual_equal(got, want));
        }
    }
}

TEST_CASE("dual multiplication is associative and unital on samples") {
    auto P = divided_power_algebroid(ring_mod(3), 6);
    std::vector<DualElement> pool = {dual_basis(P, 0), dual_basis(P, 1), dual_basis(P, 2),
                                     eps_dual(P, RingElement::from_int(P->base, 2))};
    {
        DualElement m = dual_basis(P, 1);
        m.vec.table[3] = RingElement::from_int(P->base, 2);
        pool.push_back(m);
    }
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool) {
                DualElement l = dual_mul(dual_mul(a, b, 6), c, 6);
                DualElement r = dual_mul(a, dual_mul(b, c, 6), 6);
                CHECK(dual_equal(l, r));
            }
}

TEST_CASE("the base ring maps into and out of the dual compatibly") {
    auto P = divided_power_algebroid(ring_mod(3), 6);
    auto A = P->base;
    RingElement two = RingElement::from_int(A, 2);

    SUBCASE("eps_dual is a ring homomorphism") {
        CHECK(dual_equal(eps_dual(P, RingElement::one(A)), dual_unit(P)));
        CHECK(dual_equal(dual_mul(eps_dual(P, two), eps_dual(P, two), 6),
                         eps_dual(P, two * two)));
    }
    SUBCASE("etaL_dual retracts eps_dual") {
        for (long long n : {0, 1, 2}) {
            RingElement a = RingElement::from_int(A, n);
            CHECK(etaL_dual(eps_dual(P, a)) == a);
        }
        CHECK(etaL_dual(dual_unit(P)).is_one());
    }
    SUBCASE("left action commutes with right multiplication by eps_dual") {
        DualElement D = dual_basis(P, 2);
        for (long long na : {1, 2})
            for (long long nb : {1, 2}) {
                RingElement a = RingElement::from_int(A, na);
                RingElement b = RingElement::from_int(A, nb);
                DualElement lhs = left_A_action(dual_mul(D, eps_dual(P, b), 6), a);
                DualElement rhs = dual_mul(left_A_action(D, a), eps_dual(P, b), 6);
                CHECK(dual_equal(lhs, rhs));
            }
    }
    SUBCASE("scalar etaR collapses the two actions") {
        DualElement D = dual_basis(P, 2);
        CHECK(dual_equal(right_A_action(D, two), left_A_action(D, two)));
    }
}

TEST_CASE("dual products depend only on the coproduct closure of the window") {
    auto P = divided_power_algebroid(ring_mod(3), 6);
    const int W = 3;
    DualElement x = dual_basis(P, 1);
    x.vec.table[2] = RingElement::from_int(P->base, 2);
    DualElement y = dual_basis(P, 2);
    DualElement clean = dual_mul(x, y, W);

    // the coproduct of indices < 3 never reaches index 3 and beyond, so
    // arbitrary garbage out there cannot change the product
    DualElement xg = x, yg = y;
    for (int i = W; i < 6; ++i) {
        xg.vec.table[i] = RingElement::from_int(P->base, 1 + i % 2);
        yg.vec.table[i] = RingElement::from_int(P->base, 2 - i % 2);
    }
    xg.vec.finite_support = yg.vec.finite_support = false;
    DualElement garbled = dual_mul(xg, yg, W);
    CHECK(dual_equal(clean, garbled));

    // truncating the tables to the closure gives the same answer too
    DualVec xt = DualVec::zero(P->base, W), yt = DualVec::zero(P->base, W);
    for (int i = 0; i < W; ++i) {
        xt.table[i] = x.vec.table[i];
        yt.table[i] = y.vec.table[i];
    }
    xt.finite_support = yt.finite_support = false;
    DualElement truncated = dual_mul({P, xt}, {P, yt}, W);
    CHECK(dual_equal(clean, truncated));
}

TEST_CASE("the pair groupoid dual is the endomorphism ring of rank two") {
    auto P = pair_groupoid_algebroid(2);
    auto A = P->base;

    SUBCASE("the unit functional acts as the identity on the base") {
        DualElement u = dual_unit(P);
        for (const auto& a : base_samples(*P)) CHECK(act_on_A(u, a) == a);
    }
    SUBCASE("matrix units compose like matrix units") {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        DualElement prod =
                            dual_mul(matrix_unit_dual(P, i, j), matrix_unit_dual(P, k, l));
                        if (j == k)
                            CHECK(dual_equal(prod, matrix_unit_dual(P, i, l)));
                        else
                            CHECK(prod.vec.is_zero());
                    }
    }
    SUBCASE("the shift matrix sends (0,1) to (1,0)") {
        DualElement shift = matrix_unit_dual(P, 0, 1);  // [[0,1],[0,0]]
        RingElement a = RingElement::composite(
            A, {RingElement::from_int(A->factors[0], 0), RingElement::from_int(A->factors[1], 1)});
        RingElement b = act_on_A(shift, a);
        CHECK(b == canonical_generator(A, 0));
        CHECK(act_on_A(shift, b).is_zero());  // nilpotent
    }
    SUBCASE("the projector table of the right action on the unit") {
        DualElement r = right_A_action(dual_unit(P), canonical_generator(A, 0));
        CHECK(r.vec.table[0] == canonical_generator(A, 0));
        CHECK(r.vec.table[1].is_zero());
    }
}

TEST_CASE("etaL_dual is left linear but provably not right linear here") {
    auto P = pair_groupoid_algebroid(2);
    auto A = P->base;
    RingElement e0 = canonical_generator(A, 0);

    DualElement D = dual_basis(P, 0);  // f_0∨
    // left linearity holds
    CHECK(etaL_dual(left_A_action(D, e0)) == e0 * etaL_dual(D));
    // right linearity fails: D ∘ (e0 * eps) evaluates the unit to 1, not e0
    RingElement lhs = etaL_dual(right_A_action(D, e0));
    RingElement rhs = e0 * etaL_dual(D);
    CHECK(lhs.is_one());
    CHECK(rhs == e0);
    CHECK(lhs != rhs);
}

TEST_CASE("acting on the base is multiplicative along dual products") {
    SUBCASE("divided powers") {
        auto P = divided_power_algebroid(ring_mod(3), 6);
        std::vector<DualElement> pool = {dual_unit(P), dual_basis(P, 1),
                                         eps_dual(P, RingElement::from_int(P->base, 2))};
        for (const auto& D2 : pool)
            for (const auto& D1 : pool)
                for (const auto& a : base_samples(*P))
                    CHECK(act_on_A(dual_mul(D2, D1), a) == act_on_A(D2, act_on_A(D1, a)));
    }
    SUBCASE("pair groupoid") {
        auto P = pair_groupoid_algebroid(2);
        std::vector<DualElement> pool = {matrix_unit_dual(P, 0, 1), matrix_unit_dual(P, 1, 0),
                                         matrix_unit_dual(P, 1, 1), dual_unit(P)};
        for (const auto& D2 : pool)
            for (const auto& D1 : pool)
                for (const auto& a : base_samples(*P))
                    CHECK(act_on_A(dual_mul(D2, D1), a) == act_on_A(D2, act_on_A(D1, a)));
    }
}

TEST_CASE("restrictiveness witnesses") {
    SUBCASE("scalar etaR is spotted immediately") {
        auto P = divided_power_algebroid(ring_mod(3), 4);
        auto witness = restrictive_witness(P, 4, base_samples(*P));
        REQUIRE(witness.has_value());
        CHECK_FALSE(witness->vec.is_zero());
        CHECK(dual_value(*witness, 0).is_zero());  // must kill etaR(1) = e_0
        for (const auto& a : base_samples(*P)) CHECK(act_on_A(*witness, a).is_zero());
    }
    SUBCASE("the pair groupoid action is injective on the window") {
        auto P = pair_groupoid_algebroid(2);
        CHECK_FALSE(restrictive_witness(P, 2, base_samples(*P)).has_value());
    }
    SUBCASE("an empty window is vacuously unwitnessed") {
        auto P = pair_groupoid_algebroid(2);
        CHECK_FALSE(restrictive_witness(P, 0, base_samples(*P)).has_value());
    }
}

TEST_CASE("products refuse coproducts that escape their filtration level") {
    auto bad = std::make_shared<Presentation>(*divided_power_algebroid(ring_mod(3), 4));
    bad->levels[2] = 0;  // delta(e_2) reaches level-1 indices, now illegal
    PresPtr B = bad;
    DualElement u = dual_unit(B);
    CHECK_THROWS_AS((void)dual_mul(u, u, 4), Error);
    try {
        (void)dual_mul(u, u, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::FilterViolation);
    }
}
