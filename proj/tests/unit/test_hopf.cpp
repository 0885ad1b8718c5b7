#include "doctest.h"
#include "halg/hopf.hpp"

using namespace halg;

namespace {

bool axiom_status(const Report& rep, const std::string& name, CheckStatus st,
                  const std::string& witness = "") {
    for (const auto& c : rep.checks)
        if (c.name == name) return c.status == st && (witness.empty() || c.witness == witness);
    return false;
}

}  // namespace

TEST_CASE("divided powers over F_3 satisfy every axiom") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    auto rep = P->check_axioms();
    CHECK(rep.all_pass());
    CHECK(!rep.any_indeterminate());

    auto F3 = ring_mod(3);
    // gamma_1 * gamma_1 = 2 gamma_2, gamma_1^3 = 0, gamma_3 * gamma_3 = 2 gamma_6
    CHECK(P->gamma_mul(Vec::basis(F3, 1), Vec::basis(F3, 1)) ==
          Vec::basis(F3, 2).int_scaled(2));
    CHECK(P->gamma_pow(Vec::basis(F3, 1), 3).is_zero());
    CHECK(P->gamma_mul(Vec::basis(F3, 3), Vec::basis(F3, 3)) ==
          Vec::basis(F3, 6).int_scaled(2));
    CHECK(P->apply_conj(Vec::basis(F3, 1)) == Vec::basis(F3, 1).int_scaled(2));
    CHECK(P->apply_epsilon(P->unit).is_one());
    // products escaping the window report exhaustion
    CHECK_THROWS_AS(P->mult_entry(5, 5), Error);
}

TEST_CASE("divided power mutations fail the expected axiom at the expected index") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    auto F3 = ring_mod(3);

    SUBCASE("dropping gamma_1 (x) gamma_1 from Delta(gamma_2)") {
        Presentation M = *P;
        TensorVec d(F3);
        d.add(Vec::basis(F3, 2), 0);
        d.add(Vec::basis(F3, 0), 2);
        M.delta[2] = d;
        auto rep = M.check_axioms();
        CHECK(axiom_status(rep, "inverse-law-left", CheckStatus::Fail, "2"));
        CHECK(axiom_status(rep, "coassociativity", CheckStatus::Fail, "4"));
        CHECK(axiom_status(rep, "counit-left", CheckStatus::Pass));
        CHECK(axiom_status(rep, "counit-right", CheckStatus::Pass));
    }

    SUBCASE("zeroing the counit at index 0") {
        Presentation M = *P;
        M.epsilon[0] = RingElement::zero(F3);
        auto rep = M.check_axioms();
        CHECK(axiom_status(rep, "counit-left", CheckStatus::Fail, "0"));
    }

    SUBCASE("wrong binomial in gamma_1 * gamma_1") {
        Presentation M = *P;
        M.mult[{1, 1}] = Vec::basis(F3, 2);
        auto rep = M.check_axioms();
        CHECK(axiom_status(rep, "inverse-law-left", CheckStatus::Fail, "2"));
        CHECK(axiom_status(rep, "coassociativity", CheckStatus::Pass));
    }

    SUBCASE("conj losing its sign at index 1") {
        Presentation M = *P;
        M.conj[1] = Vec::basis(F3, 1);
        auto rep = M.check_axioms();
        CHECK(axiom_status(rep, "conj-involution", CheckStatus::Pass));
        CHECK(axiom_status(rep, "inverse-law-left", CheckStatus::Fail, "1"));
    }

    SUBCASE("conj sent to a different index") {
        Presentation M = *P;
        M.conj[2] = Vec::basis(F3, 1);
        auto rep = M.check_axioms();
        CHECK(axiom_status(rep, "conj-involution", CheckStatus::Fail, "2"));
    }

    SUBCASE("raising a level above its coproduct parents breaks adaptedness") {
        Presentation M = *P;
        M.levels[1] = 5;  // delta(2) now references a level-5 index
        auto rep = M.check_axioms();
        CHECK(axiom_status(rep, "filtration-adapted", CheckStatus::Fail, "2"));
    }
}

TEST_CASE("conj can be rederived from the inverse law") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    auto derived = derive_conj(*P);
    REQUIRE(derived.size() == P->conj.size());
    for (size_t i = 0; i < derived.size(); ++i) CHECK(derived[i] == P->conj[i]);

    // a presentation with a broken pivot cannot be solved
    Presentation M = *P;
    TensorVec d(ring_mod(3));
    d.add(Vec::basis(ring_mod(3), 0), 1);  // Delta(gamma_1) without the top term
    M.delta[1] = d;
    CHECK_THROWS_AS(derive_conj(M), Error);
}

TEST_CASE("the pair groupoid on two points satisfies every axiom") {
    auto P = pair_groupoid_algebroid(2);
    auto rep = P->check_axioms();
    CHECK(rep.all_pass());
    CHECK(!rep.any_indeterminate());

    auto A = P->base;
    CHECK(ring_str(A) == "prod(Z;Z)");
    // f_i f_j = delta_ij f_j and the unit is f_0 + f_1
    CHECK(P->gamma_mul(Vec::basis(A, 0), Vec::basis(A, 1)).is_zero());
    CHECK(P->gamma_mul(Vec::basis(A, 1), Vec::basis(A, 1)) == Vec::basis(A, 1));
    CHECK(P->unit == Vec::basis(A, 0) + Vec::basis(A, 1));
    // etaR sends the idempotent generators to the basis
    CHECK(P->eval_etaR(canonical_generator(A, 0)) == Vec::basis(A, 0));
    CHECK(P->eval_etaR(canonical_generator(A, 1)) == Vec::basis(A, 1));
    // the two units genuinely differ: etaL(eps_0) scales, etaR picks out f_0
    CHECK(P->unit.scaled(canonical_generator(A, 0)) != P->eval_etaR(canonical_generator(A, 0)));

    SUBCASE("breaking etaR multiplicativity") {
        Presentation M = *P;
        M.etaR_gens[0] = Vec::basis(A, 0) + Vec::basis(A, 1);
        auto rep2 = M.check_axioms();
        CHECK(axiom_status(rep2, "units-ring-maps", CheckStatus::Fail));
        CHECK(axiom_status(rep2, "counit-splits-units", CheckStatus::Fail));
    }

    SUBCASE("making f_0 f_1 = f_0 breaks the inverse law") {
        Presentation M = *P;
        M.mult[{0, 1}] = Vec::basis(A, 0);
        // the table entry is symmetric, so f_1 f_0 = f_0 already disturbs
        // the law at index 0
        auto rep2 = M.check_axioms();
        CHECK(axiom_status(rep2, "inverse-law-left", CheckStatus::Fail, "0"));
    }

    SUBCASE("dropping part of Delta(f_0) breaks the left counit") {
        Presentation M = *P;
        TensorVec d(A);
        d.add(Vec::basis(A, 0), 0);  // only f_0 (x) f_0
        M.delta[0] = d;
        auto rep2 = M.check_axioms();
        CHECK(axiom_status(rep2, "counit-left", CheckStatus::Fail, "0"));
    }
}

TEST_CASE("the tensor square of divided powers passes the axioms at a full window") {
    auto P = divided_power_algebroid(ring_mod(3), 4);
    auto T = tensor_square_algebroid(P, 4);
    CHECK(T->window == 16);
    auto rep = T->check_axioms();
    CHECK(rep.all_pass());
    // the laws keep every factor index at or below its input, so the full
    // pair window closes with nothing indeterminate
    CHECK(!rep.any_indeterminate());

    auto mrep = tensor_mult_morphism_check(T, P, 4);
    CHECK(mrep.all_pass());

    auto F3 = ring_mod(3);
    // (gamma_1 (x) gamma_0) * (gamma_0 (x) gamma_1) = gamma_1 (x) gamma_1
    CHECK(T->gamma_mul(Vec::basis(F3, pair_flat(1, 0, 4)), Vec::basis(F3, pair_flat(0, 1, 4))) ==
          Vec::basis(F3, pair_flat(1, 1, 4)));
    // counit kills mixed pairs: eps(gamma_1 (x) gamma_0) = 0
    CHECK(T->epsilon[pair_flat(1, 0, 4)].is_zero());
    // levels add across the factors
    CHECK(T->level(pair_flat(2, 3, 4)) == 5);
}

TEST_CASE("tensor square structure maps are independent of the pair window") {
    auto P = divided_power_algebroid(ring_mod(3), 9);
    auto small = tensor_square_algebroid(P, 2);
    auto big = tensor_square_algebroid(P, 4);
    auto srep = small->check_axioms();
    CHECK(srep.all_pass());
    CHECK(!srep.any_indeterminate());
    // epsilon and levels agree between the two windows on shared pairs
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(small->epsilon[pair_flat(i, j, 2)] == big->epsilon[pair_flat(i, j, 4)]);
            CHECK(small->level(pair_flat(i, j, 2)) == big->level(pair_flat(i, j, 4)));
        }
}

TEST_CASE("tensor square rejects presentations with a twisted right unit") {
    auto P = pair_groupoid_algebroid(2);
    CHECK_THROWS_AS(tensor_square_algebroid(P, 2), Error);
}
