#include <cstdlib>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "halg/error.hpp"
#include "halg/homalg.hpp"

using namespace halg;

namespace {

IntMatrix mat(int r, int c, std::vector<long long> entries, long long mod = 0) {
    IntMatrix A = IntMatrix::zero(r, c, mod);
    A.e = std::move(entries);
    A.reduce();
    return A;
}

}  // namespace

TEST_CASE("integer matrices have checked shapes and exact determinants") {
    IntMatrix A = mat(2, 2, {1, 2, 3, 4});
    CHECK(A.str() == "[[1, 2], [3, 4]]");
    CHECK(det(A) == -2);
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(mat(2, 2, {2, 4, 1, 2})) == 0);
    CHECK(det(mat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);

    IntMatrix B = mat(2, 2, {0, 1, 1, 0});
    CHECK(A.mul(B) == mat(2, 2, {2, 1, 4, 3}));
    CHECK(A.transpose() == mat(2, 2, {1, 3, 2, 4}));

    IntMatrix M4 = mat(1, 1, {6}, 4);
    CHECK(M4.at(0, 0) == 2);  // canonicalized on construction
    CHECK(M4.str() == "[[2]] mod 4");
    CHECK_THROWS_AS((void)A.mul(M4), Error);          // modulus mismatch
    CHECK_THROWS_AS((void)A.mul(mat(3, 1, {1, 0, 0})), Error);  // shape
    CHECK_THROWS_AS((void)det(mat(1, 2, {1, 2})), Error);
}

TEST_CASE("smith form produces a divisibility chain with unimodular transforms") {
    SUBCASE("diag(2,3) has invariants (1,6)") {
        IntMatrix A = mat(2, 2, {2, 0, 0, 3});
        SmithForm S = smith_form(A);
        CHECK(S.invariants == std::vector<long long>{1, 6});
        CHECK(S.U.mul(A).mul(S.V) == S.D);
        CHECK(std::abs(det(S.U)) == 1);
        CHECK(std::abs(det(S.V)) == 1);
    }
    SUBCASE("a dense sample") {
        IntMatrix A = mat(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16});
        SmithForm S = smith_form(A);
        REQUIRE(S.invariants.size() == 3);
        for (size_t i = 0; i + 1 < S.invariants.size(); ++i)
            CHECK(S.invariants[i + 1] % S.invariants[i] == 0);
        CHECK(S.U.mul(A).mul(S.V) == S.D);
        long long prod = 1;
        for (long long d : S.invariants) prod *= d;
        CHECK(prod == std::abs(det(A)));
    }
    SUBCASE("zero and identity") {
        CHECK(smith_form(IntMatrix::zero(2, 3)).invariants.empty());
        CHECK(smith_form(IntMatrix::identity(3)).invariants ==
              std::vector<long long>{1, 1, 1});
    }
    SUBCASE("modular input is lifted") {
        IntMatrix A = mat(1, 1, {3}, 9);
        SmithForm S = smith_form(A);
        CHECK(S.invariants == std::vector<long long>{3});
        CHECK(S.D.mod == 0);
    }
}

TEST_CASE("kernels over Z are pure sublattices and over Z/m full-rank lattices") {
    SUBCASE("integer kernel of a rank-1 map") {
        IntMatrix A = mat(1, 2, {2, 4});
        IntMatrix K = kernel_basis(A);
        REQUIRE(K.cols == 1);
        CHECK(A.mul(K).is_zero());
        // kernel of (2,4) is generated by (2,-1): primitive vector
        long long g = std::gcd(std::abs(K.at(0, 0)), std::abs(K.at(1, 0)));
        CHECK(g == 1);
    }
    SUBCASE("kernel of [2] mod 4 is generated by 2") {
        IntMatrix K = kernel_basis(mat(1, 1, {2}, 4));
        REQUIRE(K.rows == 1);
        REQUIRE(K.cols == 1);
        CHECK(std::abs(K.at(0, 0)) == 2);
    }
    SUBCASE("kernel lattice of diag(2,3) mod 6 has index 6") {
        IntMatrix A = mat(2, 2, {2, 0, 0, 3}, 6);
        IntMatrix K = kernel_basis(A);
        REQUIRE(K.cols == 2);
        // every generator is killed mod 6
        IntMatrix AK = A.lift().mul(K);
        for (auto x : AK.e) CHECK(x % 6 == 0);
        // |(Z/6)^2| / |ker| = 36 / 6 = covolume of the lattice
        CHECK(std::abs(det(K)) == 6);
    }
    SUBCASE("kernel of the zero map is everything") {
        IntMatrix K = kernel_basis(IntMatrix::zero(2, 3));
        CHECK(K == IntMatrix::identity(3));
    }
}

TEST_CASE("cokernels read off isomorphism types") {
    CHECK(cokernel(mat(2, 2, {2, 0, 0, 3})).str() == "Z/6");
    CHECK(cokernel(IntMatrix::zero(2, 1)).str() == "Z^2");
    CHECK(cokernel(IntMatrix::identity(3)).str() == "0");
    CHECK(cokernel(mat(1, 1, {3}, 9)).str() == "Z/3");

    ModuleShape s = cokernel(mat(2, 1, {2, 0}));
    CHECK(s.invariants == std::vector<long long>{2});
    CHECK(s.free_rank == 1);
    CHECK(s.str() == "Z/2 + Z^1");
}

TEST_CASE("two-term complexes have computable homology") {
    SUBCASE("multiplication by 2 on Z/4 has kernel homology Z/2") {
        IntMatrix d0 = mat(1, 1, {2}, 4);
        IntMatrix d1 = IntMatrix::zero(1, 1, 4);
        ModuleShape H = complex_homology(d1, d0);
        CHECK(H.invariants == std::vector<long long>{2});
        CHECK(H.free_rank == 0);
    }
    SUBCASE("the zero complex computes the ambient module") {
        ModuleShape H = complex_homology(IntMatrix::zero(1, 1, 4), IntMatrix::zero(1, 1, 4));
        CHECK(H.str() == "Z/4");
    }
    SUBCASE("a degenerate left term still works") {
        IntMatrix d1 = IntMatrix::zero(1, 0, 4);
        ModuleShape H = complex_homology(d1, mat(1, 1, {2}, 4));
        CHECK(H.str() == "Z/2");
    }
    SUBCASE("integer homology can have free rank") {
        IntMatrix d1 = mat(2, 1, {2, 0});
        IntMatrix d0 = IntMatrix::zero(1, 2);
        ModuleShape H = complex_homology(d1, d0);
        CHECK(H.invariants == std::vector<long long>{2});
        CHECK(H.free_rank == 1);
    }
    SUBCASE("exact complexes have trivial homology") {
        IntMatrix d1 = mat(2, 1, {1, 0});
        IntMatrix d0 = mat(1, 2, {0, 1});
        CHECK(complex_homology(d1, d0).str() == "0");
    }
    SUBCASE("shape, modulus and complex preconditions are checked") {
        CHECK_THROWS_AS((void)complex_homology(mat(1, 1, {1}), mat(1, 1, {1})), Error);
        CHECK_THROWS_AS((void)complex_homology(mat(2, 1, {1, 0}), mat(1, 1, {1})), Error);
        CHECK_THROWS_AS(
            (void)complex_homology(IntMatrix::zero(1, 1, 4), IntMatrix::zero(1, 1, 9)), Error);
    }
    SUBCASE("a mod-25 kernel whose raw lattice basis has large entries stays in 64 bits") {
        // this matrix's unreduced kernel basis has entries around 3e4, which
        // used to blow up the fraction-free solve before the Hermite rebase
        IntMatrix d0 = mat(8, 8,
                           {0, 5,  0,  0,  0,  0, 0,  0,   //
                            0, 10, 10, 0,  0,  0, 0,  0,   //
                            0, 10, 20, 15, 0,  0, 0,  0,   //
                            0, 5,  20, 5,  20, 0, 0,  0,   //
                            0, 1,  10, 5,  15, 0, 0,  0,   //
                            0, 0,  12, 15, 15, 0, 5,  0,   //
                            0, 0,  5,  8,  20, 0, 10, 10,  //
                            0, 0,  15, 15, 14, 0, 10, 20},
                           25);
        ModuleShape H = complex_homology(IntMatrix::zero(8, 1, 25), d0);
        CHECK(H.str() == "Z/25 + Z/25 + Z/25 + Z/25");
        CHECK(H == cokernel(d0));
    }
}

TEST_CASE("finite modules normalize to divisibility chains") {
    CHECK(finite_module({2, 3}).inv == std::vector<long long>{6});
    CHECK(finite_module({4}).inv == std::vector<long long>{4});
    CHECK(finite_module({2, 4}).inv == std::vector<long long>{2, 4});
    CHECK(finite_module({1, 5}).inv == std::vector<long long>{5});
    CHECK(finite_module({6, 4}).inv == std::vector<long long>{2, 12});
    CHECK(finite_module({2, 3}).order() == 6);
    CHECK_THROWS_AS((void)finite_module({0}), Error);
    CHECK_THROWS_AS((void)finite_module({-2}), Error);

    SUBCASE("actions must be compatible with the cyclic orders") {
        // on Z/2 + Z/4, e_2 -> e_1 is fine (4 = 0 mod 2) but e_1 -> e_2 is not
        IntMatrix up = mat(2, 2, {0, 1, 0, 0});
        IntMatrix down = mat(2, 2, {0, 0, 1, 0});
        CHECK(finite_module({2, 4}, {up}).action.size() == 1);
        CHECK_THROWS_AS((void)finite_module({2, 4}, {down}), Error);
        CHECK_THROWS_AS((void)finite_module({2, 3}, {up}), Error);  // not chain form
    }
}

TEST_CASE("morphism calculus respects targets") {
    FiniteModule M2 = finite_module({2});
    FiniteModule M4 = finite_module({4});
    FiniteModule M8 = finite_module({8});

    IntMatrix F = mat(1, 1, {2});  // Z/2 -> Z/4, 1 |-> 2
    IntMatrix G = mat(1, 1, {2});  // Z/4 -> Z/8, 1 |-> 2
    CHECK(morphism_valid(F, M2, M4));
    CHECK_FALSE(morphism_valid(mat(1, 1, {1}), M2, M4));
    CHECK(morphism_valid(G, M4, M8));

    IntMatrix GF = compose_morphisms(G, F, M8);
    CHECK(GF == mat(1, 1, {4}));
    CHECK(morphism_equal(GF, mat(1, 1, {12}), M8));  // 12 = 4 mod 8
    CHECK_FALSE(morphism_equal(GF, mat(1, 1, {2}), M8));
}

TEST_CASE("pontryagin duality is involutive and contravariant") {
    SUBCASE("invariants are self-dual") {
        CHECK(pontryagin_dual(finite_module({4})).inv == std::vector<long long>{4});
        CHECK(pontryagin_dual(finite_module({2, 3})).inv == std::vector<long long>{6});
        CHECK(pontryagin_dual(finite_module({2, 4})).inv == std::vector<long long>{2, 4});
    }
    SUBCASE("actions dualize to the transposed right action") {
        IntMatrix T = mat(2, 2, {0, 1, 0, 0});
        FiniteModule M = finite_module({9, 9}, {T});
        FiniteModule D = pontryagin_dual(M);
        REQUIRE(D.action.size() == 1);
        CHECK(D.action[0] == mat(2, 2, {0, 0, 1, 0}));  // plain transpose, equal orders
        FiniteModule DD = pontryagin_dual(D);
        CHECK(DD.inv == M.inv);
        CHECK(DD.action[0] == M.action[0]);  // involution
    }
    SUBCASE("mixed orders rescale the transposed entries") {
        // on Z/2 + Z/4 the shift e_2 -> e_1 dualizes to chi_1 -> 2 * chi_2
        IntMatrix T = mat(2, 2, {0, 1, 0, 0});
        FiniteModule M = finite_module({2, 4}, {T});
        FiniteModule D = pontryagin_dual(M);
        CHECK(D.action[0] == mat(2, 2, {0, 0, 2, 0}));
        CHECK(morphism_valid(D.action[0], D, D));
        CHECK(pontryagin_dual(D).action[0] == M.action[0]);
    }
    SUBCASE("dual of a composite is the reversed composite of duals") {
        FiniteModule M2 = finite_module({2});
        FiniteModule M4 = finite_module({4});
        FiniteModule M8 = finite_module({8});
        IntMatrix F = mat(1, 1, {2});
        IntMatrix G = mat(1, 1, {2});
        IntMatrix lhs = dual_morphism(compose_morphisms(G, F, M8), M2, M8);
        IntMatrix rhs =
            compose_morphisms(dual_morphism(F, M2, M4), dual_morphism(G, M4, M8), M2);
        CHECK(morphism_equal(lhs, rhs, M2));
        CHECK(lhs == mat(1, 1, {1}));
    }
    SUBCASE("the natural map to the double dual is bijective") {
        CHECK(double_dual_natural_check(finite_module({4})));
        CHECK(double_dual_natural_check(finite_module({2, 4})));
        CHECK(double_dual_natural_check(finite_module({2, 3})));
        CHECK(double_dual_natural_check(finite_module({3, 9, 27})));
        IntMatrix T = mat(2, 2, {0, 1, 0, 0});
        CHECK(double_dual_natural_check(finite_module({9, 9}, {T})));
        // large module exercises the structural route
        CHECK(double_dual_natural_check(finite_module({1009, 2018}), 100));
    }
}
