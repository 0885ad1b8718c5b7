#pragma once

#include <string>
#include <vector>

#include "halg/error.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Finite-scale homological algebra over Z and Z/m: Smith normal forms,
// kernels, cokernels, homology of two-term complexes, and Pontryagin
// duality for finite abelian groups with an optional algebra action.
//
// Matrices carry a modulus: mod == 0 means integer entries, mod == m means
// entries are canonical representatives in [0, m).  Elimination always
// happens over Z on canonical lifts (naive elimination over Z/p^k stalls on
// zero-divisor pivots); results are reduced at the end.
// ---------------------------------------------------------------------------

struct IntMatrix {
    int rows = 0, cols = 0;
    long long mod = 0;  // 0: over Z; else entries canonical in [0, mod)
    std::vector<long long> e;

    static IntMatrix zero(int r, int c, long long mod = 0);
    static IntMatrix identity(int n, long long mod = 0);

    long long& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    void reduce();  // canonicalize entries mod `mod` (no-op over Z)
    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix transpose() const;
    IntMatrix lift() const;  // same entries, mod = 0
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    std::string str() const;
};

// Exact determinant (fraction-free elimination, 128-bit intermediates).
long long det(const IntMatrix& A);

// U * A * V = D with U, V unimodular over Z and D diagonal satisfying the
// divisibility chain d_1 | d_2 | ...; invariants lists the nonzero d_i.
// Modular input is lifted first; U, V are unimodular over Z either way.
struct SmithForm {
    IntMatrix U, D, V;
    std::vector<long long> invariants;
};
SmithForm smith_form(const IntMatrix& A);

// Basis of ker(A) as columns.  Over Z the kernel is a pure sublattice and
// the columns are a basis of it.  Over Z/m the columns generate
// {x : Ax = 0 mod m} as a full-rank integer lattice containing mZ^cols
// (they are returned as integer columns, not reduced).
IntMatrix kernel_basis(const IntMatrix& A);

// Isomorphism type of a finitely generated abelian group.
struct ModuleShape {
    std::vector<long long> invariants;  // divisibility chain, entries >= 2
    int free_rank = 0;
    bool operator==(const ModuleShape& o) const {
        return invariants == o.invariants && free_rank == o.free_rank;
    }
    std::string str() const;
};

// coker(A) = target / im(A), respecting A.mod.
ModuleShape cokernel(const IntMatrix& A);

// Homology ker(d0)/im(d1) of  .. --d1--> C --d0--> ..  (requires d0*d1 = 0,
// matching moduli).  Over Z/m the answer is a finite group.
ModuleShape complex_homology(const IntMatrix& d1, const IntMatrix& d0);

// ---------------------------------------------------------------------------
// Finite modules and Pontryagin duality
// ---------------------------------------------------------------------------

// M = (+)_i Z/inv[i] with generators e_i, plus optional action matrices
// (one per algebra generator): T maps e_j to sum_i T_{ij} e_i, so vectors
// are columns and compatibility means T_{ij} * inv[j] = 0 mod inv[i].
struct FiniteModule {
    std::vector<long long> inv;       // divisibility chain, entries >= 2
    std::vector<IntMatrix> action;    // optional, each n x n over Z

    int gens() const { return static_cast<int>(inv.size()); }
    long long order() const;
};

// Normalize raw cyclic orders into a divisibility chain (drops 1s; rejects
// 0s, which would be a free part).
FiniteModule finite_module(std::vector<long long> raw_orders,
                           std::vector<IntMatrix> action = {});

// A morphism M -> N is an integer matrix F with F(e_i) = sum_j F_{ji} e_j,
// valid when F_{ji} * M.inv[i] = 0 mod N.inv[j].
bool morphism_valid(const IntMatrix& F, const FiniteModule& M, const FiniteModule& N);
bool morphism_equal(const IntMatrix& F, const IntMatrix& G, const FiniteModule& target);
IntMatrix compose_morphisms(const IntMatrix& G, const IntMatrix& F, const FiniteModule& target);

// Hom(M, Q/Z): same invariants; the dual of the character basis chi_j
// (chi_j(e_i) = delta_ij / inv[j] mod 1).  Action matrices transpose-dualize
// (a right action).  Throws on modules with a free part upstream.
FiniteModule pontryagin_dual(const FiniteModule& M);

// Dual of a morphism F: M -> N, i.e. F∨: N∨ -> M∨ in the character bases.
IntMatrix dual_morphism(const IntMatrix& F, const FiniteModule& M, const FiniteModule& N);

// Evaluate the natural map M -> M∨∨ and verify it is bijective; for small
// modules (order <= enumeration_bound) injectivity is checked by exhaustive
// character evaluation, otherwise structurally via the evaluation matrix.
bool double_dual_natural_check(const FiniteModule& M, long long enumeration_bound = 20000);

}  // namespace halg
