#pragma once

#include <functional>
#include <vector>

#include "halg/comod.hpp"
#include "halg/dual.hpp"
#include "halg/error.hpp"
#include "halg/freemod.hpp"
#include "halg/hopf.hpp"
#include "halg/report.hpp"
#include "halg/rings.hpp"

// ---------------------------------------------------------------------------
// Base change of an algebroid presentation along a free ring extension
// A -> B, the comparison map beta from the base-changed object into a
// second presentation over B, its dual, and the comodule pullback.
//
// Everything here depends on B being FREE as an A-module with an explicit
// basis b_0 = 1, b_1, ...: that is what turns {e_i (x) b_j} into an
// etaL-free basis of B (x) Gamma (x) B and keeps every table computable.
// The normal-form rewriting order is fixed: coefficients on the right
// tensor slot migrate into the middle through etaR, middle coefficients
// migrate to the left slot through the extension map.  Freeness makes this
// confluent, so there is exactly one normal form per element.
// ---------------------------------------------------------------------------

namespace halg {

// B free over A with basis {b_j}, b_0 = 1, and the A-coordinates of every
// basis product b_i * b_j.
struct FreeRingExtension {
    RingPtr source;                              // A
    RingPtr target;                              // B
    std::vector<RingElement> basis;              // b_j in B, b_0 = 1
    std::vector<std::vector<RingElement>> mult;  // (i*rank+j) -> A-coords of b_i*b_j

    int rank() const { return static_cast<int>(basis.size()); }
    // the structure map A -> B
    RingElement up(const RingElement& a) const;
    // coordinates over the basis; BadArgument if b is not in the span
    // (cannot happen for the shipped constructors)
    std::vector<RingElement> down(const RingElement& b) const;
};

// rank-1 extension A = B, b_0 = 1.
FreeRingExtension identity_extension(const RingPtr& A);

// the power basis {1, w, ..., w^{d-1}} of a quotient ring A[w]/(monic);
// `ext` must be an Extension ring descriptor.
FreeRingExtension power_basis_extension(const RingPtr& ext);

// A morphism of presentations (A, Gamma) -> (B, Sigma): a ring map on the
// bases plus the images of the Gamma basis.  Linear combinations extend by
// pushing etaL coefficients through the ring map.
struct HopfMorphism {
    PresPtr source;
    PresPtr target;
    std::function<RingElement(const RingElement&)> ring_map;  // A -> B
    std::vector<Vec> images;                                  // e_i -> Vec over target
};

// extension of the basis images to arbitrary vectors over the source
Vec apply_morphism(const HopfMorphism& f, const Vec& v);

HopfMorphism identity_morphism(const PresPtr& P);

// (B, B (x) Gamma (x) B) on the flattened basis (i, j) = e_i (x) b_j at
// index i*rank + j, window = source window * rank, level(i,j) =
// level(i) + j.  Products whose middle factor leaves the source window are
// left absent (the usual window semantics).  The result passes
// validate_shape; the axioms are inherited from the source.
PresPtr base_change_algebroid(const PresPtr& P, const FreeRingExtension& ext);

// the canonical morphism (A, Gamma) -> (B, B (x) Gamma (x) B):
// a -> up(a), e_i -> e_(i,0)
HopfMorphism inclusion_morphism(const PresPtr& P, const FreeRingExtension& ext,
                                const PresPtr& changed);

// beta: B (x) Gamma (x) B -> Sigma, basis-wise
//   e_(i,j) -> f_m(e_i) * etaR_Sigma(b_j),
// stored as one image per flat index.  Construction verifies that beta
// commutes with the counits (a morphism-data sanity check).
struct BetaMap {
    PresPtr domain;           // the base-changed presentation
    PresPtr codomain;         // Sigma
    std::vector<Vec> images;  // per flat basis index, over Sigma's base
};

BetaMap beta_map(const HopfMorphism& f, const FreeRingExtension& ext, const PresPtr& changed);

// etaL-linear extension: coefficients ride along unchanged (both sides are
// B-modules via their left units).
Vec apply_beta(const BetaMap& beta, const Vec& x);

// restriction of a functional along beta: (beta_dual D)(x) = D(beta(x)),
// tabulated on the first W basis indices of the domain.
DualElement beta_dual(const DualElement& D, const BetaMap& beta, int W);
DualElement beta_dual(const DualElement& D, const BetaMap& beta);  // W = domain window

// comodule base change: same rank, structure entries pushed through f.
Comodule pullback_comodule(const HopfMorphism& f, const Comodule& M);

// Verifies, on sampled functionals and coordinates, that the two module
// structures a comodule M acquires over the target base agree:
//   - translate the Sigma-comodule pullback of M and act by D, versus
//   - translate the base-changed-algebroid pullback of M and act by
//     beta_dual(D).
// Report entries: "beta-dual-unital", "beta-dual-multiplicative",
// "identification".  Window exhaustion downgrades an entry to
// Indeterminate.
Report identification_check(const HopfMorphism& f, const FreeRingExtension& ext,
                            const Comodule& M);

// The shipped instance: divided powers over F_p pushed into the quadratic
// extension F_p[w]/(w^2+1) (p = 3 by default: F_9), with f_m the identity
// on basis vectors.
struct BaseChangeInstance {
    PresPtr source;   // divided powers over F_p
    PresPtr target;   // divided powers over F_p[w]/(w^2+1)
    PresPtr changed;  // the base-changed algebroid, window 2x
    FreeRingExtension ext;
    HopfMorphism mor;   // source -> target
    HopfMorphism iota;  // source -> changed
    BetaMap beta;       // changed -> target
};

BaseChangeInstance divided_power_quadratic_instance(int window, long long p = 3);

}  // namespace halg
