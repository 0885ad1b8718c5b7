#pragma once

#include <optional>
#include <vector>

#include "halg/freemod.hpp"
#include "halg/hopf.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// The dual algebra of a Hopf algebroid presentation: left-A-linear
// functionals on the windowed basis, with convolution-style multiplication.
//
// MULTIPLICATION ORDER.  dual_mul(D2, D1) is the composite "apply the
// coproduct, let D1 eat the RIGHT tensor factor, push its value through
// etaR, then apply D2":
//
//     (D2 ∘ D1)(e_k) = D2( sum_j g_j * etaR(D1(e_j)) )   where
//     Delta(e_k) = sum_j g_j (x) e_j in normal form.
//
// Swapping the roles of D1 and D2 yields the opposite algebra, so callers
// must not "fix" the order to match function-composition intuition: the
// convention here is that the SECOND argument acts first, on the right
// factor.
// ---------------------------------------------------------------------------

struct DualElement {
    PresPtr pres;
    DualVec vec;  // invariant: vec.window() <= pres->window
};

// chi(e_i) for i inside the table; beyond it, 0 when the functional promises
// finite support, otherwise WindowExceeded.
RingElement dual_value(const DualElement& D, int i);
RingElement dual_eval(const DualElement& D, const Vec& v);
bool dual_equal(const DualElement& D, const DualElement& E);

// The counit as the unit of the dual algebra: table i -> eps(e_i).
DualElement dual_unit(const PresPtr& P);

// e_i∨ (finite support by construction).
DualElement dual_basis(const PresPtr& P, int i);

// Convolution product windowed at W (defaults to the smaller input window).
// The result's tail is unknown, so its finite_support promise is dropped.
DualElement dual_mul(const DualElement& D2, const DualElement& D1, int W);
DualElement dual_mul(const DualElement& D2, const DualElement& D1);

// eps∨(a) = a * eps, a ring homomorphism A -> dual algebra.
DualElement eps_dual(const PresPtr& P, const RingElement& a);

// etaL∨(D) = D(1_Gamma); left-A-linear (but not right-A-linear in general).
RingElement etaL_dual(const DualElement& D);

// Left A-module structure: (a * D)(g) = a * D(g).
DualElement left_A_action(const DualElement& D, const RingElement& a);

// Right A-module structure: table i -> D(etaR(a) * e_i).  Computed by that
// formula and by dual_mul(D, eps_dual(a)); the two must agree and the
// mismatch is a hard error.
DualElement right_A_action(const DualElement& D, const RingElement& a);

// The action on the base: a -> D(etaR(a)).
RingElement act_on_A(const DualElement& D, const RingElement& a);

// Heuristic search for a nonzero functional on the first W indices that
// annihilates etaR(a) for every sample a.  A witness disproves injectivity
// of the dual algebra's action on A at this window; absence of a witness
// proves nothing.  Never throws: samples (or base shapes) the search cannot
// use are skipped.
std::optional<DualElement> restrictive_witness(const PresPtr& P, int W,
                                               const std::vector<RingElement>& samples);

}  // namespace halg
