#pragma once

#include <functional>
#include <map>
#include <vector>

#include "halg/dual.hpp"
#include "halg/hopf.hpp"
#include "halg/report.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Right comodules of finite free rank over a Hopf algebroid presentation,
// their translation into modules over the dual algebra, and the monoidal
// structure.
//
// A comodule stores psi on generators: psi(m_s) = sum_t m_t (x) gamma_{ts}.
// On general coordinates the structure map twists through etaR,
//     psi(sum_s x_s m_s) = sum_t m_t (x) sum_s etaR(x_s) * gamma_{ts},
// because the target carries its A-structure through the right unit.  That
// convention is what makes the base ring itself (rank 1, gamma_00 = 1) the
// comodule whose structure map is etaR.
// ---------------------------------------------------------------------------

using Coords = std::vector<RingElement>;

Coords coords_zero(const RingPtr& A, int rank);
Coords coords_basis(const RingPtr& A, int rank, int s);
bool coords_equal(const Coords& a, const Coords& b);

struct Comodule {
    PresPtr pres;
    int rank = 0;
    // psi[s]: t -> gamma_{ts}; absent keys mean zero
    std::vector<std::map<int, Vec>> psi;
};

bool comodule_equal(const Comodule& M, const Comodule& N);

// The action of a functional through the structure map:
// (id (x) D)(psi(x)), i.e. out_t = sum_s D(etaR(x_s) * gamma_{ts}).
Coords comodule_act(const Comodule& M, const DualElement& D, const Coords& x);

// Module translation: a procedure view of comodule_act.
struct ModuleAction {
    PresPtr pres;
    int rank = 0;
    std::function<Coords(const DualElement&, const Coords&)> act;
};

// (id (x) eps) psi = id  and  (id (x) Delta) psi = (psi (x) id) psi on
// generators; report entries "comodule-counit" and "comodule-coassociativity"
// with the offending generator as witness.  Law instances that push past
// window W come back Indeterminate.
Report check_comodule(const Comodule& M, int W);

ModuleAction to_module(const Comodule& M);

// Reconstruction psi(m) = sum_{i<B} act(e_i∨)(m) (x) e_i.  The action must
// vanish on every dual basis element from B up to the presentation window
// (discreteness at this bound); otherwise SupportExceeded.
Comodule from_module(const ModuleAction& action, int B);

// Both sides of the translation lemma on one comodule: the comodule axioms
// for psi, and unitality/multiplicativity of the translated action on
// sampled dual pairs.  Entries: the two check_comodule entries,
// "module-unital", "module-multiplicative", and "translation-verdicts-agree"
// which passes exactly when the two sides reach the same verdict.
Report iff_test(const Comodule& M);

// Tensor product comodule on M (x)_A N: rank r_M * r_N with flat index
// (s, u) -> s * r_N + u and gamma^{MN}_{(t,v)(s,u)} = gamma^M_{ts} * gamma^N_{vu}.
Comodule tensor_comodule(const Comodule& M, const Comodule& N);

// D acting on m (x) n by the finite double sum
//     sum_{i,j} D(e_i e_j) * (e_i∨ m) (x) (e_j∨ n),
// summed only over the indices where the actions are nonzero.  The result is
// checked against the translated tensor-comodule action and a disagreement
// is a hard error.
Coords dual_action_on_tensor(const DualElement& D, const Comodule& M, const Comodule& N,
                             const Coords& m, const Coords& n);

// The base ring as a comodule over itself: rank 1, gamma_00 = 1_Gamma, so
// the structure map is etaR and the action is act_on_A.
Comodule base_comodule(const PresPtr& P);

// The coalgebra acting on its own first `rank` basis vectors:
// gamma_{ts} = the e_t-coefficients of Delta(e_s) regrouped onto the right
// leg.  Requires the coproduct of indices < rank to keep its left supports
// below rank (otherwise the truncation loses terms and BadArgument is
// raised).  rank = window gives the full regular comodule.
Comodule truncated_regular_comodule(const PresPtr& P, int rank);

}  // namespace halg
