#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "halg/freemod.hpp"
#include "halg/report.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Presentation of a commutative Hopf algebroid (A, Gamma) by structure
// constants on a window.
//
// Gamma is free as a left A-module (through the left unit etaL) with basis
// e_0, e_1, ...; only indices < window are materialized.  Scalars act on
// vectors through etaL, so "a * e_i" is plain coefficient scaling.  The
// right unit etaR is a second, different A-action: it is determined by the
// images of the canonical generators of A and evaluated on arbitrary
// elements by polynomial evaluation inside Gamma.
//
// The coproduct lands in Gamma (x)_{etaR, A, etaL} Gamma; its normal form
// keeps coefficients on the left factor, which is exactly what TensorVec
// stores.  Moving a scalar across the tensor sign therefore reads
//     g (x) (a . e_j)  =  (g * etaR(a)) (x) e_j .
//
// Every basis index carries a filtration level.  The presentation is
// Delta-adapted: all indices appearing in delta(k) have level <= level(k).
// That is what makes windowed dual-algebra computations close up;
// check_axioms() verifies it as axiom (7).
// ---------------------------------------------------------------------------

struct Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

struct Presentation {
    RingPtr base;       // A
    int window = 0;     // number of materialized basis indices
    std::vector<int> levels;  // size window; defaults 0,1,2,...

    Vec unit;                                  // 1_Gamma in the basis
    std::map<std::pair<int, int>, Vec> mult;   // (i,j) -> e_i * e_j, stored with i <= j
    bool etaR_is_etaL = false;                 // Hopf-algebra shorthand
    std::vector<Vec> etaR_gens;                // images of A's canonical generators
    std::vector<TensorVec> delta;              // Delta(e_i)
    std::vector<RingElement> epsilon;          // eps(e_i)
    std::vector<Vec> conj;                     // c(e_i)

    int level(int i) const;
    void require_index(int i) const;

    // e_i * e_j; WindowExceeded when the product is not materialized.
    const Vec& mult_entry(int i, int j) const;

    Vec gamma_mul(const Vec& a, const Vec& b) const;
    Vec gamma_pow(const Vec& a, long long e) const;

    // etaR on an arbitrary base element, by polynomial evaluation in Gamma
    // of the stored generator images.  Supported base shapes: prime-like
    // rings (Z, Z/m, Z/p^k: no generators needed), products of prime-like
    // rings (idempotent generators), truncated series and monic extensions
    // over prime-like rings (variable generator).
    Vec eval_etaR(const RingElement& a) const;

    TensorVec apply_delta(const Vec& v) const;
    RingElement apply_epsilon(const Vec& v) const;
    // c is a ring map exchanging the two units: c(a . v) = etaR(a) * c(v).
    Vec apply_conj(const Vec& v) const;

    // The seven checkable laws, each evaluated at every window index:
    //  (1) coassociativity        (2) counit laws
    //  (3) units are ring maps    (4) eps restricted along either unit = id
    //  (5) conj is an involution exchanging the units
    //  (6) inverse laws  mu(c (x) id)Delta = etaR eps,  mu(id (x) c)Delta = etaL eps
    //  (7) the filtration is Delta-adapted
    // Window exhaustion during a law is reported as Indeterminate, not Fail.
    Report check_axioms() const;

    // Structural sanity of the tables themselves (shapes, counit of unit).
    void validate_shape() const;
};

// Number of canonical generators of A for etaR purposes (0 for prime-like).
// Deterministic base-ring sample set (small integers, canonical generators
// and a few of their combinations) shared by the law checkers.
std::vector<RingElement> base_samples(const Presentation& P);

int canonical_generator_count(const RingPtr& A);
// The g-th canonical generator as a ring element (idempotent e_g for
// products, the variable for series/extensions).
RingElement canonical_generator(const RingPtr& A, int g);

// ---------------------------------------------------------------------------
// Shipped presentations
// ---------------------------------------------------------------------------

// Divided powers over a commutative base: basis gamma_0..gamma_{W-1},
// gamma_i gamma_j = C(i+j, i) gamma_{i+j}, Delta(gamma_n) = sum gamma_i (x)
// gamma_{n-i}, eps = delta_{n,0}, c(gamma_n) = (-1)^n gamma_n.  A Hopf
// algebra: both units are scalar inclusion.
PresPtr divided_power_algebroid(const RingPtr& base, int window);

// The pair groupoid on n points: A = Z^n, Gamma = Z^n (x) Z^n, basis
// f_j = 1 (x) eps_j over etaL, f_i f_j = delta_{ij} f_j, Delta(f_j) =
// 1_Gamma (x) f_j, eps(f_j) = eps_j, c(f_j) = eps_j . 1_Gamma, etaR(eps_j) =
// f_j.  Its dual algebra is the full matrix ring End(Z^n).
PresPtr pair_groupoid_algebroid(int n);

// Tensor square (A, Gamma (x)_{A-A} Gamma) of a presentation: the tensor is
// taken over both scalar actions at once, basis pairs (i,j) flattened as
// i*pair_window + j, both factors windowed at pair_window.  Multiplication,
// counit and conj act factorwise; the coproduct applies Delta to each factor
// and pairs first-with-third, second-with-fourth.  Requires etaR to act by
// the same scalars as etaL (otherwise the free pair basis does not present
// the tensor and the builder throws Err::Unsupported).
PresPtr tensor_square_algebroid(const PresPtr& P, int pair_window);

// Flat index helpers for pair-indexed presentations.
inline int pair_flat(int i, int j, int pair_window) { return i * pair_window + j; }
inline std::pair<int, int> pair_unflat(int flat, int pair_window) {
    return {flat / pair_window, flat % pair_window};
}

// The multiplication map Gamma (x) Gamma -> Gamma as a morphism check:
// verifies mu commutes with eps and Delta on all window samples of the
// tensor square.  Used by tests; returns a report.
Report tensor_mult_morphism_check(const PresPtr& tensor, const PresPtr& P, int pair_window);

// Derive the conj table from the rest of the data via the left inverse law.
// Requires a connected-filtered shape: in delta(k), the top-level index k
// may appear in the left factor only over a "unital" right index j (one
// with e_m * e_j = e_m for all m) and with coefficient 1; everything else
// must sit at strictly smaller filtration level.  Throws Err::Parse when
// the recursion is not triangular.
std::vector<Vec> derive_conj(const Presentation& P);

}  // namespace halg
