#pragma once

#include <memory>
#include <string>
#include <vector>

#include "halg/error.hpp"
#include "halg/homalg.hpp"
#include "halg/report.hpp"
#include "halg/rings.hpp"

// ---------------------------------------------------------------------------
// The q-de Rham operator algebra: twisted polynomials f_0 + f_1 D + ... over
// Z/p^k[[u]]/(u^N) with u = q - 1, where the symbol D rewrites past
// coefficients by
//      D * f = sigma(f) * D + delta(f),
// sigma(f)(q) = f(q^{1+p}) and delta(f) = (sigma(f) - f) / (q(q-1)).
//
// Precision: coefficients carry their own u-window in their ring
// descriptor.  Every delta spends exactly one u-digit (the division by u;
// the (1+u) cofactor is a unit).  Operations return results at the exact
// window that survives and raise PrecisionExhausted when nothing does,
// never silently truncating.
// ---------------------------------------------------------------------------

namespace halg {

struct TwistConfig {
    long long p = 0;  // odd prime; p = 2 is rejected at construction
    int k = 0;        // coefficients live in Z/p^k
    int N = 0;        // initial u-window
    RingPtr coeff;    // Z/p^k
    RingPtr base;     // Z/p^k[[u]]/(u^N)

    // q = 1 + u and the variable u at a given window (default: full)
    RingElement q(int W = 0) const;
    RingElement u(int W = 0) const;
    // [p]_q = 1 + q + ... + q^{p-1} at a given window
    RingElement pq(int W = 0) const;

    // the substitution q -> q^{1+p}; window-preserving
    RingElement sigma(const RingElement& f) const;
    // the substitution q -> q^{1/(1+p)} via the binomial series with a
    // boosted-precision exponent lift; window-preserving
    RingElement sigma_inv(const RingElement& f) const;
    // delta(f) = (sigma(f) - f) / (q(q-1)); one u-digit spent
    RingElement delta(const RingElement& f) const;
    // the Frobenius-twisted derivation (sigma(f) - f) / (q(q^p - 1)) =
    // delta(f) / [p]_q, computed by exact integer-lift division (the
    // constant term p of [p]_q is a zero divisor mod p^k, so the plain
    // series division cannot); one u-digit spent
    RingElement delta_phi(const RingElement& f) const;
};

using TwistPtr = std::shared_ptr<const TwistConfig>;

// rejects p = 2 (and non-odd-prime p), k < 1, N < 2
TwistPtr twist_config(long long p, int k, int N);

// which derivation the symbol D carries past coefficients
enum class OreTwist { Standard, Frobenius };

struct OrePolynomial {
    TwistPtr cfg;
    OreTwist twist = OreTwist::Standard;
    RingPtr ring;                     // shared coefficient descriptor (window = precision)
    std::vector<RingElement> coeffs;  // coeffs[i] * D^i; empty = zero, back() nonzero

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    int window() const { return ring ? ring->window : 0; }
    std::string str() const;
};

// constructors; coefficients are aligned to one common window
OrePolynomial ore_zero(const TwistPtr& cfg, OreTwist twist = OreTwist::Standard);
OrePolynomial ore_base(const TwistPtr& cfg, const RingElement& f,
                       OreTwist twist = OreTwist::Standard);
OrePolynomial ore_nabla(const TwistPtr& cfg, OreTwist twist = OreTwist::Standard);
OrePolynomial ore_poly(const TwistPtr& cfg, std::vector<RingElement> coeffs,
                       OreTwist twist = OreTwist::Standard);

OrePolynomial ore_add(const OrePolynomial& P, const OrePolynomial& Q);
OrePolynomial ore_neg(const OrePolynomial& P);
OrePolynomial ore_sub(const OrePolynomial& P, const OrePolynomial& Q);
// normal-form product; the result window is min(windows) - deg(P)
OrePolynomial ore_mul(const OrePolynomial& P, const OrePolynomial& Q);
// equality after aligning to the smaller window
bool ore_equal(const OrePolynomial& P, const OrePolynomial& Q);

// the action of D on the base ring (delta for the standard twist)
RingElement nabla_act(const TwistPtr& cfg, const RingElement& f);

// the algebra map determined by D -> [p]_q * D^phi, identity on
// coefficients; input must carry the standard twist
OrePolynomial frobenius_transport(const OrePolynomial& P);

// the class of P in (algebra)/(left multiples of D), normalized into the
// base ring by the top-down rewrite  f * D == -delta(sigma_inv(f));
// idempotent on base elements.  Standard twist only.
RingElement reduce_right_module(const OrePolynomial& P);

// kernel and cokernel of the delta matrix on the u-coefficient space,
// N x N over Z/p^k, assembled at a window wide enough that every shown
// entry is exact.  [artifact_lo, artifact_hi) marks degrees whose kernel
// membership the truncation cannot certify: at least the top two degrees,
// extended downward to the first column whose true image escaped the
// window.  Below the band the matrix agrees with the untruncated operator,
// so the kernel there is exactly the constants.
struct CohomologyResult {
    ModuleShape h0;
    ModuleShape h1;
    int artifact_lo = 0;  // inclusive
    int artifact_hi = 0;  // exclusive
    IntMatrix matrix;     // the delta matrix itself (column j = delta(u^j))
};
CohomologyResult two_term_cohomology(long long p, int k, int N);

// ---------------------------------------------------------------------------
// The classical analogue: Q[x] with sigma = id and delta = d/dx.
// ---------------------------------------------------------------------------

struct WeylConfig {
    RingPtr base;  // Q[x], degrees below the bound
    int bound = 0;
};
WeylConfig weyl_config(int degree_bound);

struct WeylPolynomial {
    RingPtr ring;
    std::vector<RingElement> coeffs;  // coeffs[i] * (d/dx)^i
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

WeylPolynomial weyl_base(const WeylConfig& cfg, const RingElement& f);
WeylPolynomial weyl_d(const WeylConfig& cfg);
WeylPolynomial weyl_poly(const WeylConfig& cfg, std::vector<RingElement> coeffs);
WeylPolynomial weyl_add(const WeylPolynomial& P, const WeylPolynomial& Q);
// degree-checked product; DegreeOverflow when x-degrees leave the bound
WeylPolynomial weyl_mul(const WeylConfig& cfg, const WeylPolynomial& P, const WeylPolynomial& Q);
bool weyl_equal(const WeylPolynomial& P, const WeylPolynomial& Q);

RingElement formal_derivative(const RingElement& f);

// class of P modulo left multiples of d/dx: f * (d/dx) == -f'
RingElement weyl_reduce_right(const WeylConfig& cfg, const WeylPolynomial& P);

// report entries "weyl-commutation" ((d/dx) f = f (d/dx) + f') and
// "weyl-right-module" (f (d/dx) reduces to -f')
Report weyl_relation_check(const WeylConfig& cfg, const RingElement& f);

}  // namespace halg
