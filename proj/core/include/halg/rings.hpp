#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "halg/error.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Ring descriptors
//
// A descriptor is an immutable, shared description of a coefficient ring.
// Supported shapes:
//   Integers                    Z
//   Rationals                   Q
//   Modular(m)                  Z/m
//   PAdic(p,k)                  Z/p^k with the prime recorded (p odd or 2)
//   Series(base,var,N)          base[[var]]/(var^N), N >= 1
//   Product(factors)            componentwise tuples
//   Extension(base,var,mod)     base[var]/(monic modulus), payload = coeffs
// Elements always carry their descriptor and refuse mixed arithmetic.
// ---------------------------------------------------------------------------

enum class RingKind { Integers, Rationals, Modular, PAdic, Series, Product, Extension };

struct RingDesc;
using RingPtr = std::shared_ptr<const RingDesc>;

struct Rat {
    long long num = 0;
    long long den = 1;
};

class RingElement {
  public:
    RingElement() = default;

    static RingElement from_int(const RingPtr& R, long long n);
    static RingElement zero(const RingPtr& R);
    static RingElement one(const RingPtr& R);
    static RingElement rational(const RingPtr& R, long long num, long long den);
    // Series coefficients (low degree first, padded to the window), product
    // components, or extension coefficients, depending on the ring shape.
    static RingElement composite(const RingPtr& R, std::vector<RingElement> parts);

    bool valid() const { return ring_ != nullptr; }
    const RingPtr& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    long long as_int() const;  // Integers / Modular / PAdic payload
    const Rat& as_rat() const;
    const std::vector<RingElement>& parts() const;

    std::string str() const;

  private:
    RingPtr ring_;
    long long i_ = 0;                // Integers / Modular / PAdic
    Rat r_;                          // Rationals
    std::vector<RingElement> v_;     // Series / Product / Extension

    friend RingElement ring_mul_impl(const RingElement&, const RingElement&);
};

struct RingDesc {
    RingKind kind;
    long long modulus = 0;             // Modular: m; PAdic: p^k (cached)
    long long p = 0;                   // PAdic prime
    int k = 0;                         // PAdic exponent
    RingPtr base;                      // Series / Extension
    std::string var;                   // Series / Extension
    int window = 0;                    // Series: N; Extension: degree
    std::vector<RingPtr> factors;      // Product
    std::vector<RingElement> ext_mod;  // Extension: c_0..c_{d-1} of monic modulus
};

RingPtr ring_Z();
RingPtr ring_Q();
RingPtr ring_mod(long long m);
RingPtr ring_padic(long long p, int k);
RingPtr ring_series(RingPtr base, std::string var, int N);
RingPtr ring_product(std::vector<RingPtr> factors);
RingPtr ring_ext(RingPtr base, std::string var, std::vector<RingElement> mod_coeffs);

bool same_ring(const RingPtr& a, const RingPtr& b);
std::string ring_str(const RingPtr& R);

// Checked 64-bit helpers used throughout (throw Err::Overflow).
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);
long long checked_pow(long long b, int e);

// Unit inverse; throws NonUnit when the element is not invertible.
RingElement ring_inv(const RingElement& a);
RingElement pow_int(const RingElement& a, long long e);

// f(g) for f, g in the same truncated-series ring; g must have zero
// constant term so the substitution is window-stable.
RingElement series_substitute(const RingElement& f, const RingElement& g);

// (1+var)^a as a series over a's own Z/p^k ring, window N.  The exponent is
// taken as its canonical integer lift, every coefficient C(lift, n) is
// computed exactly (p-valuation split off, unit part mod p^{k+v_p(n!)}), so
// the result is the true binomial series of that lift reduced mod p^k.
RingElement binomial_power(const RingElement& a, int N, const std::string& var = "u");

// Integer u-valuation of a series (window if zero).
int series_valuation(const RingElement& f);

// Exact division of truncated series.  The divisor must be var^v * (unit);
// the quotient comes back in a NEW descriptor with window N - v, recording
// the precision spent.  Errors: ZeroDivisor, NonUnit (cofactor not a unit),
// NotDivisible (dividend misses the var^v factor), PrecisionExhausted.
RingElement exact_divide(const RingElement& f, const RingElement& d);

// Reinterpret an element in a compatible smaller ring: PAdic(p,K)->PAdic(p,k<=K),
// Modular m -> m' | m, Integers -> Modular/PAdic, series -> shorter window or
// convertible base, products/extensions componentwise.
RingElement ring_convert(const RingElement& a, const RingPtr& target);

// Uniform-ish random element (for seeded property tests and CLI sampling).
RingElement sample_element(const RingPtr& R, std::mt19937_64& rng);

}  // namespace halg
