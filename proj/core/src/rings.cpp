#include "halg/rings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace halg {

const char* err_name(Err e) {
    switch (e) {
        case Err::DescriptorMismatch: return "descriptor mismatch";
        case Err::NotDivisible: return "not divisible";
        case Err::NonUnit: return "non-unit";
        case Err::ZeroDivisor: return "zero divisor";
        case Err::WindowExceeded: return "window exceeded";
        case Err::PrecisionExhausted: return "precision exhausted";
        case Err::SupportExceeded: return "support exceeded";
        case Err::DegreeOverflow: return "degree overflow";
        case Err::Parse: return "parse error";
        case Err::BadArgument: return "bad argument";
        case Err::Unsupported: return "unsupported";
        case Err::Overflow: return "integer overflow";
        case Err::FilterViolation: return "filtration violation";
    }
    return "unknown";
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "add");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "mul");
    return r;
}

long long checked_pow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

// ---------------------------------------------------------------------------
// descriptors
// ---------------------------------------------------------------------------

RingPtr ring_Z() {
    static RingPtr R = std::make_shared<RingDesc>(RingDesc{RingKind::Integers});
    return R;
}

RingPtr ring_Q() {
    static RingPtr R = std::make_shared<RingDesc>(RingDesc{RingKind::Rationals});
    return R;
}

RingPtr ring_mod(long long m) {
    if (m < 2) fail(Err::BadArgument, "modulus must be >= 2");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Modular;
    d->modulus = m;
    return d;
}

RingPtr ring_padic(long long p, int k) {
    if (p < 2 || k < 1) fail(Err::BadArgument, "need prime p >= 2 and k >= 1");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::PAdic;
    d->p = p;
    d->k = k;
    d->modulus = checked_pow(p, k);
    return d;
}

RingPtr ring_series(RingPtr base, std::string var, int N) {
    if (!base) fail(Err::BadArgument, "series needs a base ring");
    if (N < 1) fail(Err::PrecisionExhausted, "series window must be >= 1");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Series;
    d->base = std::move(base);
    d->var = std::move(var);
    d->window = N;
    return d;
}

RingPtr ring_product(std::vector<RingPtr> factors) {
    if (factors.empty()) fail(Err::BadArgument, "product of no rings");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Product;
    d->factors = std::move(factors);
    return d;
}

RingPtr ring_ext(RingPtr base, std::string var, std::vector<RingElement> mod_coeffs) {
    if (!base) fail(Err::BadArgument, "extension needs a base ring");
    if (mod_coeffs.empty()) fail(Err::BadArgument, "extension needs a monic modulus of degree >= 1");
    for (const auto& c : mod_coeffs)
        if (!c.valid() || !same_ring(c.ring(), base))
            fail(Err::DescriptorMismatch, "extension modulus coefficients must live in the base ring");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Extension;
    d->base = std::move(base);
    d->var = std::move(var);
    d->window = static_cast<int>(mod_coeffs.size());
    d->ext_mod = std::move(mod_coeffs);
    return d;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::Modular: return a->modulus == b->modulus;
        case RingKind::PAdic: return a->p == b->p && a->k == b->k;
        case RingKind::Series:
            return a->window == b->window && a->var == b->var && same_ring(a->base, b->base);
        case RingKind::Product: {
            if (a->factors.size() != b->factors.size()) return false;
            for (size_t i = 0; i < a->factors.size(); ++i)
                if (!same_ring(a->factors[i], b->factors[i])) return false;
            return true;
        }
        case RingKind::Extension: {
            if (a->var != b->var || a->window != b->window || !same_ring(a->base, b->base))
                return false;
            for (size_t i = 0; i < a->ext_mod.size(); ++i)
                if (!(a->ext_mod[i] == b->ext_mod[i])) return false;
            return true;
        }
    }
    return false;
}

std::string ring_str(const RingPtr& R) {
    switch (R->kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::Modular: return "Z/" + std::to_string(R->modulus);
        case RingKind::PAdic:
            return "Zp(" + std::to_string(R->p) + "," + std::to_string(R->k) + ")";
        case RingKind::Series:
            return "series(" + R->var + ";" + std::to_string(R->window) + ";" + ring_str(R->base) + ")";
        case RingKind::Product: {
            std::string s = "prod(";
            for (size_t i = 0; i < R->factors.size(); ++i) {
                if (i) s += ";";
                s += ring_str(R->factors[i]);
            }
            return s + ")";
        }
        case RingKind::Extension: {
            std::string s = "ext(" + R->var + ";" + ring_str(R->base) + ";";
            for (size_t i = 0; i < R->ext_mod.size(); ++i) {
                if (i) s += ",";
                s += R->ext_mod[i].str();
            }
            return s + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// element construction / canonical form
// ---------------------------------------------------------------------------

namespace {

long long mod_reduce(long long x, long long m) {
    long long r = x % m;
    if (r < 0) r += m;
    return r;
}

Rat rat_normalize(long long num, long long den) {
    if (den == 0) fail(Err::ZeroDivisor, "rational with zero denominator");
    if (num == 0) return {0, 1};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

void require_same(const RingElement& a, const RingElement& b) {
    if (!a.valid() || !b.valid()) fail(Err::BadArgument, "uninitialized ring element");
    if (!same_ring(a.ring(), b.ring()))
        fail(Err::DescriptorMismatch,
             "operands live in " + ring_str(a.ring()) + " and " + ring_str(b.ring()));
}

}  // namespace

RingElement RingElement::from_int(const RingPtr& R, long long n) {
    RingElement e;
    e.ring_ = R;
    switch (R->kind) {
        case RingKind::Integers: e.i_ = n; break;
        case RingKind::Rationals: e.r_ = {n, 1}; break;
        case RingKind::Modular:
        case RingKind::PAdic: e.i_ = mod_reduce(n, R->modulus); break;
        case RingKind::Series: {
            e.v_.assign(R->window, zero(R->base));
            e.v_[0] = from_int(R->base, n);
            break;
        }
        case RingKind::Product: {
            e.v_.reserve(R->factors.size());
            for (const auto& f : R->factors) e.v_.push_back(from_int(f, n));
            break;
        }
        case RingKind::Extension: {
            e.v_.assign(R->window, zero(R->base));
            e.v_[0] = from_int(R->base, n);
            break;
        }
    }
    return e;
}

RingElement RingElement::zero(const RingPtr& R) { return from_int(R, 0); }
RingElement RingElement::one(const RingPtr& R) { return from_int(R, 1); }

RingElement RingElement::rational(const RingPtr& R, long long num, long long den) {
    if (R->kind != RingKind::Rationals) fail(Err::Unsupported, "rational payload in " + ring_str(R));
    RingElement e;
    e.ring_ = R;
    e.r_ = rat_normalize(num, den);
    return e;
}

RingElement RingElement::composite(const RingPtr& R, std::vector<RingElement> parts) {
    RingElement e;
    e.ring_ = R;
    switch (R->kind) {
        case RingKind::Series:
        case RingKind::Extension: {
            if (static_cast<int>(parts.size()) > R->window)
                fail(Err::WindowExceeded, "too many coefficients for window " + std::to_string(R->window));
            for (const auto& c : parts)
                if (!same_ring(c.ring(), R->base))
                    fail(Err::DescriptorMismatch, "coefficient not in " + ring_str(R->base));
            while (static_cast<int>(parts.size()) < R->window) parts.push_back(zero(R->base));
            e.v_ = std::move(parts);
            break;
        }
        case RingKind::Product: {
            if (parts.size() != R->factors.size())
                fail(Err::BadArgument, "tuple arity mismatch");
            for (size_t i = 0; i < parts.size(); ++i)
                if (!same_ring(parts[i].ring(), R->factors[i]))
                    fail(Err::DescriptorMismatch, "tuple component ring mismatch");
            e.v_ = std::move(parts);
            break;
        }
        default: fail(Err::Unsupported, "composite payload in " + ring_str(R));
    }
    return e;
}

bool RingElement::is_zero() const {
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::Modular:
        case RingKind::PAdic: return i_ == 0;
        case RingKind::Rationals: return r_.num == 0;
        default:
            return std::all_of(v_.begin(), v_.end(), [](const RingElement& c) { return c.is_zero(); });
    }
}

bool RingElement::is_one() const {
    switch (ring_->kind) {
        case RingKind::Integers: return i_ == 1;
        case RingKind::Modular:
        case RingKind::PAdic: return i_ == mod_reduce(1, ring_->modulus);
        case RingKind::Rationals: return r_.num == 1 && r_.den == 1;
        case RingKind::Product:
            return std::all_of(v_.begin(), v_.end(), [](const RingElement& c) { return c.is_one(); });
        case RingKind::Series:
        case RingKind::Extension: {
            if (!v_[0].is_one()) return false;
            for (size_t i = 1; i < v_.size(); ++i)
                if (!v_[i].is_zero()) return false;
            return true;
        }
    }
    return false;
}

long long RingElement::as_int() const {
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::Modular:
        case RingKind::PAdic: return i_;
        default: fail(Err::Unsupported, "no integer payload in " + ring_str(ring_));
    }
}

const Rat& RingElement::as_rat() const {
    if (ring_->kind != RingKind::Rationals) fail(Err::Unsupported, "no rational payload");
    return r_;
}

const std::vector<RingElement>& RingElement::parts() const {
    switch (ring_->kind) {
        case RingKind::Series:
        case RingKind::Product:
        case RingKind::Extension: return v_;
        default: fail(Err::Unsupported, "no composite payload in " + ring_str(ring_));
    }
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

RingElement RingElement::operator+(const RingElement& o) const {
    require_same(*this, o);
    RingElement e;
    e.ring_ = ring_;
    switch (ring_->kind) {
        case RingKind::Integers: e.i_ = checked_add(i_, o.i_); break;
        case RingKind::Modular:
        case RingKind::PAdic: e.i_ = mod_reduce(checked_add(i_, o.i_), ring_->modulus); break;
        case RingKind::Rationals: {
            long long num = checked_add(checked_mul(r_.num, o.r_.den), checked_mul(o.r_.num, r_.den));
            e.r_ = rat_normalize(num, checked_mul(r_.den, o.r_.den));
            break;
        }
        default: {
            e.v_.reserve(v_.size());
            for (size_t i = 0; i < v_.size(); ++i) e.v_.push_back(v_[i] + o.v_[i]);
            break;
        }
    }
    return e;
}

RingElement RingElement::operator-() const {
    if (!valid()) fail(Err::BadArgument, "uninitialized ring element");
    RingElement e;
    e.ring_ = ring_;
    switch (ring_->kind) {
        case RingKind::Integers: e.i_ = checked_mul(i_, -1); break;
        case RingKind::Modular:
        case RingKind::PAdic: e.i_ = mod_reduce(-i_, ring_->modulus); break;
        case RingKind::Rationals: e.r_ = {-r_.num, r_.den}; break;
        default: {
            e.v_.reserve(v_.size());
            for (const auto& c : v_) e.v_.push_back(-c);
            break;
        }
    }
    return e;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement ring_mul_impl(const RingElement& a, const RingElement& b) {
    RingElement e;
    e.ring_ = a.ring_;
    const RingPtr& R = a.ring_;
    switch (R->kind) {
        case RingKind::Integers: e.i_ = checked_mul(a.i_, b.i_); break;
        case RingKind::Modular:
        case RingKind::PAdic: {
            __int128 prod = static_cast<__int128>(a.i_) * b.i_;
            e.i_ = static_cast<long long>(prod % R->modulus);
            break;
        }
        case RingKind::Rationals:
            e.r_ = rat_normalize(checked_mul(a.r_.num, b.r_.num), checked_mul(a.r_.den, b.r_.den));
            break;
        case RingKind::Product: {
            e.v_.reserve(a.v_.size());
            for (size_t i = 0; i < a.v_.size(); ++i) e.v_.push_back(a.v_[i] * b.v_[i]);
            break;
        }
        case RingKind::Series: {
            int N = R->window;
            e.v_.assign(N, RingElement::zero(R->base));
            for (int i = 0; i < N; ++i) {
                if (a.v_[i].is_zero()) continue;
                for (int j = 0; i + j < N; ++j) {
                    if (b.v_[j].is_zero()) continue;
                    e.v_[i + j] = e.v_[i + j] + a.v_[i] * b.v_[j];
                }
            }
            break;
        }
        case RingKind::Extension: {
            int d = R->window;
            std::vector<RingElement> prod(2 * d - 1, RingElement::zero(R->base));
            for (int i = 0; i < d; ++i) {
                if (a.v_[i].is_zero()) continue;
                for (int j = 0; j < d; ++j) {
                    if (b.v_[j].is_zero()) continue;
                    prod[i + j] = prod[i + j] + a.v_[i] * b.v_[j];
                }
            }
            // reduce by the monic modulus: var^d = -(c_0 + ... + c_{d-1} var^{d-1})
            for (int deg = 2 * d - 2; deg >= d; --deg) {
                if (prod[deg].is_zero()) continue;
                RingElement c = prod[deg];
                prod[deg] = RingElement::zero(R->base);
                for (int i = 0; i < d; ++i)
                    prod[deg - d + i] = prod[deg - d + i] - c * R->ext_mod[i];
            }
            prod.resize(d);
            e.v_ = std::move(prod);
            break;
        }
    }
    return e;
}

RingElement RingElement::operator*(const RingElement& o) const {
    require_same(*this, o);
    return ring_mul_impl(*this, o);
}

bool RingElement::operator==(const RingElement& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    if (!same_ring(ring_, o.ring_)) return false;
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::Modular:
        case RingKind::PAdic: return i_ == o.i_;
        case RingKind::Rationals: return r_.num == o.r_.num && r_.den == o.r_.den;
        default: return v_ == o.v_;
    }
}

// ---------------------------------------------------------------------------
// inverses and powers
// ---------------------------------------------------------------------------

namespace {

// extended gcd: returns g and x with a*x = g mod m
long long inv_mod(long long a, long long m) {
    long long r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    if (r0 != 1) fail(Err::NonUnit, std::to_string(a) + " mod " + std::to_string(m));
    return mod_reduce(s0, m);
}

}  // namespace

RingElement ring_inv(const RingElement& a) {
    const RingPtr& R = a.ring();
    switch (R->kind) {
        case RingKind::Integers: {
            long long v = a.as_int();
            if (v != 1 && v != -1) fail(Err::NonUnit, "integer " + std::to_string(v));
            return a;
        }
        case RingKind::Rationals: {
            const Rat& r = a.as_rat();
            if (r.num == 0) fail(Err::NonUnit, "zero rational");
            return RingElement::rational(R, r.den, r.num);
        }
        case RingKind::Modular:
        case RingKind::PAdic:
            return RingElement::from_int(R, inv_mod(a.as_int(), R->modulus));
        case RingKind::Product: {
            std::vector<RingElement> parts;
            parts.reserve(a.parts().size());
            for (const auto& c : a.parts()) parts.push_back(ring_inv(c));
            return RingElement::composite(R, std::move(parts));
        }
        case RingKind::Series: {
            // standard recurrence: b_0 = a_0^{-1}, b_n = -a_0^{-1} sum a_i b_{n-i}
            const auto& c = a.parts();
            RingElement c0inv = ring_inv(c[0]);
            std::vector<RingElement> b(R->window, RingElement::zero(R->base));
            b[0] = c0inv;
            for (int n = 1; n < R->window; ++n) {
                RingElement acc = RingElement::zero(R->base);
                for (int i = 1; i <= n; ++i) acc = acc + c[i] * b[n - i];
                b[n] = -(c0inv * acc);
            }
            return RingElement::composite(R, std::move(b));
        }
        case RingKind::Extension: {
            if (R->base->kind != RingKind::Modular && R->base->kind != RingKind::PAdic)
                fail(Err::Unsupported, "inverse in " + ring_str(R));
            // Finite ring of size q = m^d.  For a field a^(q-2) is the inverse;
            // try that first, then fall back to exhaustive search (the rings in
            // play are tiny), declaring NonUnit when nothing multiplies to 1.
            long long q = 1;
            for (int i = 0; i < R->window; ++i) q = checked_mul(q, R->base->modulus);
            if (q > 2) {
                RingElement cand = pow_int(a, q - 2);
                if ((cand * a).is_one()) return cand;
            }
            if (q <= 100000) {
                long long m = R->base->modulus;
                std::vector<long long> digits(R->window, 0);
                for (long long it = 0; it < q; ++it) {
                    std::vector<RingElement> c;
                    c.reserve(R->window);
                    for (int i = 0; i < R->window; ++i)
                        c.push_back(RingElement::from_int(R->base, digits[i]));
                    RingElement cand = RingElement::composite(R, std::move(c));
                    if ((cand * a).is_one()) return cand;
                    for (int i = 0; i < R->window; ++i) {
                        if (++digits[i] < m) break;
                        digits[i] = 0;
                    }
                }
            }
            fail(Err::NonUnit, "extension element not invertible");
        }
    }
    fail(Err::Unsupported, "inverse");
}

RingElement pow_int(const RingElement& a, long long e) {
    if (e < 0) return pow_int(ring_inv(a), -e);
    RingElement acc = RingElement::one(a.ring());
    RingElement b = a;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// series operations
// ---------------------------------------------------------------------------

namespace {

void require_series(const RingElement& f, const char* who) {
    if (!f.valid() || f.ring()->kind != RingKind::Series)
        fail(Err::BadArgument, std::string(who) + " needs a truncated series");
}

}  // namespace

RingElement series_substitute(const RingElement& f, const RingElement& g) {
    require_series(f, "series_substitute");
    require_same(f, g);
    if (!g.parts()[0].is_zero())
        fail(Err::BadArgument, "substitution series must have zero constant term");
    const RingPtr& R = f.ring();
    const auto& c = f.parts();
    // Horner from the top coefficient down.
    RingElement acc = RingElement::zero(R);
    for (int i = R->window - 1; i >= 0; --i) {
        acc = acc * g;
        std::vector<RingElement> lift(R->window, RingElement::zero(R->base));
        lift[0] = c[i];
        acc = acc + RingElement::composite(R, std::move(lift));
    }
    return acc;
}

int series_valuation(const RingElement& f) {
    require_series(f, "series_valuation");
    const auto& c = f.parts();
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (!c[i].is_zero()) return i;
    return f.ring()->window;
}

RingElement exact_divide(const RingElement& f, const RingElement& d) {
    require_series(f, "exact_divide");
    require_same(f, d);
    const RingPtr& R = f.ring();
    int N = R->window;
    if (d.is_zero()) fail(Err::ZeroDivisor, "division by zero series");
    int v = series_valuation(d);
    // cofactor e = d / var^v must have a unit constant term
    std::vector<RingElement> ec(d.parts().begin() + v, d.parts().end());
    if (N - v < 1) fail(Err::PrecisionExhausted, "no digits left after dividing by valuation " + std::to_string(v));
    RingPtr Rq = ring_series(R->base, R->var, N - v);
    RingElement cofactor = RingElement::composite(Rq, std::vector<RingElement>(ec.begin(), ec.begin() + (N - v)));
    RingElement cof_inv = [&] {
        try {
            return ring_inv(cofactor);
        } catch (const Error& e) {
            if (e.kind() == Err::NonUnit)
                fail(Err::NonUnit, "divisor is not var^v times a unit (constant term " +
                                       ec[0].str() + ")");
            throw;
        }
    }();
    for (int i = 0; i < v; ++i)
        if (!f.parts()[i].is_zero())
            fail(Err::NotDivisible, "dividend lacks the var^" + std::to_string(v) + " factor");
    RingElement shifted = RingElement::composite(
        Rq, std::vector<RingElement>(f.parts().begin() + v, f.parts().begin() + N));
    return shifted * cof_inv;
}

// ---------------------------------------------------------------------------
// binomial series
// ---------------------------------------------------------------------------

namespace {

int valuation_ll(long long x, long long p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

long long mulmod_ll(long long a, long long b, long long m) {
    __int128 prod = static_cast<__int128>(a) * b;
    long long r = static_cast<long long>(prod % m);
    return r < 0 ? r + m : r;
}

}  // namespace

RingElement binomial_power(const RingElement& a, int N, const std::string& var) {
    const RingPtr& R = a.ring();
    if (R->kind != RingKind::PAdic) fail(Err::BadArgument, "binomial_power exponent must be p-adic");
    if (N < 1) fail(Err::PrecisionExhausted, "window must be >= 1");
    long long p = R->p;
    long long lift = a.as_int();  // canonical lift in [0, p^k)
    // working modulus p^{k + v_p((N-1)!)} so every division below is exact
    int boost = 0;
    for (int n = 2; n < N; ++n) boost += valuation_ll(n, p);
    long long work_mod = R->modulus;
    for (int i = 0; i < boost; ++i) work_mod = checked_mul(work_mod, p);

    RingPtr S = ring_series(R, var, N);
    std::vector<RingElement> coeffs(N, RingElement::zero(R));
    coeffs[0] = RingElement::one(R);
    // C(lift, n) maintained as unit * p^val with unit mod work_mod
    long long unit = 1;
    int val = 0;
    for (int n = 1; n < N; ++n) {
        long long factor = lift - n + 1;
        if (factor == 0) break;  // binomial series of a non-negative integer terminates
        bool neg = factor < 0;
        if (neg) factor = -factor;
        val += valuation_ll(factor, p);
        while (factor % p == 0) factor /= p;
        unit = mulmod_ll(unit, factor, work_mod);
        if (neg) unit = mod_reduce(-unit, work_mod);
        long long den = n;
        val -= valuation_ll(den, p);
        while (den % p == 0) den /= p;
        unit = mulmod_ll(unit, inv_mod(den, work_mod), work_mod);
        if (val < 0) fail(Err::BadArgument, "internal: negative valuation in binomial");
        long long coeff = unit % R->modulus;
        for (int i = 0; i < val && coeff != 0; ++i) coeff = mulmod_ll(coeff, p, R->modulus);
        coeffs[n] = RingElement::from_int(R, val >= R->k ? 0 : coeff);
    }
    return RingElement::composite(S, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// conversion and sampling
// ---------------------------------------------------------------------------

RingElement ring_convert(const RingElement& a, const RingPtr& target) {
    const RingPtr& S = a.ring();
    if (same_ring(S, target)) return a;
    switch (target->kind) {
        case RingKind::Modular:
        case RingKind::PAdic: {
            if (S->kind == RingKind::Integers)
                return RingElement::from_int(target, a.as_int());
            if ((S->kind == RingKind::Modular || S->kind == RingKind::PAdic) &&
                S->modulus % target->modulus == 0)
                return RingElement::from_int(target, a.as_int());
            break;
        }
        case RingKind::Series: {
            if (S->kind == RingKind::Series && S->var == target->var &&
                S->window >= target->window) {
                std::vector<RingElement> c;
                c.reserve(target->window);
                for (int i = 0; i < target->window; ++i)
                    c.push_back(ring_convert(a.parts()[i], target->base));
                return RingElement::composite(target, std::move(c));
            }
            break;
        }
        case RingKind::Product: {
            if (S->kind == RingKind::Product && S->factors.size() == target->factors.size()) {
                std::vector<RingElement> c;
                for (size_t i = 0; i < S->factors.size(); ++i)
                    c.push_back(ring_convert(a.parts()[i], target->factors[i]));
                return RingElement::composite(target, std::move(c));
            }
            break;
        }
        case RingKind::Extension: {
            if (S->kind == RingKind::Extension && S->var == target->var &&
                S->window == target->window) {
                std::vector<RingElement> c;
                for (const auto& q : a.parts()) c.push_back(ring_convert(q, target->base));
                return RingElement::composite(target, std::move(c));
            }
            // base ring into its extension
            if (same_ring(S, target->base)) {
                std::vector<RingElement> c(target->window, RingElement::zero(target->base));
                c[0] = a;
                return RingElement::composite(target, std::move(c));
            }
            break;
        }
        default: break;
    }
    fail(Err::Unsupported, "cannot convert " + ring_str(S) + " -> " + ring_str(target));
}

RingElement sample_element(const RingPtr& R, std::mt19937_64& rng) {
    switch (R->kind) {
        case RingKind::Integers: {
            std::uniform_int_distribution<long long> d(-9, 9);
            return RingElement::from_int(R, d(rng));
        }
        case RingKind::Rationals: {
            std::uniform_int_distribution<long long> num(-9, 9), den(1, 9);
            return RingElement::rational(R, num(rng), den(rng));
        }
        case RingKind::Modular:
        case RingKind::PAdic: {
            std::uniform_int_distribution<long long> d(0, R->modulus - 1);
            return RingElement::from_int(R, d(rng));
        }
        case RingKind::Series:
        case RingKind::Extension: {
            std::vector<RingElement> c;
            int n = R->window;
            c.reserve(n);
            for (int i = 0; i < n; ++i) c.push_back(sample_element(R->base, rng));
            return RingElement::composite(R, std::move(c));
        }
        case RingKind::Product: {
            std::vector<RingElement> c;
            c.reserve(R->factors.size());
            for (const auto& f : R->factors) c.push_back(sample_element(f, rng));
            return RingElement::composite(R, std::move(c));
        }
    }
    fail(Err::Unsupported, "sample");
}

// ---------------------------------------------------------------------------
// printing (canonical literal syntax, matched by the parser in io.cpp)
// ---------------------------------------------------------------------------

namespace {

bool needs_parens(const RingElement& c) {
    switch (c.ring()->kind) {
        case RingKind::Integers:
        case RingKind::Modular:
        case RingKind::PAdic: return false;
        case RingKind::Rationals: return false;  // n/d binds tighter than * in our grammar
        case RingKind::Product: return false;    // tuples come pre-delimited
        default: return true;                    // series / extension sums need grouping
    }
}

std::string poly_str(const RingElement& e, const std::string& var) {
    const auto& c = e.parts();
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        std::string coeff = c[i].str();
        if (needs_parens(c[i])) coeff = "(" + coeff + ")";
        std::string term;
        if (i == 0) {
            term = coeff;
        } else {
            std::string power = (i == 1) ? var : var + "^" + std::to_string(i);
            term = c[i].is_one() ? power : coeff + "*" + power;
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string RingElement::str() const {
    if (!valid()) return "<invalid>";
    switch (ring_->kind) {
        case RingKind::Integers:
        case RingKind::Modular:
        case RingKind::PAdic: return std::to_string(i_);
        case RingKind::Rationals:
            return r_.den == 1 ? std::to_string(r_.num)
                               : std::to_string(r_.num) + "/" + std::to_string(r_.den);
        case RingKind::Product: {
            std::string s = "(";
            for (size_t i = 0; i < v_.size(); ++i) {
                if (i) s += ",";
                s += v_[i].str();
            }
            return s + ")";
        }
        case RingKind::Series:
        case RingKind::Extension: return poly_str(*this, ring_->var);
    }
    return "?";
}

}  // namespace halg
