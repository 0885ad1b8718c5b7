#include "halg/ore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace halg {

namespace {

bool odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// p-adic valuation of n!
int vp_factorial(long long p, int n) {
    int v = 0;
    for (long long q = p; q <= n; q *= p) v += n / static_cast<int>(q);
    return v;
}

long long binom_ll(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (long long i = 1; i <= r; ++i) out = checked_mul(out, n - r + i) / i;
    return out;
}

long long inv_mod(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) fail(Err::NonUnit, "no inverse mod " + std::to_string(m));
    return ((t % m) + m) % m;
}

RingPtr series_at(const RingPtr& R, int W) { return ring_series(R->base, R->var, W); }

// ring_convert to a shorter window (identity when already there)
RingElement to_window(const RingElement& f, int W) {
    if (f.ring()->window == W) return f;
    return ring_convert(f, series_at(f.ring(), W));
}

void require_series(const TwistConfig& cfg, const RingElement& f, const char* who) {
    const RingPtr& R = f.ring();
    if (!f.valid() || R->kind != cfg.base->kind || R->var != cfg.base->var ||
        !same_ring(R->base, cfg.coeff))
        fail(Err::DescriptorMismatch, std::string(who) + ": element is not a u-series over Z/p^k");
}

RingElement series_from_ints(const RingPtr& R, const std::vector<long long>& c) {
    std::vector<RingElement> parts(static_cast<size_t>(R->window), RingElement::zero(R->base));
    for (size_t n = 0; n < c.size() && n < parts.size(); ++n)
        parts[n] = RingElement::from_int(R->base, c[n]);
    return RingElement::composite(R, parts);
}

}  // namespace

// ---------------------------------------------------------------------------
// TwistConfig
// ---------------------------------------------------------------------------

RingElement TwistConfig::q(int W) const {
    return series_from_ints(series_at(base, W > 0 ? W : N), {1, 1});
}

RingElement TwistConfig::u(int W) const {
    return series_from_ints(series_at(base, W > 0 ? W : N), {0, 1});
}

RingElement TwistConfig::pq(int W) const {
    int w = W > 0 ? W : N;
    std::vector<long long> c;
    for (long long n = 0; n < std::min<long long>(p, w); ++n) c.push_back(binom_ll(p, n + 1));
    return series_from_ints(series_at(base, w), c);
}

RingElement TwistConfig::sigma(const RingElement& f) const {
    require_series(*this, f, "sigma");
    int W = f.ring()->window;
    // (1+u)^{1+p} - 1 with exact integer binomials (the exponent 1+p must
    // not be canonicalized mod p^k first)
    std::vector<long long> c(static_cast<size_t>(W), 0);
    for (long long j = 1; j <= std::min<long long>(p + 1, W - 1); ++j)
        c[static_cast<size_t>(j)] = binom_ll(p + 1, j);
    RingElement s = series_from_ints(series_at(base, W), c);
    return series_substitute(f, s);
}

RingElement TwistConfig::sigma_inv(const RingElement& f) const {
    require_series(*this, f, "sigma_inv");
    int W = f.ring()->window;
    // exponent 1/(1+p) lifted at precision k + v_p((W-1)!): binomial_power
    // evaluates C(lift, n) of the lift exactly, so after reducing back to
    // Z/p^k this inverts sigma on the nose at window W
    int K = k + vp_factorial(p, W - 1);
    long long pK = checked_pow(p, K);
    long long e = inv_mod((1 + p) % pK, pK);
    RingElement a = RingElement::from_int(ring_padic(p, K), e);
    RingElement s = binomial_power(a, W, base->var);
    s = s - RingElement::one(s.ring());
    RingElement s_down = ring_convert(s, series_at(base, W));
    return series_substitute(f, s_down);
}

RingElement TwistConfig::delta(const RingElement& f) const {
    require_series(*this, f, "delta");
    int W = f.ring()->window;
    if (W < 2) fail(Err::PrecisionExhausted, "delta needs at least two u-digits");
    RingElement uu = u(W);
    RingElement den = uu + uu * uu;  // q(q-1) = u(1+u)
    return exact_divide(sigma(f) - f, den);
}

RingElement TwistConfig::delta_phi(const RingElement& f) const {
    require_series(*this, f, "delta_phi");
    int W = f.ring()->window;
    if (W < 2) fail(Err::PrecisionExhausted, "delta_phi needs at least two u-digits");

    // Work over Z on the canonical lift.  For a polynomial lift F,
    // F(q^{1+p}) - F(q) is divisible by q^{1+p} - q = u(1+u)[p]_q in Z[u],
    // so the quotient recursion below (whose pivot is the constant term p
    // of [p]_q) stays exact over Z at every step; only the final quotient
    // is reduced mod p^k.  Changing the lift moves the quotient by p^k
    // times another exact quotient, so the result is lift-independent.
    std::vector<long long> a(static_cast<size_t>(W), 0);
    for (int n = 0; n < W; ++n) a[static_cast<size_t>(n)] = f.parts()[static_cast<size_t>(n)].as_int();

    std::vector<long long> s(static_cast<size_t>(W), 0);  // (1+u)^{1+p} - 1 mod u^W
    for (long long j = 1; j <= std::min<long long>(p + 1, W - 1); ++j)
        s[static_cast<size_t>(j)] = binom_ll(p + 1, j);

    auto conv = [&](const std::vector<long long>& x, const std::vector<long long>& z) {
        std::vector<long long> out(static_cast<size_t>(W), 0);
        for (int i = 0; i < W; ++i) {
            if (x[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j < W; ++j)
                out[static_cast<size_t>(i + j)] = checked_add(
                    out[static_cast<size_t>(i + j)],
                    checked_mul(x[static_cast<size_t>(i)], z[static_cast<size_t>(j)]));
        }
        return out;
    };

    // num = F(s) - F via Horner, exactly over Z mod u^W
    std::vector<long long> num(static_cast<size_t>(W), 0);
    for (int n = W - 1; n >= 0; --n) {
        num = conv(num, s);
        num[0] = checked_add(num[0], a[static_cast<size_t>(n)]);
    }
    for (int n = 0; n < W; ++n)
        num[static_cast<size_t>(n)] = checked_add(num[static_cast<size_t>(n)], -a[static_cast<size_t>(n)]);

    // divisor u(1+u)[p]_q: coefficient of u^{1+j} is C(p,j+1) + C(p,j)
    std::vector<long long> dd;  // dd[j] = divisor coefficient of u^{1+j}
    for (long long j = 0; j <= p; ++j) dd.push_back(checked_add(binom_ll(p, j + 1), binom_ll(p, j)));

    std::vector<long long> y(static_cast<size_t>(W - 1), 0);
    for (int n = 0; n + 1 < W; ++n) {
        long long t = num[static_cast<size_t>(n + 1)];
        for (int j = 1; j < static_cast<int>(dd.size()) && j <= n; ++j)
            t = checked_add(t, -checked_mul(dd[static_cast<size_t>(j)], y[static_cast<size_t>(n - j)]));
        if (t % p != 0)
            throw std::logic_error("delta_phi: integer-lift division by [p]_q lost exactness");
        y[static_cast<size_t>(n)] = t / p;
    }

    return series_from_ints(series_at(base, W - 1), y);
}

TwistPtr twist_config(long long p, int k, int N) {
    if (p == 2) fail(Err::BadArgument, "p = 2 is not supported: q(q-1) and [2]_q interact at the same digit");
    if (!odd_prime(p)) fail(Err::BadArgument, "p must be an odd prime, got " + std::to_string(p));
    if (k < 1) fail(Err::BadArgument, "coefficient precision k must be >= 1");
    if (N < 2) fail(Err::BadArgument, "u-window must be >= 2");
    auto cfg = std::make_shared<TwistConfig>();
    cfg->p = p;
    cfg->k = k;
    cfg->N = N;
    cfg->coeff = ring_padic(p, k);
    cfg->base = ring_series(cfg->coeff, "u", N);
    return cfg;
}

// ---------------------------------------------------------------------------
// OrePolynomial
// ---------------------------------------------------------------------------

namespace {

void require_compatible(const OrePolynomial& P, const OrePolynomial& Q) {
    if (!P.cfg || !Q.cfg) fail(Err::BadArgument, "uninitialized operator polynomial");
    if (P.cfg->p != Q.cfg->p || P.cfg->k != Q.cfg->k)
        fail(Err::DescriptorMismatch, "operator polynomials over different coefficient rings");
    if (P.twist != Q.twist)
        fail(Err::DescriptorMismatch, "mixing the standard and Frobenius-twisted symbols");
}

OrePolynomial normalized(TwistPtr cfg, OreTwist twist, int W, std::vector<RingElement> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    OrePolynomial out;
    out.cfg = std::move(cfg);
    out.twist = twist;
    out.ring = series_at(out.cfg->base, W);
    out.coeffs = std::move(coeffs);
    return out;
}

RingElement twist_delta(const TwistConfig& cfg, OreTwist twist, const RingElement& f) {
    return twist == OreTwist::Standard ? cfg.delta(f) : cfg.delta_phi(f);
}

// one application of  D * (sum h_t D^t): sigma parts shift up, delta parts
// stay; costs one u-digit
std::vector<RingElement> nabla_step(const TwistConfig& cfg, OreTwist twist,
                                    const std::vector<RingElement>& cur, int W) {
    std::vector<RingElement> out(cur.size() + 1, RingElement::zero(series_at(cfg.base, W - 1)));
    for (size_t t = 0; t < cur.size(); ++t) {
        if (cur[t].is_zero()) continue;
        out[t + 1] = out[t + 1] + to_window(cfg.sigma(cur[t]), W - 1);
        out[t] = out[t] + twist_delta(cfg, twist, cur[t]);
    }
    return out;
}

}  // namespace

std::string OrePolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[i].str() << ")";
        if (i == 1) os << " nabla";
        if (i > 1) os << " nabla^" << i;
    }
    return os.str();
}

OrePolynomial ore_zero(const TwistPtr& cfg, OreTwist twist) {
    return normalized(cfg, twist, cfg->N, {});
}

OrePolynomial ore_base(const TwistPtr& cfg, const RingElement& f, OreTwist twist) {
    return ore_poly(cfg, {f}, twist);
}

OrePolynomial ore_nabla(const TwistPtr& cfg, OreTwist twist) {
    return ore_poly(cfg, {RingElement::zero(cfg->base), RingElement::one(cfg->base)}, twist);
}

OrePolynomial ore_poly(const TwistPtr& cfg, std::vector<RingElement> coeffs, OreTwist twist) {
    if (!cfg) fail(Err::BadArgument, "null twist configuration");
    int W = cfg->N;
    for (const auto& c : coeffs) {
        require_series(*cfg, c, "ore_poly");
        W = std::min(W, c.ring()->window);
    }
    for (auto& c : coeffs) c = to_window(c, W);
    return normalized(cfg, twist, W, std::move(coeffs));
}

OrePolynomial ore_add(const OrePolynomial& P, const OrePolynomial& Q) {
    require_compatible(P, Q);
    int W = std::min(P.window(), Q.window());
    std::vector<RingElement> out(std::max(P.coeffs.size(), Q.coeffs.size()),
                                 RingElement::zero(series_at(P.cfg->base, W)));
    for (size_t i = 0; i < P.coeffs.size(); ++i) out[i] = out[i] + to_window(P.coeffs[i], W);
    for (size_t i = 0; i < Q.coeffs.size(); ++i) out[i] = out[i] + to_window(Q.coeffs[i], W);
    return normalized(P.cfg, P.twist, W, std::move(out));
}

OrePolynomial ore_neg(const OrePolynomial& P) {
    std::vector<RingElement> out = P.coeffs;
    for (auto& c : out) c = -c;
    return normalized(P.cfg, P.twist, P.window(), std::move(out));
}

OrePolynomial ore_sub(const OrePolynomial& P, const OrePolynomial& Q) {
    return ore_add(P, ore_neg(Q));
}

OrePolynomial ore_mul(const OrePolynomial& P, const OrePolynomial& Q) {
    require_compatible(P, Q);
    if (P.is_zero() || Q.is_zero())
        return normalized(P.cfg, P.twist, std::min(P.window(), Q.window()), {});
    int Wr = std::min(P.window(), Q.window() - P.degree());
    if (Wr < 1)
        fail(Err::PrecisionExhausted,
             "product spends " + std::to_string(P.degree()) + " u-digits, only " +
                 std::to_string(std::min(P.window(), Q.window())) + " remain");
    std::vector<RingElement> acc(P.coeffs.size() + Q.coeffs.size() - 1,
                                 RingElement::zero(series_at(P.cfg->base, Wr)));
    std::vector<RingElement> cur = Q.coeffs;  // D^i * Q as i advances
    int Wc = Q.window();
    for (int i = 0; i <= P.degree(); ++i) {
        if (i > 0) {
            cur = nabla_step(*P.cfg, P.twist, cur, Wc);
            --Wc;
        }
        const RingElement& fi = P.coeffs[static_cast<size_t>(i)];
        if (fi.is_zero()) continue;
        RingElement fw = to_window(fi, Wr);
        for (size_t t = 0; t < cur.size(); ++t) {
            if (cur[t].is_zero()) continue;
            acc[t] = acc[t] + fw * to_window(cur[t], Wr);
        }
    }
    return normalized(P.cfg, P.twist, Wr, std::move(acc));
}

bool ore_equal(const OrePolynomial& P, const OrePolynomial& Q) {
    if (!P.cfg || !Q.cfg || P.cfg->p != Q.cfg->p || P.cfg->k != Q.cfg->k || P.twist != Q.twist)
        return false;
    int W = std::min(P.window(), Q.window());
    auto align = [&](const OrePolynomial& X) {
        std::vector<RingElement> out;
        for (const auto& c : X.coeffs) out.push_back(to_window(c, W));
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    };
    return align(P) == align(Q);
}

RingElement nabla_act(const TwistPtr& cfg, const RingElement& f) { return cfg->delta(f); }

OrePolynomial frobenius_transport(const OrePolynomial& P) {
    if (!P.cfg) fail(Err::BadArgument, "uninitialized operator polynomial");
    if (P.twist != OreTwist::Standard)
        fail(Err::BadArgument, "transport starts from the standard symbol");
    int W = P.window();
    OrePolynomial out = normalized(P.cfg, OreTwist::Frobenius, W, {});
    // ([p]_q D^phi)^i, built by left multiplication so each step costs one digit
    OrePolynomial factor = ore_poly(
        P.cfg, {RingElement::zero(series_at(P.cfg->base, W)), P.cfg->pq(W)}, OreTwist::Frobenius);
    OrePolynomial acc =
        ore_poly(P.cfg, {RingElement::one(series_at(P.cfg->base, W))}, OreTwist::Frobenius);
    for (int i = 0; i <= P.degree(); ++i) {
        // the first power is the factor itself; higher powers pay one
        // u-digit each for the twisted-derivation terms
        if (i == 1) acc = factor;
        if (i > 1) acc = ore_mul(factor, acc);
        const RingElement& fi = P.coeffs[static_cast<size_t>(i)];
        if (fi.is_zero()) continue;
        out = ore_add(out, ore_mul(ore_poly(P.cfg, {fi}, OreTwist::Frobenius), acc));
    }
    return out;
}

RingElement reduce_right_module(const OrePolynomial& P) {
    if (!P.cfg) fail(Err::BadArgument, "uninitialized operator polynomial");
    if (P.twist != OreTwist::Standard)
        fail(Err::BadArgument, "right-module reduction is defined for the standard symbol");
    int W = P.window();
    std::vector<RingElement> cur = P.coeffs;
    for (size_t d = cur.size(); d > 1; --d) {
        RingElement g = cur[d - 1];
        cur.pop_back();
        if (g.is_zero()) continue;
        RingElement t = -P.cfg->delta(P.cfg->sigma_inv(g));  // f D == -delta(sigma_inv f)
        --W;
        for (auto& c : cur) c = to_window(c, W);
        cur[d - 2] = cur[d - 2] + t;
    }
    if (cur.empty()) return RingElement::zero(series_at(P.cfg->base, W));
    return cur[0];
}

// ---------------------------------------------------------------------------
// Cohomology of the two-term complex  base --delta--> base
// ---------------------------------------------------------------------------

CohomologyResult two_term_cohomology(long long p, int k, int N) {
    // delta(u^j) is a genuine polynomial of degree <= (p+1)j - 2, so a
    // window this wide computes every column exactly; the N x N matrix
    // keeps the rows < N and we record which columns lost support to the
    // cut.  Below the first cut column the matrix IS the untruncated
    // operator, whose kernel on polynomials is exactly the constants.
    int big = (static_cast<int>(p) + 1) * N + 2;
    TwistPtr cfg = twist_config(p, k, big);
    long long mod = checked_pow(p, k);
    IntMatrix M = IntMatrix::zero(N, N, mod);
    int cut = N;
    for (int j = 1; j < N; ++j) {
        RingElement d = cfg->delta(pow_int(cfg->u(), j));
        const auto& parts = d.parts();
        for (int n = 0; n < N; ++n) M.at(n, j) = parts[static_cast<size_t>(n)].as_int();
        for (size_t n = static_cast<size_t>(N); n < parts.size(); ++n)
            if (!parts[n].is_zero()) {
                cut = std::min(cut, j);
                break;
            }
    }
    M.reduce();
    CohomologyResult out;
    out.h0 = complex_homology(IntMatrix::zero(N, 1, mod), M);
    out.h1 = cokernel(M);
    // always flag at least the top two degrees; extend downward when a
    // lower column demonstrably lost terms to the truncation
    out.artifact_lo = std::min(N - 2, cut);
    out.artifact_hi = N;
    out.matrix = M;
    return out;
}

// ---------------------------------------------------------------------------
// The classical Weyl analogue over Q[x]
// ---------------------------------------------------------------------------

namespace {

int x_degree(const RingElement& f) {
    const auto& parts = f.parts();
    for (int n = static_cast<int>(parts.size()) - 1; n >= 0; --n)
        if (!parts[static_cast<size_t>(n)].is_zero()) return n;
    return -1;
}

RingElement mul_checked(const WeylConfig& cfg, const RingElement& f, const RingElement& g) {
    int df = x_degree(f), dg = x_degree(g);
    if (df >= 0 && dg >= 0 && df + dg >= cfg.bound)
        fail(Err::DegreeOverflow, "x-degree " + std::to_string(df + dg) + " exceeds the bound " +
                                      std::to_string(cfg.bound - 1));
    return f * g;
}

}  // namespace

WeylConfig weyl_config(int degree_bound) {
    if (degree_bound < 2) fail(Err::BadArgument, "degree bound must be >= 2");
    WeylConfig cfg;
    cfg.base = ring_series(ring_Q(), "x", degree_bound);
    cfg.bound = degree_bound;
    return cfg;
}

RingElement formal_derivative(const RingElement& f) {
    const RingPtr& R = f.ring();
    std::vector<RingElement> out(static_cast<size_t>(R->window), RingElement::zero(R->base));
    for (size_t n = 0; n + 1 < out.size(); ++n)
        out[n] = f.parts()[n + 1] * RingElement::from_int(R->base, static_cast<long long>(n) + 1);
    return RingElement::composite(R, out);
}

WeylPolynomial weyl_base(const WeylConfig& cfg, const RingElement& f) {
    return weyl_poly(cfg, {f});
}

WeylPolynomial weyl_d(const WeylConfig& cfg) {
    return weyl_poly(cfg, {RingElement::zero(cfg.base), RingElement::one(cfg.base)});
}

WeylPolynomial weyl_poly(const WeylConfig& cfg, std::vector<RingElement> coeffs) {
    for (const auto& c : coeffs)
        if (!c.valid() || !same_ring(c.ring(), cfg.base))
            fail(Err::DescriptorMismatch, "coefficient is not a bounded-degree polynomial");
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    WeylPolynomial out;
    out.ring = cfg.base;
    out.coeffs = std::move(coeffs);
    return out;
}

WeylPolynomial weyl_add(const WeylPolynomial& P, const WeylPolynomial& Q) {
    std::vector<RingElement> out(std::max(P.coeffs.size(), Q.coeffs.size()),
                                 RingElement::zero(P.ring ? P.ring : Q.ring));
    for (size_t i = 0; i < P.coeffs.size(); ++i) out[i] = out[i] + P.coeffs[i];
    for (size_t i = 0; i < Q.coeffs.size(); ++i) out[i] = out[i] + Q.coeffs[i];
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    WeylPolynomial r;
    r.ring = P.ring ? P.ring : Q.ring;
    r.coeffs = std::move(out);
    return r;
}

WeylPolynomial weyl_mul(const WeylConfig& cfg, const WeylPolynomial& P, const WeylPolynomial& Q) {
    std::vector<RingElement> acc(
        P.coeffs.empty() || Q.coeffs.empty() ? 0 : P.coeffs.size() + Q.coeffs.size() - 1,
        RingElement::zero(cfg.base));
    std::vector<RingElement> cur = Q.coeffs;  // (d/dx)^i * Q: sigma = id, delta = d/dx
    for (size_t i = 0; i < P.coeffs.size(); ++i) {
        if (i > 0) {
            std::vector<RingElement> next(cur.size() + 1, RingElement::zero(cfg.base));
            for (size_t t = 0; t < cur.size(); ++t) {
                next[t + 1] = next[t + 1] + cur[t];
                next[t] = next[t] + formal_derivative(cur[t]);
            }
            cur = std::move(next);
        }
        if (P.coeffs[i].is_zero()) continue;
        for (size_t t = 0; t < cur.size(); ++t) {
            if (cur[t].is_zero()) continue;
            acc[t] = acc[t] + mul_checked(cfg, P.coeffs[i], cur[t]);
        }
    }
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    WeylPolynomial r;
    r.ring = cfg.base;
    r.coeffs = std::move(acc);
    return r;
}

bool weyl_equal(const WeylPolynomial& P, const WeylPolynomial& Q) { return P.coeffs == Q.coeffs; }

RingElement weyl_reduce_right(const WeylConfig& cfg, const WeylPolynomial& P) {
    std::vector<RingElement> cur = P.coeffs;
    for (size_t d = cur.size(); d > 1; --d) {
        RingElement g = cur[d - 1];
        cur.pop_back();
        if (g.is_zero()) continue;
        cur[d - 2] = cur[d - 2] - formal_derivative(g);
    }
    if (cur.empty()) return RingElement::zero(cfg.base);
    return cur[0];
}

Report weyl_relation_check(const WeylConfig& cfg, const RingElement& f) {
    Report rep;
    WeylPolynomial D = weyl_d(cfg);
    WeylPolynomial F = weyl_base(cfg, f);
    RingElement fp = formal_derivative(f);
    WeylPolynomial lhs = weyl_mul(cfg, D, F);
    WeylPolynomial rhs = weyl_add(weyl_mul(cfg, F, D), weyl_base(cfg, fp));
    if (weyl_equal(lhs, rhs))
        rep.pass("weyl-commutation");
    else
        rep.fail("weyl-commutation", f.str());
    RingElement red = weyl_reduce_right(cfg, weyl_mul(cfg, F, D));
    if (red == -fp)
        rep.pass("weyl-right-module");
    else
        rep.fail("weyl-right-module", f.str());
    return rep;
}

}  // namespace halg
