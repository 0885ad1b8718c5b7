#include "halg/dual.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "halg/homalg.hpp"

namespace halg {

namespace {

void require_same(const DualElement& a, const DualElement& b) {
    if (a.pres != b.pres)
        fail(Err::DescriptorMismatch, "dual elements over different presentations");
}

}  // namespace

RingElement dual_value(const DualElement& D, int i) {
    if (i < 0) fail(Err::BadArgument, "negative basis index");
    if (i < D.vec.window()) return D.vec.table[i];
    if (D.vec.finite_support) return RingElement::zero(D.vec.ring);
    fail(Err::WindowExceeded,
         "dual value at index " + std::to_string(i) + " beyond window " +
             std::to_string(D.vec.window()));
}

RingElement dual_eval(const DualElement& D, const Vec& v) { return dual_pair(D.vec, v); }

bool dual_equal(const DualElement& D, const DualElement& E) {
    if (D.pres != E.pres) return false;
    // compare on the common window; any excess table entries must vanish
    int cw = std::min(D.vec.window(), E.vec.window());
    for (int i = 0; i < cw; ++i)
        if (D.vec.table[i] != E.vec.table[i]) return false;
    const DualVec& longer = D.vec.window() >= E.vec.window() ? D.vec : E.vec;
    for (int i = cw; i < longer.window(); ++i)
        if (!longer.table[i].is_zero()) return false;
    return true;
}

DualElement dual_unit(const PresPtr& P) {
    DualVec v = DualVec::zero(P->base, P->window);
    for (int i = 0; i < P->window; ++i) v.table[i] = P->epsilon[i];
    v.finite_support = false;  // counit values past the window are not stored
    return {P, v};
}

DualElement dual_basis(const PresPtr& P, int i) {
    return {P, DualVec::basis_dual(P->base, i, P->window)};
}

DualElement dual_mul(const DualElement& D2, const DualElement& D1, int W) {
    require_same(D2, D1);
    const Presentation& P = *D1.pres;
    if (W < 0 || W > P.window)
        fail(Err::WindowExceeded, "product window " + std::to_string(W) +
                                      " outside presentation window");
    DualVec out = DualVec::zero(P.base, W);
    out.finite_support = false;  // the composite's tail is not computable here
    for (int k = 0; k < W; ++k) {
        const TensorVec& dk = P.delta[k];
        Vec acc(P.base);
        for (const auto& [j, gj] : dk.parts()) {
            // adaptedness keeps every index Delta reaches inside the closure
            // of the requested window; a presentation that breaks it cannot
            // be multiplied reliably, so refuse loudly
            if (P.level(j) > P.level(k))
                fail(Err::FilterViolation, "coproduct of index " + std::to_string(k) +
                                               " reaches level " + std::to_string(P.level(j)));
            for (const auto& [li, lc] : gj.entries())
                if (P.level(li) > P.level(k))
                    fail(Err::FilterViolation, "coproduct of index " + std::to_string(k) +
                                                   " reaches level " +
                                                   std::to_string(P.level(li)));
            RingElement a = dual_value(D1, j);
            if (a.is_zero()) continue;
            acc += P.gamma_mul(gj, P.eval_etaR(a));
        }
        out.table[k] = dual_pair(D2.vec, acc);
    }
    return {D1.pres, out};
}

DualElement dual_mul(const DualElement& D2, const DualElement& D1) {
    require_same(D2, D1);
    return dual_mul(D2, D1, std::min(D2.vec.window(), D1.vec.window()));
}

DualElement eps_dual(const PresPtr& P, const RingElement& a) {
    DualVec v = DualVec::zero(P->base, P->window);
    for (int i = 0; i < P->window; ++i) v.table[i] = a * P->epsilon[i];
    v.finite_support = false;
    return {P, v};
}

RingElement etaL_dual(const DualElement& D) { return dual_pair(D.vec, D.pres->unit); }

DualElement left_A_action(const DualElement& D, const RingElement& a) {
    DualVec v = D.vec;
    for (auto& x : v.table) x = a * x;
    return {D.pres, v};
}

DualElement right_A_action(const DualElement& D, const RingElement& a) {
    const Presentation& P = *D.pres;
    const int W = D.vec.window();
    DualVec out = DualVec::zero(P.base, W);
    out.finite_support = false;
    Vec ra = P.eval_etaR(a);
    for (int i = 0; i < W; ++i)
        out.table[i] = dual_pair(D.vec, P.gamma_mul(ra, Vec::basis(P.base, i)));
    // the same structure must fall out of multiplication by eps∨(a)
    DualElement via_mul = dual_mul(D, eps_dual(D.pres, a), W);
    for (int i = 0; i < W; ++i)
        if (out.table[i] != via_mul.vec.table[i])
            throw std::logic_error("right action formulas disagree at index " +
                                   std::to_string(i));
    return {D.pres, out};
}

RingElement act_on_A(const DualElement& D, const RingElement& a) {
    return dual_pair(D.vec, D.pres->eval_etaR(a));
}

// ---------------------------------------------------------------------------
// Restrictiveness heuristic
// ---------------------------------------------------------------------------

namespace {

// Split the base into integer components: Z-like rings give one component,
// products of Z-like rings one per factor.  Returns false if the base has
// some other shape (the search then reports no witness).
bool component_moduli(const RingPtr& A, std::vector<long long>& moduli) {
    switch (A->kind) {
        case RingKind::Integers: moduli.push_back(0); return true;
        case RingKind::Modular:
        case RingKind::PAdic: moduli.push_back(A->modulus); return true;
        case RingKind::Product:
            for (const auto& f : A->factors) {
                if (f->kind == RingKind::Integers) moduli.push_back(0);
                else if (f->kind == RingKind::Modular || f->kind == RingKind::PAdic)
                    moduli.push_back(f->modulus);
                else return false;
            }
            return true;
        default: return false;
    }
}

long long component_of(const RingElement& x, int comp, bool product) {
    return product ? x.parts()[static_cast<size_t>(comp)].as_int() : x.as_int();
}

RingElement embed_component(const RingPtr& A, int comp, long long value) {
    if (A->kind != RingKind::Product) return RingElement::from_int(A, value);
    std::vector<RingElement> parts;
    for (size_t f = 0; f < A->factors.size(); ++f)
        parts.push_back(RingElement::from_int(A->factors[f],
                                              static_cast<int>(f) == comp ? value : 0));
    return RingElement::composite(A, parts);
}

}  // namespace

std::optional<DualElement> restrictive_witness(const PresPtr& P, int W,
                                               const std::vector<RingElement>& samples) {
    if (W <= 0) return std::nullopt;  // vacuous
    W = std::min(W, P->window);
    std::vector<long long> moduli;
    if (!component_moduli(P->base, moduli)) return std::nullopt;
    const bool product = P->base->kind == RingKind::Product;

    // usable constraint rows: coefficients of etaR(a) on the window
    std::vector<Vec> images;
    for (const auto& a : samples) {
        try {
            images.push_back(P->eval_etaR(a));
        } catch (const Error&) {
            // sample not evaluable at this window; heuristic skips it
        }
    }

    for (int comp = 0; comp < static_cast<int>(moduli.size()); ++comp) {
        IntMatrix M = IntMatrix::zero(static_cast<int>(images.size()), W, moduli[comp]);
        for (int s = 0; s < M.rows; ++s)
            for (int i = 0; i < W; ++i)
                M.at(s, i) = component_of(images[static_cast<size_t>(s)].coeff(i), comp, product);
        M.reduce();
        IntMatrix K = kernel_basis(M);
        for (int col = 0; col < K.cols; ++col) {
            DualVec v = DualVec::zero(P->base, P->window);
            bool nonzero = false;
            for (int i = 0; i < W; ++i) {
                long long x = K.at(i, col);
                if (moduli[comp] != 0) x = ((x % moduli[comp]) + moduli[comp]) % moduli[comp];
                v.table[i] = embed_component(P->base, comp, x);
                if (!v.table[i].is_zero()) nonzero = true;
            }
            if (!nonzero) continue;
            DualElement D{P, v};
            bool annihilates = std::all_of(images.begin(), images.end(), [&](const Vec& im) {
                return dual_pair(D.vec, im).is_zero();
            });
            if (annihilates) return D;
        }
    }
    return std::nullopt;
}

}  // namespace halg
