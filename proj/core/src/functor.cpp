#include "halg/functor.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace halg {

namespace {

std::vector<RingElement> pad_coords(const std::vector<RingElement>& parts, const RingPtr& A,
                                    int rank) {
    std::vector<RingElement> out(static_cast<size_t>(rank), RingElement::zero(A));
    for (size_t i = 0; i < parts.size() && i < out.size(); ++i) out[i] = parts[i];
    return out;
}

}  // namespace

RingElement FreeRingExtension::up(const RingElement& a) const {
    if (!same_ring(a.ring(), source))
        fail(Err::DescriptorMismatch, "extension argument not over the source ring");
    return ring_convert(a, target);
}

std::vector<RingElement> FreeRingExtension::down(const RingElement& b) const {
    if (!same_ring(b.ring(), target))
        fail(Err::DescriptorMismatch, "coordinatization argument not over the target ring");
    if (rank() == 1 && same_ring(source, target)) return {b};
    if (target->kind == RingKind::Extension && same_ring(target->base, source))
        return pad_coords(b.parts(), source, rank());
    fail(Err::Unsupported, "no coordinatization strategy for this extension");
}

FreeRingExtension identity_extension(const RingPtr& A) {
    FreeRingExtension E;
    E.source = A;
    E.target = A;
    E.basis = {RingElement::one(A)};
    E.mult = {{RingElement::one(A)}};
    return E;
}

FreeRingExtension power_basis_extension(const RingPtr& ext) {
    if (!ext || ext->kind != RingKind::Extension)
        fail(Err::BadArgument, "power basis needs a quotient-ring descriptor");
    FreeRingExtension E;
    E.source = ext->base;
    E.target = ext;
    const int d = ext->window;
    RingElement b = RingElement::one(ext);
    for (int j = 0; j < d; ++j) {
        E.basis.push_back(b);
        if (j + 1 < d) b = b * canonical_generator(ext, 0);
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            E.mult.push_back(pad_coords((E.basis[static_cast<size_t>(i)] *
                                         E.basis[static_cast<size_t>(j)])
                                            .parts(),
                                        E.source, d));
    return E;
}

Vec apply_morphism(const HopfMorphism& f, const Vec& v) {
    if (!same_ring(v.ring(), f.source->base))
        fail(Err::DescriptorMismatch, "vector not over the morphism source");
    Vec out(f.target->base);
    for (const auto& [i, a] : v.entries()) {
        if (i >= static_cast<int>(f.images.size()))
            fail(Err::WindowExceeded, "no morphism image for index " + std::to_string(i));
        out += f.images[static_cast<size_t>(i)].scaled(f.ring_map(a));
    }
    return out;
}

HopfMorphism identity_morphism(const PresPtr& P) {
    HopfMorphism f;
    f.source = P;
    f.target = P;
    f.ring_map = [](const RingElement& a) { return a; };
    for (int i = 0; i < P->window; ++i) f.images.push_back(Vec::basis(P->base, i));
    return f;
}

PresPtr base_change_algebroid(const PresPtr& P, const FreeRingExtension& ext) {
    if (!P) fail(Err::BadArgument, "no algebroid to change base of");
    if (!same_ring(P->base, ext.source))
        fail(Err::DescriptorMismatch, "extension does not start at the algebroid base");
    const int r = ext.rank();
    if (r < 1 || !ext.basis[0].is_one())
        fail(Err::BadArgument, "extension basis must start with 1");
    const RingPtr& B = ext.target;
    const int W = P->window * r;
    auto flat = [r](int i, int j) { return i * r + j; };
    // normal form of gamma (x) b_j: left coefficients cross through up()
    auto push = [&](const Vec& g, int j) {
        Vec out(B);
        for (const auto& [t, a] : g.entries()) out.add(flat(t, j), ext.up(a));
        return out;
    };

    auto Q = std::make_shared<Presentation>();
    Q->base = B;
    Q->window = W;
    Q->levels.resize(static_cast<size_t>(W));
    for (int i = 0; i < P->window; ++i)
        for (int j = 0; j < r; ++j) Q->levels[static_cast<size_t>(flat(i, j))] = P->level(i) + j;
    Q->unit = push(P->unit, 0);
    Q->etaR_is_etaL = false;

    // (e_i b_j)(e_k b_l): multiply the middle factors, then land each
    // A-coordinate of b_j b_l back through etaR; absent when the source
    // window cannot hold the middle product
    for (int f1 = 0; f1 < W; ++f1)
        for (int f2 = f1; f2 < W; ++f2) {
            const int i = f1 / r, j = f1 % r, k = f2 / r, l = f2 % r;
            try {
                const Vec& g = P->mult_entry(i, k);
                const auto& m = ext.mult[static_cast<size_t>(j * r + l)];
                Vec out(B);
                for (int l2 = 0; l2 < r; ++l2) {
                    if (m[static_cast<size_t>(l2)].is_zero()) continue;
                    out += push(P->gamma_mul(g, P->eval_etaR(m[static_cast<size_t>(l2)])), l2);
                }
                Q->mult[{f1, f2}] = std::move(out);
            } catch (const Error& e) {
                if (e.kind() != Err::WindowExceeded) throw;
            }
        }

    for (int g = 0; g < canonical_generator_count(B); ++g) {
        auto c = ext.down(canonical_generator(B, g));
        Vec out(B);
        for (int j = 0; j < r; ++j) {
            if (c[static_cast<size_t>(j)].is_zero()) continue;
            out += push(P->eval_etaR(c[static_cast<size_t>(j)]), j);
        }
        Q->etaR_gens.push_back(std::move(out));
    }

    for (int i = 0; i < P->window; ++i)
        for (int j = 0; j < r; ++j) {
            TensorVec t(B);
            for (const auto& [u, gu] : P->delta[static_cast<size_t>(i)].parts())
                t.add(push(gu, 0), flat(u, j));
            Q->delta.push_back(std::move(t));
            Q->epsilon.push_back(ext.up(P->epsilon[static_cast<size_t>(i)]) *
                                 ext.basis[static_cast<size_t>(j)]);
            Vec cj(B);
            for (const auto& [t2, a] : P->conj[static_cast<size_t>(i)].entries())
                cj.add(flat(t2, 0), ext.basis[static_cast<size_t>(j)] * ext.up(a));
            Q->conj.push_back(std::move(cj));
        }

    Q->validate_shape();
    return Q;
}

HopfMorphism inclusion_morphism(const PresPtr& P, const FreeRingExtension& ext,
                                const PresPtr& changed) {
    if (!same_ring(P->base, ext.source) || !same_ring(changed->base, ext.target))
        fail(Err::DescriptorMismatch, "inclusion endpoints do not match the extension");
    if (changed->window != P->window * ext.rank())
        fail(Err::BadArgument, "window does not look base-changed from this source");
    HopfMorphism f;
    f.source = P;
    f.target = changed;
    FreeRingExtension e = ext;
    f.ring_map = [e](const RingElement& a) { return e.up(a); };
    for (int i = 0; i < P->window; ++i)
        f.images.push_back(Vec::basis(changed->base, i * ext.rank()));
    return f;
}

BetaMap beta_map(const HopfMorphism& f, const FreeRingExtension& ext, const PresPtr& changed) {
    const PresPtr& S = f.target;
    if (!same_ring(S->base, ext.target) || !same_ring(f.source->base, ext.source))
        fail(Err::DescriptorMismatch, "morphism endpoints do not match the extension");
    if (static_cast<int>(f.images.size()) < f.source->window)
        fail(Err::BadArgument, "morphism images missing on the source window");
    const int r = ext.rank();
    if (!changed || changed->window != f.source->window * r)
        fail(Err::BadArgument, "base-changed presentation has the wrong window");

    BetaMap beta{changed, S, {}};
    for (int i = 0; i < f.source->window; ++i)
        for (int j = 0; j < r; ++j)
            beta.images.push_back(S->gamma_mul(f.images[static_cast<size_t>(i)],
                                               S->eval_etaR(ext.basis[static_cast<size_t>(j)])));
    // the comparison map must intertwine the counits
    for (int idx = 0; idx < changed->window; ++idx)
        if (S->apply_epsilon(beta.images[static_cast<size_t>(idx)]) !=
            changed->epsilon[static_cast<size_t>(idx)])
            fail(Err::BadArgument,
                 "morphism does not intertwine the counits at index " + std::to_string(idx));
    return beta;
}

Vec apply_beta(const BetaMap& beta, const Vec& x) {
    if (!same_ring(x.ring(), beta.domain->base))
        fail(Err::DescriptorMismatch, "vector not over the base-changed presentation");
    Vec out(beta.codomain->base);
    for (const auto& [i, b] : x.entries()) {
        if (i >= static_cast<int>(beta.images.size()))
            fail(Err::WindowExceeded, "no comparison image for index " + std::to_string(i));
        out += beta.images[static_cast<size_t>(i)].scaled(b);
    }
    return out;
}

DualElement beta_dual(const DualElement& D, const BetaMap& beta, int W) {
    if (D.pres != beta.codomain)
        fail(Err::DescriptorMismatch, "functional does not live on the comparison target");
    if (W < 0 || W > beta.domain->window) fail(Err::BadArgument, "window out of range");
    DualVec v = DualVec::zero(beta.domain->base, W);
    v.finite_support = false;  // the restricted tail is not stored
    for (int i = 0; i < W; ++i)
        v.table[static_cast<size_t>(i)] = dual_pair(D.vec, beta.images[static_cast<size_t>(i)]);
    return {beta.domain, v};
}

DualElement beta_dual(const DualElement& D, const BetaMap& beta) {
    return beta_dual(D, beta, beta.domain->window);
}

Comodule pullback_comodule(const HopfMorphism& f, const Comodule& M) {
    if (M.pres != f.source)
        fail(Err::DescriptorMismatch, "comodule does not live on the morphism source");
    Comodule out;
    out.pres = f.target;
    out.rank = M.rank;
    out.psi.resize(static_cast<size_t>(M.rank));
    for (int s = 0; s < M.rank; ++s)
        for (const auto& [t, g] : M.psi[static_cast<size_t>(s)]) {
            Vec im = apply_morphism(f, g);
            if (!im.is_zero()) out.psi[static_cast<size_t>(s)][t] = std::move(im);
        }
    return out;
}

Report identification_check(const HopfMorphism& f, const FreeRingExtension& ext,
                            const Comodule& M) {
    PresPtr changed = base_change_algebroid(f.source, ext);
    HopfMorphism iota = inclusion_morphism(f.source, ext, changed);
    BetaMap beta = beta_map(f, ext, changed);
    const PresPtr& S = f.target;
    const RingPtr& B = S->base;
    Report rep;

    auto guarded = [&](const std::string& name, auto&& law) {
        try {
            law();
        } catch (const Error& e) {
            if (e.kind() != Err::WindowExceeded) throw;
            rep.indeterminate(name, "window");
        }
    };

    guarded("beta-dual-unital", [&] {
        if (dual_equal(beta_dual(dual_unit(S), beta), dual_unit(changed)))
            rep.pass("beta-dual-unital");
        else
            rep.fail("beta-dual-unital", "unit");
    });

    guarded("beta-dual-multiplicative", [&] {
        std::vector<DualElement> ds;
        for (int i = 0; i < std::min(S->window, 4); ++i) ds.push_back(dual_basis(S, i));
        ds.push_back(dual_unit(S));
        for (size_t a = 0; a < ds.size(); ++a)
            for (size_t b = 0; b < ds.size(); ++b) {
                DualElement lhs = beta_dual(dual_mul(ds[a], ds[b]), beta);
                DualElement rhs = dual_mul(beta_dual(ds[a], beta), beta_dual(ds[b], beta));
                if (!dual_equal(lhs, rhs)) {
                    rep.fail("beta-dual-multiplicative",
                             std::to_string(a) + "," + std::to_string(b));
                    return;
                }
            }
        rep.pass("beta-dual-multiplicative");
    });

    guarded("identification", [&] {
        Comodule fM = pullback_comodule(f, M);
        Comodule iM = pullback_comodule(iota, M);

        std::vector<Coords> xs;
        for (int s = 0; s < M.rank; ++s) xs.push_back(coords_basis(B, M.rank, s));
        xs.push_back(Coords(static_cast<size_t>(M.rank), RingElement::one(B)));
        if (canonical_generator_count(B) > 0) {
            Coords wall(static_cast<size_t>(M.rank), canonical_generator(B, 0));
            xs.push_back(std::move(wall));
        }

        std::vector<DualElement> ds;
        for (int i = 0; i < S->window; ++i) ds.push_back(dual_basis(S, i));
        ds.push_back(dual_unit(S));
        if (S->window >= 2) {
            DualElement mix = dual_basis(S, 0);
            mix.vec.table[1] = RingElement::from_int(B, 2);
            ds.push_back(mix);
        }

        for (size_t di = 0; di < ds.size(); ++di) {
            DualElement restricted = beta_dual(ds[di], beta);
            for (size_t xi = 0; xi < xs.size(); ++xi) {
                Coords lhs = comodule_act(fM, ds[di], xs[xi]);
                Coords rhs = comodule_act(iM, restricted, xs[xi]);
                if (!coords_equal(lhs, rhs)) {
                    rep.fail("identification",
                             std::to_string(di) + "@" + std::to_string(xi));
                    return;
                }
            }
        }
        rep.pass("identification");
    });

    return rep;
}

BaseChangeInstance divided_power_quadratic_instance(int window, long long p) {
    if (p % 4 != 3)
        fail(Err::BadArgument, "w^2+1 must stay irreducible: need a prime p = 3 mod 4");
    RingPtr A = ring_mod(p);
    RingPtr B = ring_ext(A, "w", {RingElement::one(A), RingElement::zero(A)});

    BaseChangeInstance inst;
    inst.source = divided_power_algebroid(A, window);
    inst.target = divided_power_algebroid(B, window);
    inst.ext = power_basis_extension(B);
    inst.changed = base_change_algebroid(inst.source, inst.ext);

    inst.mor.source = inst.source;
    inst.mor.target = inst.target;
    inst.mor.ring_map = [B](const RingElement& a) { return ring_convert(a, B); };
    for (int i = 0; i < window; ++i) inst.mor.images.push_back(Vec::basis(B, i));

    inst.iota = inclusion_morphism(inst.source, inst.ext, inst.changed);
    inst.beta = beta_map(inst.mor, inst.ext, inst.changed);
    return inst;
}

}  // namespace halg
