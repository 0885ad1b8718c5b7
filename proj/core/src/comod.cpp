#include "halg/comod.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace halg {

Coords coords_zero(const RingPtr& A, int rank) {
    return Coords(static_cast<size_t>(rank), RingElement::zero(A));
}

Coords coords_basis(const RingPtr& A, int rank, int s) {
    if (s < 0 || s >= rank) fail(Err::BadArgument, "generator index out of range");
    Coords c = coords_zero(A, rank);
    c[static_cast<size_t>(s)] = RingElement::one(A);
    return c;
}

bool coords_equal(const Coords& a, const Coords& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

namespace {

void validate_comodule(const Comodule& M) {
    if (!M.pres) fail(Err::BadArgument, "comodule without algebroid");
    if (M.rank < 0 || static_cast<int>(M.psi.size()) != M.rank)
        fail(Err::BadArgument, "comodule table size does not match rank");
    for (const auto& row : M.psi)
        for (const auto& [t, g] : row) {
            if (t < 0 || t >= M.rank) fail(Err::BadArgument, "comodule target out of range");
            if (!g.valid() || !same_ring(g.ring(), M.pres->base))
                fail(Err::BadArgument, "comodule entry over the wrong ring");
            if (g.max_index() >= M.pres->window)
                fail(Err::BadArgument, "comodule entry outside the window");
        }
}

bool coords_zero_p(const Coords& x) {
    return std::all_of(x.begin(), x.end(), [](const RingElement& c) { return c.is_zero(); });
}

void require_within(const Vec& g, int W) {
    if (g.max_index() >= W)
        fail(Err::WindowExceeded,
             "comodule entry supported at " + std::to_string(g.max_index()) +
                 " beyond check window " + std::to_string(W));
}

// per-generator law runner: first failure wins, then first indeterminate
template <typename Law>
void run_per_generator(Report& rep, const std::string& name, int rank, const Law& law) {
    std::string fail_witness, indet_witness;
    for (int s = 0; s < rank; ++s) {
        try {
            if (!law(s)) {
                fail_witness = std::to_string(s);
                break;
            }
        } catch (const Error& e) {
            if (e.kind() == Err::WindowExceeded) {
                if (indet_witness.empty()) indet_witness = std::to_string(s);
                continue;
            }
            throw;
        }
    }
    if (!fail_witness.empty())
        rep.fail(name, fail_witness);
    else if (!indet_witness.empty())
        rep.indeterminate(name, indet_witness);
    else
        rep.pass(name);
}

}  // namespace

Coords comodule_act(const Comodule& M, const DualElement& D, const Coords& x) {
    if (D.pres != M.pres)
        fail(Err::DescriptorMismatch, "functional and comodule over different presentations");
    if (static_cast<int>(x.size()) != M.rank) fail(Err::BadArgument, "coordinate length");
    const Presentation& P = *M.pres;
    Coords out = coords_zero(P.base, M.rank);
    for (int s = 0; s < M.rank; ++s) {
        const RingElement& xs = x[static_cast<size_t>(s)];
        if (xs.is_zero()) continue;
        const bool unit_coord = xs.is_one();
        Vec rs = unit_coord ? Vec() : P.eval_etaR(xs);
        for (const auto& [t, g] : M.psi[static_cast<size_t>(s)]) {
            Vec arg = unit_coord ? g : P.gamma_mul(rs, g);
            out[static_cast<size_t>(t)] = out[static_cast<size_t>(t)] + dual_pair(D.vec, arg);
        }
    }
    return out;
}

Report check_comodule(const Comodule& M, int W) {
    validate_comodule(M);
    const Presentation& P = *M.pres;
    if (W < 0 || W > P.window) fail(Err::BadArgument, "check window outside presentation");
    Report rep;

    // (id (x) eps) psi = id: the counit of every gamma_{ts} must be delta_ts
    run_per_generator(rep, "comodule-counit", M.rank, [&](int s) {
        for (int t = 0; t < M.rank; ++t) {
            auto it = M.psi[static_cast<size_t>(s)].find(t);
            RingElement c = RingElement::zero(P.base);
            if (it != M.psi[static_cast<size_t>(s)].end()) {
                require_within(it->second, W);
                c = P.apply_epsilon(it->second);
            }
            RingElement want =
                t == s ? RingElement::one(P.base) : RingElement::zero(P.base);
            if (c != want) return false;
        }
        return true;
    });

    // (id (x) Delta) psi = (psi (x) id) psi, compared leg by leg on the
    // module generators; the right-hand side regroups the middle
    // coefficients through etaR exactly like the coproduct's tensor
    run_per_generator(rep, "comodule-coassociativity", M.rank, [&](int s) {
        for (int u = 0; u < M.rank; ++u) {
            TensorVec lhs(P.base);
            auto it = M.psi[static_cast<size_t>(s)].find(u);
            if (it != M.psi[static_cast<size_t>(s)].end()) {
                require_within(it->second, W);
                lhs = P.apply_delta(it->second);
            }
            TensorVec rhs(P.base);
            for (const auto& [t, g_ts] : M.psi[static_cast<size_t>(s)]) {
                auto jt = M.psi[static_cast<size_t>(t)].find(u);
                if (jt == M.psi[static_cast<size_t>(t)].end()) continue;
                require_within(g_ts, W);
                require_within(jt->second, W);
                for (const auto& [b, cb] : g_ts.entries())
                    rhs.add(P.gamma_mul(jt->second, P.eval_etaR(cb)), b);
            }
            if (lhs != rhs) return false;
        }
        return true;
    });
    return rep;
}

ModuleAction to_module(const Comodule& M) {
    validate_comodule(M);
    Comodule copy = M;
    return {M.pres, M.rank,
            [copy](const DualElement& D, const Coords& x) { return comodule_act(copy, D, x); }};
}

Comodule from_module(const ModuleAction& action, int B) {
    const PresPtr& P = action.pres;
    if (!P) fail(Err::BadArgument, "action without algebroid");
    if (B < 0 || B > P->window) fail(Err::BadArgument, "support bound outside window");

    // discreteness at B: the dual basis beyond the bound must act by zero
    for (int s = 0; s < action.rank; ++s) {
        Coords es = coords_basis(P->base, action.rank, s);
        for (int i = B; i < P->window; ++i)
            if (!coords_zero_p(action.act(dual_basis(P, i), es)))
                fail(Err::SupportExceeded, "action of dual index " + std::to_string(i) +
                                               " is nonzero on generator " + std::to_string(s));
    }

    Comodule M;
    M.pres = P;
    M.rank = action.rank;
    M.psi.resize(static_cast<size_t>(action.rank));
    for (int s = 0; s < action.rank; ++s) {
        Coords es = coords_basis(P->base, action.rank, s);
        for (int i = 0; i < B; ++i) {
            Coords y = action.act(dual_basis(P, i), es);
            for (int t = 0; t < action.rank; ++t) {
                if (y[static_cast<size_t>(t)].is_zero()) continue;
                Vec& g = M.psi[static_cast<size_t>(s)][t];
                if (!g.valid()) g = Vec(P->base);
                g.add(i, y[static_cast<size_t>(t)]);
            }
        }
    }
    return M;
}

bool comodule_equal(const Comodule& M, const Comodule& N) {
    if (M.pres != N.pres || M.rank != N.rank) return false;
    for (int s = 0; s < M.rank; ++s) {
        const auto& a = M.psi[static_cast<size_t>(s)];
        const auto& b = N.psi[static_cast<size_t>(s)];
        for (int t = 0; t < M.rank; ++t) {
            auto ia = a.find(t);
            auto ib = b.find(t);
            Vec va = ia == a.end() ? Vec(M.pres->base) : ia->second;
            Vec vb = ib == b.end() ? Vec(M.pres->base) : ib->second;
            if (va != vb) return false;
        }
    }
    return true;
}

Report iff_test(const Comodule& M) {
    const PresPtr& P = M.pres;
    Report rep = check_comodule(M, P->window);
    const bool side1_fail = !rep.all_pass();
    const bool side1_indet = rep.any_indeterminate();

    // sampled functionals: a slice of the dual basis, the unit, a mix
    std::vector<DualElement> ds;
    for (int i = 0; i < std::min(P->window, 4); ++i) ds.push_back(dual_basis(P, i));
    ds.push_back(dual_unit(P));
    if (P->window >= 2) {
        DualElement mix = dual_basis(P, 0);
        mix.vec.table[1] = RingElement::from_int(P->base, 2);
        ds.push_back(mix);
    }
    // sampled coordinates: the generators, then an all-ones vector
    std::vector<Coords> xs;
    for (int s = 0; s < M.rank; ++s) xs.push_back(coords_basis(P->base, M.rank, s));
    xs.push_back(Coords(static_cast<size_t>(M.rank), RingElement::one(P->base)));
    auto coords_name = [&](size_t idx) {
        return idx < static_cast<size_t>(M.rank) ? std::to_string(idx) : std::string("mix");
    };

    Report side2;
    {
        std::string fw, iw;
        for (size_t xi = 0; xi < xs.size() && fw.empty(); ++xi) {
            try {
                if (!coords_equal(comodule_act(M, dual_unit(P), xs[xi]), xs[xi]))
                    fw = coords_name(xi);
            } catch (const Error& e) {
                if (e.kind() != Err::WindowExceeded) throw;
                if (iw.empty()) iw = coords_name(xi);
            }
        }
        if (!fw.empty())
            side2.fail("module-unital", fw);
        else if (!iw.empty())
            side2.indeterminate("module-unital", iw);
        else
            side2.pass("module-unital");
    }
    {
        std::string fw, iw;
        for (const auto& D2 : ds)
            for (const auto& D1 : ds) {
                for (size_t xi = 0; xi < xs.size() && fw.empty(); ++xi) {
                    try {
                        Coords lhs = comodule_act(M, dual_mul(D2, D1), xs[xi]);
                        Coords rhs = comodule_act(M, D2, comodule_act(M, D1, xs[xi]));
                        if (!coords_equal(lhs, rhs)) fw = coords_name(xi);
                    } catch (const Error& e) {
                        if (e.kind() != Err::WindowExceeded) throw;
                        if (iw.empty()) iw = coords_name(xi);
                    }
                }
                if (!fw.empty()) break;
            }
        if (!fw.empty())
            side2.fail("module-multiplicative", fw);
        else if (!iw.empty())
            side2.indeterminate("module-multiplicative", iw);
        else
            side2.pass("module-multiplicative");
    }
    const bool side2_fail = !side2.all_pass();
    const bool side2_indet = side2.any_indeterminate();
    rep.merge(side2);

    if (side1_indet || side2_indet)
        rep.indeterminate("translation-verdicts-agree", "window");
    else if (side1_fail == side2_fail)
        rep.pass("translation-verdicts-agree");
    else
        rep.fail("translation-verdicts-agree", side1_fail ? "comodule-side-only"
                                                          : "module-side-only");
    return rep;
}

Comodule tensor_comodule(const Comodule& M, const Comodule& N) {
    if (M.pres != N.pres)
        fail(Err::DescriptorMismatch, "tensor factors over different presentations");
    validate_comodule(M);
    validate_comodule(N);
    const Presentation& P = *M.pres;
    Comodule T;
    T.pres = M.pres;
    T.rank = M.rank * N.rank;
    T.psi.resize(static_cast<size_t>(T.rank));
    for (int s = 0; s < M.rank; ++s)
        for (int u = 0; u < N.rank; ++u) {
            auto& row = T.psi[static_cast<size_t>(s * N.rank + u)];
            for (const auto& [t, g_ts] : M.psi[static_cast<size_t>(s)])
                for (const auto& [v, g_vu] : N.psi[static_cast<size_t>(u)]) {
                    Vec prod = P.gamma_mul(g_ts, g_vu);
                    if (prod.is_zero()) continue;
                    Vec& cell = row[t * N.rank + v];
                    if (!cell.valid()) cell = Vec(P.base);
                    cell += prod;
                }
            // drop entries that cancelled to zero to keep the normal form
            for (auto it = row.begin(); it != row.end();)
                it = it->second.is_zero() ? row.erase(it) : std::next(it);
        }
    return T;
}

Coords dual_action_on_tensor(const DualElement& D, const Comodule& M, const Comodule& N,
                             const Coords& m, const Coords& n) {
    if (M.pres != N.pres || D.pres != M.pres)
        fail(Err::DescriptorMismatch, "operands over different presentations");
    const Presentation& P = *M.pres;
    const RingPtr& A = P.base;

    // the essentially finite double sum: only indices acting nonzero matter
    std::vector<Coords> cm, cn;
    std::vector<bool> cm_nz, cn_nz;
    for (int i = 0; i < P.window; ++i) {
        cm.push_back(comodule_act(M, dual_basis(M.pres, i), m));
        cm_nz.push_back(!coords_zero_p(cm.back()));
        cn.push_back(comodule_act(N, dual_basis(N.pres, i), n));
        cn_nz.push_back(!coords_zero_p(cn.back()));
    }
    Coords direct = coords_zero(A, M.rank * N.rank);
    for (int i = 0; i < P.window; ++i) {
        if (!cm_nz[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < P.window; ++j) {
            if (!cn_nz[static_cast<size_t>(j)]) continue;
            RingElement dij = dual_pair(D.vec, P.mult_entry(i, j));
            if (dij.is_zero()) continue;
            for (int t = 0; t < M.rank; ++t)
                for (int v = 0; v < N.rank; ++v) {
                    auto& slot = direct[static_cast<size_t>(t * N.rank + v)];
                    slot = slot + dij * cm[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                                      cn[static_cast<size_t>(j)][static_cast<size_t>(v)];
                }
        }
    }

    // cross-check through the tensor comodule's own translated action
    Coords outer = coords_zero(A, M.rank * N.rank);
    for (int s = 0; s < M.rank; ++s)
        for (int u = 0; u < N.rank; ++u)
            outer[static_cast<size_t>(s * N.rank + u)] =
                m[static_cast<size_t>(s)] * n[static_cast<size_t>(u)];
    Coords via_tensor = comodule_act(tensor_comodule(M, N), D, outer);
    if (!coords_equal(direct, via_tensor))
        throw std::logic_error("tensor action disagrees with the double-sum formula");
    return direct;
}

Comodule base_comodule(const PresPtr& P) {
    Comodule M;
    M.pres = P;
    M.rank = 1;
    M.psi.resize(1);
    M.psi[0][0] = P->unit;
    return M;
}

Comodule truncated_regular_comodule(const PresPtr& P, int rank) {
    if (rank < 0 || rank > P->window) fail(Err::BadArgument, "rank outside window");
    Comodule M;
    M.pres = P;
    M.rank = rank;
    M.psi.resize(static_cast<size_t>(rank));
    for (int s = 0; s < rank; ++s)
        for (const auto& [j, g] : P->delta[s].parts())
            for (const auto& [t, c] : g.entries()) {
                if (t >= rank)
                    fail(Err::BadArgument, "coproduct of index " + std::to_string(s) +
                                               " reaches " + std::to_string(t) +
                                               ", not closed at rank " + std::to_string(rank));
                Vec& cell = M.psi[static_cast<size_t>(s)][t];
                if (!cell.valid()) cell = Vec(P->base);
                cell.add(j, c);
            }
    return M;
}

}  // namespace halg
