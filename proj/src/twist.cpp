/**
 * @file twist.cpp
 * @brief Twist-level invariants (Gamma, mu, T); see twist.hpp.
 */
#include "repzeta/twist.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "repzeta/linalg.hpp"

namespace repzeta {

QGroupView::QGroupView(const QuotientTable& Q) : Q_(&Q) {
    inv_.assign(Q.r(), 0);
    for (int i = 0; i < Q.r(); ++i)
        for (int j = 0; j < Q.r(); ++j)
            if (Q.gam[i][j] == 0) inv_[i] = (u32)j;
}

std::vector<u32> QGroupView::elements() const {
    std::vector<u32> out(Q_->r());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

std::vector<std::vector<QZ>> lin_of_quotient(const QuotientTable& Q) {
    QGroupView V(Q);
    std::vector<u32> all = V.elements();
    AbelianDual dual = abelian_dual(V, all, derived_subgroup(V, all));
    std::vector<std::vector<QZ>> out;
    for (size_t c = 0; c < dual.chars.size(); ++c) {
        std::vector<QZ> v((size_t)Q.r());
        for (int i = 0; i < Q.r(); ++i) v[i] = dual.eval(c, (u32)i);
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubgroupH stabilizer_H(const NContext& ctx, const SubgroupG& Kp,
                       const NPair& chi, const TransversalChooser& chooser) {
    const ExtGroup& G = ctx.G();
    std::vector<u32> elems;
    for (u32 g : Kp.elements(G)) {
        bool ok = true;
        for (u32 x : chi.M.basis) {
            u32 cx = G.tail_of(G.conj(g, G.code(0, x)));
            if (!contains(chi.M.elems, cx) ||
                !(ctx.eval(chi, cx) == ctx.eval(chi, x))) {
                ok = false;
                break;
            }
        }
        if (ok) elems.push_back(g);
    }
    SubgroupH H = subgroup_h_from_elements(G, ctx.series(), std::move(elems), chooser);
    if (H.idx != Kp.idx)
        throw std::logic_error("stabilizer_H: H does not supplement N in K_p");
    return H;
}

bool predicate_A(const NContext& ctx, const NPair& chi, int i_glob, u32 n,
                 int j_glob, u32 nprime) {
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = ctx.N();
    std::vector<u32> S;  // phi_i(^n M)
    S.reserve(chi.M.elems.size());
    for (u32 m : chi.M.elems) S.push_back(G.phi(i_glob, N.conj(n, m)));
    std::sort(S.begin(), S.end());
    u32 ninv = N.inv(n);
    for (u32 n2 : S) {
        u32 img = G.phi(j_glob, N.conj(nprime, n2));
        if (!contains(S, img)) return false;
        QZ l = ctx.eval(chi, N.conj(ninv, G.phi_inv(i_glob, img)));
        QZ r = ctx.eval(chi, N.conj(ninv, G.phi_inv(i_glob, n2)));
        if (l != r) return false;
    }
    return true;
}

QZ conj_chi_hat(const NContext& ctx, const QuotientTable& QK,
                const SubgroupH& H, const NPair& chi, int i_glob, u32 n,
                int j_glob, u32 nprime) {
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = ctx.N();
    int kij = G.kappa[i_glob][j_glob];
    u32 t = H.tails[QK.local_of(kij)];
    u32 arg = N.mul(
        N.mul(N.mul(N.mul(N.inv(t), G.phi_inv(kij, N.inv(n))), G.d[i_glob][j_glob]),
              G.phi_inv(i_glob, nprime)),
        n);
    return ctx.eval(chi, arg);
}

TwistContext::TwistContext(const NContext& ctx, const NPair& pair,
                           const TwistChoices& choices)
    : ctx_(&ctx), pair_(pair) {
    const ExtGroup& G = ctx.G();
    K_ = ctx.stabilizer_K(pair);
    L_ = ctx.stabilizer_L(pair);
    Lp_ = sylow_p_part(G, L_);
    for (int i : K_.idx)
        if (Lp_.contains_index(i)) Kp_.idx.push_back(i);
    // The quotients in scope are abelian, so the p-parts are unique and
    // K cap L_p is the full p-part of K.
    i64 kq = (i64)K_.idx.size();
    while (kq % G.N->p == 0) kq /= G.N->p;
    if ((i64)Kp_.idx.size() * kq != (i64)K_.idx.size())
        throw std::logic_error("twist context: K cap L_p is not the p-part of K");
    QK_ = QuotientTable::of(G, Kp_);
    QL_ = QuotientTable::of(G, Lp_);
    H_ = stabilizer_H(ctx, Kp_, pair, choices.chooser);
    std::vector<char> seen(G.code_bound(), 0);
    for (u32 g : Kp_.elements(G)) {
        if (seen[g]) continue;
        h_reps_.push_back(g);
        for (u32 h : H_.elems) seen[G.mul(g, h)] = 1;
    }
    c_ = class_of_pair(ctx, QK_, H_, pair_);
    build_mu(choices);
}

const CycInt& TwistContext::theta_hat(u32 x) const {
    auto it = theta_memo_.find(x);
    if (it != theta_memo_.end()) return it->second;
    const ExtGroup& G = ctx_->G();
    const PcGroupN& N = ctx_->N();
    CycInt sum = CycInt::integer(0);
    for (u32 u : h_reps_) {
        u32 y = G.mul(G.mul(G.inv(u), x), u);
        int jl = QK_.local_of(G.top_of(y));
        u32 m = N.mul(N.inv(H_.tails[jl]), G.tail_of(y));
        if (contains(pair_.M.elems, m))
            sum = sum + CycInt::root(ctx_->eval(pair_, m));
    }
    return theta_memo_.emplace(x, std::move(sum)).first->second;
}

void TwistContext::build_mu(const TwistChoices& choices) {
    const ExtGroup& G = ctx_->G();
    const PcGroupN& N = ctx_->N();
    int rL = QL_.r(), rK = QK_.r();
    mu_.assign(rL, std::vector<QZ>(rK));
    psi_.assign(rL, 0);
    i64 D = std::lcm(QL_.exponent(), QK_.exponent());
    for (const QZ& v : pair_.dvals) D = std::lcm(D, v.n);
    for (i64 q : ctx_->g_dual().rel_orders) D = std::lcm(D, q);
    const std::vector<u32> scan =
        choices.scan_order.empty() ? N.elements() : choices.scan_order;
    for (int k = 0; k < rL; ++k) {
        u32 g = G.code(QL_.idx[k], 0);
        auto psi = ctx_->induced_twist_equal(
            pair_, ctx_->conj_pair(g, pair_),
            choices.psi_order.empty() ? nullptr : &choices.psi_order);
        if (!psi) throw std::logic_error("mu: coset outside the twist stabilizer");
        psi_[k] = *psi;
        u32 gi = G.inv(g);
        for (int i = 0; i < rK; ++i) {
            bool found = false;
            for (u32 nn : scan) {
                u32 x = G.code(QK_.idx[i], nn);
                const CycInt& v = theta_hat(x);
                if (v.is_zero()) continue;
                const CycInt& w = theta_hat(G.mul(G.mul(gi, x), g));
                for (i64 num = 0; num < D && !found; ++num) {
                    QZ om(num, D);
                    if (w == v * CycInt::root(om)) {
                        mu_[k][i] = om - ctx_->psi_eval(psi_[k], x);
                        found = true;
                    }
                }
                if (!found)
                    throw std::logic_error("mu: ratio is not a root of unity");
                break;
            }
            if (!found)
                throw std::logic_error("mu: theta^ vanishes on a whole coset");
        }
    }
}

namespace {

/** One comparison point of the alignment by y_i n: y_j n' in H cap ^{y_i n}H,
 *  with val = (^{y_i n} chi^)(y_j n') - chi(t_j^-1 n').  The points (and val)
 *  do not depend on the tested nu or on eps, so they are collected once. */
struct AlignPoint {
    int jl;
    QZ val;
};

std::vector<AlignPoint> align_points(const TwistContext& tc, int il, u32 n) {
    const NContext& ctx = tc.ctx();
    const PcGroupN& N = ctx.N();
    const QuotientTable& QK = tc.QK();
    const SubgroupH& H = tc.H();
    const NPair& chi = tc.pair();
    int i = QK.idx[il];
    std::vector<AlignPoint> pts;
    for (int jl = 0; jl < QK.r(); ++jl) {
        int j = QK.idx[jl];
        for (u32 np : N.elements()) {
            u32 m = N.mul(N.inv(H.tails[jl]), np);
            if (!contains(chi.M.elems, m)) continue;
            if (!predicate_A(ctx, chi, i, n, j, np)) continue;
            pts.push_back(
                {jl, conj_chi_hat(ctx, QK, H, chi, i, n, j, np) - ctx.eval(chi, m)});
        }
    }
    return pts;
}

/** Does some eps in Lin(G) satisfy val + nu_j = eps(y_j) + eps(n) at every
 *  collected point of the alignment by y_i n? */
bool points_admit(const TwistContext& tc, const std::vector<AlignPoint>& pts,
                  u32 n, const std::vector<QZ>& nu) {
    const NContext& ctx = tc.ctx();
    const ExtGroup& G = ctx.G();
    const QuotientTable& QK = tc.QK();
    for (size_t eps = 0; eps < ctx.lin_G_count(); ++eps) {
        QZ eps_n = ctx.psi_eval(eps, G.code(0, n));
        bool ok = true;
        for (const AlignPoint& pt : pts)
            if (pt.val + nu[pt.jl] !=
                ctx.psi_eval(eps, G.code(QK.idx[pt.jl], 0)) + eps_n) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool gamma_contains(const TwistContext& tc, const std::vector<QZ>& nu) {
    const PcGroupN& N = tc.ctx().N();
    const QuotientTable& QK = tc.QK();
    for (int il = 0; il < QK.r(); ++il)
        for (u32 n : N.elements())
            if (points_admit(tc, align_points(tc, il, n), n, nu)) return true;
    return false;
}

bool gamma_contains_direct(const TwistContext& tc, const std::vector<QZ>& nu) {
    const NContext& ctx = tc.ctx();
    const ExtGroup& G = ctx.G();
    for (size_t eps = 0; eps < ctx.lin_G_count(); ++eps) {
        bool ok = true;
        for (u32 x : tc.Kp().elements(G)) {
            if (tc.theta_hat(x).is_zero()) continue;
            if (ctx.psi_eval(eps, x) != nu[tc.QK().local_of(G.top_of(x))]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<std::vector<QZ>> gamma_group(const TwistContext& tc) {
    const PcGroupN& N = tc.ctx().N();
    const QuotientTable& QK = tc.QK();
    // The alignment points are nu-independent; collect them lazily once and
    // share them across all membership tests.
    std::map<std::pair<int, u32>, std::vector<AlignPoint>> cache;
    std::vector<std::vector<QZ>> out;
    for (const auto& nu : lin_of_quotient(QK)) {
        bool member = false;
        for (int il = 0; il < QK.r() && !member; ++il)
            for (u32 n : N.elements()) {
                auto key = std::make_pair(il, n);
                auto it = cache.find(key);
                if (it == cache.end())
                    it = cache.emplace(key, align_points(tc, il, n)).first;
                if (points_admit(tc, it->second, n, nu)) {
                    member = true;
                    break;
                }
            }
        if (member) out.push_back(nu);
    }
    return out;
}

bool predicate_B(const TwistContext& tc, int k_local, int i_local, int j_local,
                 u32 n, u32 nprime, const QZ& mu_val, const QZ& delta_val,
                 const QZ& nu_val, size_t psi) {
    const NContext& ctx = tc.ctx();
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = ctx.N();
    const QuotientTable& QK = tc.QK();
    const SubgroupH& H = tc.H();
    const NPair& chi = tc.pair();
    int kg = tc.QL().idx[k_local];
    int ig = QK.idx[i_local], jg = QK.idx[j_local];
    int kkj = G.kappa[kg][jg];
    u32 lhs_arg = N.mul(N.mul(N.inv(H.tails[QK.local_of(kkj)]), G.d[kg][jg]),
                        G.phi_inv(kg, nprime));
    if (!contains(chi.M.elems, lhs_arg)) return false;
    QZ rhs = mu_val + delta_val + nu_val + ctx.psi_eval(psi, G.code(jg, 0)) +
             ctx.psi_eval(psi, G.code(0, nprime)) +
             conj_chi_hat(ctx, QK, H, chi, ig, n, jg, nprime);
    return ctx.eval(chi, lhs_arg) == rhs;
}

TInvariant t_invariant(const TwistContext& tc,
                       const std::vector<std::vector<QZ>>& Gamma) {
    const NContext& ctx = tc.ctx();
    const ExtGroup& G = ctx.G();
    const QuotientTable& QK = tc.QK();
    const QuotientTable& QL = tc.QL();
    int rL = QL.r(), rK = QK.r();
    auto pi = [&](int k, int i) {  // action: (y_k . f)(y_i) = f(y_k^-1 y_i y_k)
        return QK.local_of(G.kappa[QL.idx[k]][QK.idx[i]]);
    };
    // mu takes multiplicative values: theta^ and its twist have the same
    // factor set, so their ratio lies in Lin(K_p/N) =: V.  Candidate classes
    // are therefore enumerated as V-valued crossed homomorphisms, determined
    // by their values on a polycyclic generating set of L_p/N.
    using Fn = std::vector<QZ>;  // a function on QK indices
    std::vector<Fn> V = lin_of_quotient(QK);
    auto fn_add = [&](const Fn& a, const Fn& b) {
        Fn c(rK);
        for (int i = 0; i < rK; ++i) c[i] = a[i] + b[i];
        return c;
    };
    auto fn_sub = [&](const Fn& a, const Fn& b) {
        Fn c(rK);
        for (int i = 0; i < rK; ++i) c[i] = a[i] - b[i];
        return c;
    };
    auto act = [&](int k, const Fn& f) {  // ^{y_k} f
        Fn c(rK);
        for (int i = 0; i < rK; ++i) c[i] = f[pi(k, i)];
        return c;
    };
    auto in_gamma = [&](const Fn& f) {
        return std::find(Gamma.begin(), Gamma.end(), f) != Gamma.end();
    };
    QGroupView VL(QL);
    std::vector<u32> allL = VL.elements();
    AbelianDual dualL = abelian_dual(VL, allL, {VL.one()});
    size_t t = dualL.gens.size();
    // Equivalence in H^1: u ~ v iff u - v = (^k b - b) + Gamma-cochain for
    // some b in the full function module F.
    i64 Mb = QL.exponent() * QK.exponent();
    for (const Fn& nu : V)
        for (const QZ& x : nu) Mb = std::lcm(Mb, x.n);
    i64 Mbig = Mb * QL.exponent();
    auto equiv = [&](const std::vector<Fn>& u, const std::vector<Fn>& v) {
        Mat B;
        Vec rhs;
        size_t nb = (size_t)rK;
        size_t nd = (size_t)rL * Gamma.size();
        for (int k = 0; k < rL; ++k)
            for (int i = 0; i < rK; ++i) {
                Vec row(nb + nd, 0);
                row[pi(k, i)] += 1;
                row[i] -= 1;
                for (size_t s = 0; s < Gamma.size(); ++s) {
                    const QZ& gv = Gamma[s][i];
                    row[nb + (size_t)k * Gamma.size() + s] += gv.a * (Mbig / gv.n);
                }
                for (i64& x : row) x = ((x % Mbig) + Mbig) % Mbig;
                B.push_back(std::move(row));
                QZ d = u[k][i] - v[k][i];
                if (Mbig % d.n != 0)
                    throw std::logic_error("t_invariant: value outside lattice");
                rhs.push_back(d.a * (Mbig / d.n));
            }
        return solve_mod(B, rhs, Mbig).has_value();
    };
    // Enumerate assignments of V-values to the generators of L_p/N and
    // extend along the discrete-log words with the crossed homomorphism law
    // w(uv) = w(u) + ^u w(v); keep extensions whose cocycle identity holds
    // modulo Gamma everywhere.
    std::vector<std::vector<Fn>> valid;
    std::vector<size_t> pick(t, 0);
    while (true) {
        std::vector<Fn> w(rL, Fn(rK));
        for (u32 k : allL) {
            const auto& log = dualL.logs.at(dualL.coset_rep.at(k));
            Fn acc(rK);
            u32 cur = VL.one();
            for (size_t s = 0; s < t; ++s)
                for (i64 rep = 0; rep < log[s]; ++rep) {
                    acc = fn_add(acc, act((int)cur, V[pick[s]]));
                    cur = VL.mul(cur, dualL.gens[s]);
                }
            w[k] = std::move(acc);
        }
        bool ok = true;
        for (int k = 0; k < rL && ok; ++k)
            for (int l = 0; l < rL && ok; ++l)
                ok = in_gamma(fn_sub(w[QL.gam[k][l]], fn_add(w[k], act(k, w[l]))));
        if (ok) valid.push_back(std::move(w));
        size_t s = 0;
        while (s < t && ++pick[s] == V.size()) pick[s++] = 0;
        if (s == t) break;
    }
    if (t == 0) valid.push_back(std::vector<Fn>(rL, Fn(rK)));
    // Deduplicate into classes.
    std::sort(valid.begin(), valid.end());
    std::vector<std::vector<Fn>> reps;
    for (const auto& w : valid) {
        bool fresh = true;
        for (const auto& r : reps)
            if (equiv(w, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(w);
    }
    TInvariant out;
    size_t hits = 0;
    for (size_t r = 0; r < reps.size(); ++r)
        if (equiv(tc.mu(), reps[r])) {
            out.mu_class = r;
            ++hits;
        }
    if (hits != 1)
        throw std::logic_error("t_invariant: mu matched " + std::to_string(hits) +
                               " candidate classes");
    out.classes = std::move(reps);
    return out;
}

}  // namespace repzeta
