/**
 * @file zeta.cpp
 * @brief Zeta series assembly, direct enumerations, Sylow consistency
 *        checks, towers, and rational fits (zeta.hpp).
 */
#include "repzeta/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "repzeta/corpus.hpp"

namespace repzeta {

// ---------------------------------------------------------------- series ---

void DirichletPoly::add(i64 deg, const Rat& coeff) {
    if (deg <= 0) throw std::domain_error("Dirichlet degree must be positive");
    Rat& slot = c[deg];
    slot = slot + coeff;
    if (slot.num == 0) c.erase(deg);
}

DirichletPoly& DirichletPoly::operator+=(const DirichletPoly& o) {
    for (const auto& [d, v] : o.c) add(d, v);
    return *this;
}

DirichletPoly operator*(const DirichletPoly& x, const DirichletPoly& y) {
    DirichletPoly out;
    for (const auto& [dx, vx] : x.c)
        for (const auto& [dy, vy] : y.c)
            out.add(checked_cast(i128(dx) * dy), vx * vy);
    return out;
}

DirichletPoly DirichletPoly::scaled(const Rat& r) const {
    DirichletPoly out;
    for (const auto& [d, v] : c) out.add(d, v * r);
    return out;
}

DirichletPoly DirichletPoly::deg_scaled(i64 m) const {
    DirichletPoly out;
    for (const auto& [d, v] : c) out.add(checked_cast(i128(d) * m), v);
    return out;
}

bool DirichletPoly::is_integral() const {
    for (const auto& [d, v] : c)
        if (v.den != 1 || v.num <= 0) return false;
    return true;
}

i64 DirichletPoly::weight() const {
    Rat w(0);
    for (const auto& [d, v] : c) w = w + v * Rat(d) * Rat(d);
    if (!w.is_integer()) throw std::logic_error("non-integral series weight");
    return w.num;
}

std::string DirichletPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, v] : c) {
        if (!first) os << " + ";
        first = false;
        os << v.str() << "*" << d << "^-s";
    }
    return os.str();
}

// -------------------------------------------------------------- helpers ----

static bool is_p_power(i64 n, i64 p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

static bool quotient_cyclic(const QuotientTable& Q) {
    for (int i = 0; i < Q.r(); ++i)
        if (Q.order_of(i) == (i64)Q.r()) return true;
    return false;
}

static i64 theta_degree(const NContext& ctx, const NPair& theta) {
    return ipow(ctx.N().p, ctx.degree_exponent(theta));
}

/** Irreducible monomial pairs of the p-group with elements Kel, of index at
 *  most max_index (pruned below the center, which every such pair contains). */
static std::vector<GPair> p_group_irr(const GPairCtx& kc, i64 p, i64 max_index) {
    i64 cap = 1;
    while (cap * p * (cap * p) <= kc.order()) cap *= p;
    max_index = std::min(max_index, cap);
    auto Z = center_of(kc.group(), kc.elems());
    return kc.irr_from(kc.subgroups_p(p, max_index, Z));
}

// ------------------------------------------------------------------ f ------

DirichletPoly f_over(const NContext& ctx, const NPair& theta, const SubgroupG& K) {
    const ExtGroup& G = ctx.G();
    i64 p = ctx.N().p;
    i64 q = (i64)K.idx.size();  // |K / N|
    DirichletPoly f;
    if (q == 1) {
        f.add(1, Rat(1));
        return f;
    }
    if (is_p_power(q, p)) {
        GPairCtx kc(G, K.elements(G));
        i64 tdeg = theta_degree(ctx, theta);
        auto pairs = p_group_irr(kc, p, q * tdeg);
        AmbientChar chi = [&](u32 x) { return ctx.eval(theta, G.tail_of(x)); };
        i64 check = 0;
        for (const auto& lam : pairs) {
            if (!kc.lies_over(lam, theta.M.elems, chi)) continue;
            i64 deg = kc.degree(lam);
            if (deg % tdeg != 0)
                throw std::logic_error("f_over: non-integral degree ratio");
            i64 ratio = deg / tdeg;
            f.add(ratio, Rat(1));
            check += ratio * ratio;
        }
        if (check != q)
            throw std::logic_error("f_over: sum of squared ratios != |K/N|");
        return f;
    }
    // Mixed K/N: theta extends along a cyclic quotient and Gallagher lists
    // |K/N| constituents of ratio 1.
    if (!quotient_cyclic(QuotientTable::of(G, K)))
        throw std::logic_error("f_over: mixed non-cyclic K/N is unsupported");
    f.add(1, Rat(q));
    return f;
}

DirichletPoly f_twist_over(const NContext& ctx, const NPair& theta,
                           const SubgroupG& K, const SubgroupG& L) {
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = ctx.N();
    i64 p = N.p;
    i64 ql = (i64)L.idx.size();
    DirichletPoly f;
    if (ql == 1) {
        f.add(1, Rat(1));
        return f;
    }
    if (is_p_power(ql, p)) {
        // Members are Ind_K^L of Irr(K|theta), i.e. Irr(L|theta); count them
        // modulo multiplication by restrictions of Lin(G).
        GPairCtx lc(G, L.elements(G));
        i64 tdeg = theta_degree(ctx, theta);
        auto pairs = p_group_irr(lc, p, ql * tdeg);
        AmbientChar chi = [&](u32 x) { return ctx.eval(theta, G.tail_of(x)); };
        std::vector<const GPair*> members;
        i64 check = 0;
        for (const auto& lam : pairs) {
            if (!lc.lies_over(lam, theta.M.elems, chi)) continue;
            members.push_back(&lam);
            i64 ratio = lc.degree(lam) / tdeg;
            check += ratio * ratio;
        }
        i64 lk = ql / (i64)K.idx.size();
        if (check != lk * lk * (i64)K.idx.size())
            throw std::logic_error("f_twist_over: wrong member multiplicity");
        std::vector<const GPair*> reps;
        for (const GPair* cand : members) {
            bool fresh = true;
            for (const GPair* r : reps) {
                for (size_t psi = 0; psi < ctx.lin_G_count() && fresh; ++psi) {
                    AmbientChar tw = [&ctx, psi](u32 x) {
                        return ctx.psi_eval(psi, x);
                    };
                    if (lc.induced_equal(*r, *cand, &tw)) fresh = false;
                }
                if (!fresh) break;
            }
            if (fresh) {
                reps.push_back(cand);
                f.add(lc.degree(*cand) / tdeg, Rat(1));
            }
        }
        return f;
    }
    // Mixed quotient: implemented for L = K with cyclic K/N and linear theta
    // (the catalogued mixed cases); members are the linear characters of K
    // over theta, counted modulo translation by restrictions of Lin(G).
    if (L.idx != K.idx)
        throw std::logic_error("f_twist_over: mixed L > K is unsupported");
    if (!quotient_cyclic(QuotientTable::of(G, K)))
        throw std::logic_error("f_twist_over: mixed non-cyclic K/N is unsupported");
    if ((i64)theta.M.elems.size() != N.size)
        throw std::logic_error("f_twist_over: mixed K over nonlinear theta");
    auto Kel = K.elements(G);
    AbelianDual dk = abelian_dual(G, Kel, derived_subgroup(G, Kel));
    std::vector<std::vector<QZ>> members;
    for (const auto& eta : dk.chars) {
        bool over = true;
        for (u32 b : theta.M.basis)
            if (!(dk.eval_values(eta, b) == ctx.eval(theta, b))) {
                over = false;
                break;
            }
        if (over) members.push_back(eta);
    }
    if ((i64)members.size() != (i64)K.idx.size())
        throw std::logic_error("f_twist_over: wrong extension count");
    std::set<std::vector<QZ>> W;  // restrictions of Lin(G) to the dual gens
    for (size_t psi = 0; psi < ctx.lin_G_count(); ++psi) {
        std::vector<QZ> w;
        for (u32 g : dk.gens) w.push_back(ctx.psi_eval(psi, g));
        W.insert(std::move(w));
    }
    std::vector<std::vector<QZ>> reps;
    for (const auto& eta : members) {
        bool fresh = true;
        for (const auto& r : reps) {
            std::vector<QZ> diff;
            for (size_t t = 0; t < eta.size(); ++t) diff.push_back(eta[t] - r[t]);
            if (W.count(diff)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(eta);
    }
    f.add(1, Rat((i64)reps.size()));
    return f;
}

// ------------------------------------------------------------- assembly ----

std::vector<ZetaCell> zeta_cells(const NContext& ctx) {
    const ExtGroup& G = ctx.G();
    const auto& irr = ctx.irr_pairs();
    std::vector<ZetaCell> cells;
    for (size_t i = 0; i < irr.size(); ++i) {
        const NPair& theta = irr[i];
        SubgroupG K = ctx.stabilizer_K(theta);
        SubgroupG Kp = sylow_p_part(G, K);
        QuotientTable Q = QuotientTable::of(G, Kp);
        SubgroupH H = stabilizer_H(ctx, Kp, theta);
        Cocycle2 z = class_of_pair(ctx, Q, H, theta);
        i64 Mi = class_modulus(ctx, Q, theta);
        ZetaCell* home = nullptr;
        for (auto& cell : cells) {
            if (cell.K_idx != K.idx) continue;
            i64 Mb = std::lcm(Mi, cell.modulus) * Q.exponent();
            if (is_coboundary2(Q, z - cell.c, Mb)) {
                home = &cell;
                break;
            }
        }
        if (!home) {
            cells.push_back(ZetaCell{K.idx, z, Mi, {}, f_over(ctx, theta, K), {}});
            home = &cells.back();
        }
        home->members.push_back(i);
        home->part.add(theta_degree(ctx, theta), Rat(1));
    }
    return cells;
}

DirichletPoly zeta_assemble(const NContext& ctx) {
    const ExtGroup& G = ctx.G();
    DirichletPoly Z;
    for (const auto& cell : zeta_cells(ctx)) {
        i64 index = G.m / (i64)cell.K_idx.size();  // |G : K|
        Z += (cell.f * cell.part).deg_scaled(index).scaled(Rat(1, index));
    }
    if (!Z.is_integral())
        throw std::logic_error("zeta_assemble: non-integral series");
    if (Z.weight() != G.order())
        throw std::logic_error("zeta_assemble: weight != |G|");
    return Z;
}

DirichletPoly zeta_direct(const NContext& ctx) {
    const ExtGroup& G = ctx.G();
    GPairCtx gc(G, G.elements());
    DirichletPoly Z;
    for (const auto& lam : gc.irr_from(gc.subgroups_all()))
        Z.add(gc.degree(lam), Rat(1));
    if (Z.weight() != G.order())
        throw std::logic_error("zeta_direct: monomial enumeration incomplete");
    return Z;
}

std::vector<std::vector<size_t>> psi_twist_classes(const NContext& ctx) {
    const auto& irr = ctx.irr_pairs();
    std::vector<char> placed(irr.size(), 0);
    std::vector<std::vector<size_t>> out;
    for (size_t i = 0; i < irr.size(); ++i) {
        if (placed[i]) continue;
        out.push_back({i});
        placed[i] = 1;
        for (size_t j = i + 1; j < irr.size(); ++j) {
            if (placed[j] || irr[j].M.elems.size() != irr[i].M.elems.size())
                continue;
            if (ctx.induced_twist_equal(irr[i], irr[j])) {
                placed[j] = 1;
                out.back().push_back(j);
            }
        }
    }
    return out;
}

std::vector<TwistCell> twist_cells(const NContext& ctx) {
    const auto& irr = ctx.irr_pairs();
    auto classes = psi_twist_classes(ctx);
    std::vector<TwistCell> cells;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const NPair& theta = irr[classes[ci][0]];
        TwistContext tc(ctx, theta);
        auto Gamma = gamma_group(tc);
        TInvariant T = t_invariant(tc, Gamma);
        const auto& Trep = T.classes[T.mu_class];
        Cocycle2 z = tc.pair_class();
        i64 Mi = class_modulus(ctx, tc.QK(), theta);
        TwistCell* home = nullptr;
        for (auto& cell : cells) {
            if (cell.L_idx != tc.L().idx || cell.K_idx != tc.K().idx) continue;
            if (cell.Gamma != Gamma || cell.T != Trep) continue;
            i64 Mb = std::lcm(Mi, cell.modulus) * tc.QK().exponent();
            if (is_coboundary2(tc.QK(), z - cell.c, Mb)) {
                home = &cell;
                break;
            }
        }
        if (!home) {
            cells.push_back(TwistCell{tc.L().idx, tc.K().idx, Gamma, z, Mi, Trep,
                                      {}, f_twist_over(ctx, theta, tc.K(), tc.L()),
                                      {}});
            home = &cells.back();
        }
        home->members.push_back(ci);
        home->part.add(theta_degree(ctx, theta), Rat(1));
    }
    return cells;
}

DirichletPoly twist_assemble(const NContext& ctx) {
    const ExtGroup& G = ctx.G();
    DirichletPoly Z;
    for (const auto& cell : twist_cells(ctx)) {
        i64 index = G.m / (i64)cell.L_idx.size();  // |G : L|
        Z += (cell.f * cell.part).deg_scaled(index).scaled(Rat(1, index));
    }
    if (!Z.is_integral())
        throw std::logic_error("twist_assemble: non-integral series");
    return Z;
}

DirichletPoly twist_direct(const NContext& ctx) {
    const ExtGroup& G = ctx.G();
    GPairCtx gc(G, G.elements());
    auto pairs = gc.irr_from(gc.subgroups_all());
    std::vector<const GPair*> reps;
    DirichletPoly Z;
    for (const auto& cand : pairs) {
        bool fresh = true;
        for (const GPair* r : reps) {
            if (r->P.size() != cand.P.size()) continue;
            for (size_t psi = 0; psi < ctx.lin_G_count() && fresh; ++psi) {
                AmbientChar tw = [&ctx, psi](u32 x) { return ctx.psi_eval(psi, x); };
                if (gc.induced_equal(*r, cand, &tw)) fresh = false;
            }
            if (!fresh) break;
        }
        if (fresh) {
            reps.push_back(&cand);
            Z.add(gc.degree(cand), Rat(1));
        }
    }
    return Z;
}

// ---------------------------------------------------------------- sylow ----

static bool tiny_prime(i64 q) {
    if (q < 2) return false;
    for (i64 d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

SylowReport sylow_reduction_checks(const NContext& ctx, const NPair& theta) {
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = ctx.N();
    i64 p = N.p;
    TwistContext tc(ctx, theta);
    const SubgroupG& K = tc.K();
    const SubgroupG& L = tc.L();
    auto gamma_p = gamma_group(tc);  // at K_p, on tc.QK() local indices
    SylowReport rep;

    // Gamma at the full stabilizer.  For a p-power quotient this is the
    // computed group itself; in the mixed case theta^ extends to an honest
    // linear character of K, which is a class function, so the conjugation
    // witness collapses and Gamma_K = { eps|_K : eps in Lin(G), eps|_N = 1 }.
    std::vector<std::vector<QZ>> gamma_K;
    bool k_is_p = is_p_power((i64)K.idx.size(), p);
    if (k_is_p) {
        gamma_K = gamma_p;
    } else {
        std::set<std::vector<QZ>> acc;
        for (size_t e = 0; e < ctx.lin_G_count(); ++e) {
            bool kills_N = true;
            for (u32 b : good_basis(N, ctx.series(), N.elements()))
                if (!ctx.psi_eval(e, G.code(0, b)).is_zero()) {
                    kills_N = false;
                    break;
                }
            if (!kills_N) continue;
            std::vector<QZ> v;
            for (int i : K.idx) v.push_back(ctx.psi_eval(e, G.code(i, 0)));
            acc.insert(std::move(v));
        }
        gamma_K.assign(acc.begin(), acc.end());
    }

    // Gamma_K^0: restrictions of Lin(G) trivial on N with trivial p-part.
    std::set<std::vector<QZ>> g0, gp_parts, gk_set(gamma_K.begin(), gamma_K.end());
    auto indices = k_is_p ? std::vector<int>(tc.QK().idx) : K.idx;
    for (const auto& v : gamma_K) {
        std::vector<QZ> pp;
        for (const QZ& x : v) pp.push_back(primary_part(x, p));
        gp_parts.insert(std::move(pp));
    }
    for (size_t e = 0; e < ctx.lin_G_count(); ++e) {
        bool kills_N = true;
        for (u32 b : good_basis(N, ctx.series(), N.elements()))
            if (!ctx.psi_eval(e, G.code(0, b)).is_zero()) {
                kills_N = false;
                break;
            }
        if (!kills_N) continue;
        std::vector<QZ> v;
        bool p_trivial = true;
        for (int i : indices) {
            QZ x = ctx.psi_eval(e, G.code(i, 0));
            if (!primary_part(x, p).is_zero()) p_trivial = false;
            v.push_back(x);
        }
        if (p_trivial && gk_set.count(v)) g0.insert(std::move(v));
    }

    // struct: Gamma_K = Gamma_K^0 . (Gamma_K)_p.
    std::set<std::vector<QZ>> product;
    for (const auto& a : g0)
        for (const auto& b : gp_parts) {
            std::vector<QZ> s;
            for (size_t t = 0; t < a.size(); ++t) s.push_back(a[t] + b[t]);
            product.insert(std::move(s));
        }
    rep.struct_ok = product == gk_set;

    // red: restriction to K_p is injective on the p-part, image Gamma_{K_p}.
    if (k_is_p) {
        rep.red_ok = gp_parts == gk_set;  // the p-part is everything
    } else {
        std::set<std::vector<QZ>> image;
        for (const auto& v : gp_parts) {
            std::vector<QZ> w;
            for (int i : tc.QK().idx) {
                auto pos = std::lower_bound(K.idx.begin(), K.idx.end(), i);
                w.push_back(v[(size_t)(pos - K.idx.begin())]);
            }
            image.insert(std::move(w));
        }
        std::set<std::vector<QZ>> gp_set(gamma_p.begin(), gamma_p.end());
        rep.red_ok = image.size() == gp_parts.size() && image == gp_set;
    }

    // T at the q-parts of L, q != p: twisted conjugation by the q-part must
    // be absorbed by Lin(G).
    rep.t_q_ok = true;
    i64 lsize = (i64)L.idx.size();
    for (i64 q = 2; q <= lsize; ++q) {
        if (!tiny_prime(q) || q == p || lsize % q != 0) continue;
        std::vector<u32> Lq = sylow_q_part(G, L, q);
        std::vector<u32> Kel = K.elements(G);
        // An honest extension of theta to K (linear theta over a cyclic
        // quotient in the catalogued mixed cases; theta itself when K = N).
        AbelianDual dk = abelian_dual(G, Kel, derived_subgroup(G, Kel));
        std::vector<QZ> eta;
        if ((i64)theta.M.elems.size() != N.size)
            throw std::logic_error("sylow checks: mixed L over nonlinear theta");
        for (const auto& cand : dk.chars) {
            bool over = true;
            for (u32 b : theta.M.basis)
                if (!(dk.eval_values(cand, b) == ctx.eval(theta, b))) {
                    over = false;
                    break;
                }
            if (over) {
                eta = cand;
                break;
            }
        }
        if (eta.empty() && !dk.gens.empty())
            throw std::logic_error("sylow checks: theta does not extend to K");
        for (u32 g : Lq) {
            u32 gi = G.inv(g);
            bool found = false;
            for (size_t e = 0; e < ctx.lin_G_count() && !found; ++e) {
                bool all = true;
                for (u32 x : Kel) {
                    QZ lhs = dk.eval_values(eta, G.mul(G.mul(gi, x), g));
                    if (!(lhs == dk.eval_values(eta, x) + ctx.psi_eval(e, x))) {
                        all = false;
                        break;
                    }
                }
                found = all;
            }
            if (!found) rep.t_q_ok = false;
        }
    }
    return rep;
}

// ---------------------------------------------------------------- towers ---

std::vector<TowerLevel> heisenberg_tower(i64 p, int levels, bool twisted) {
    std::vector<TowerLevel> out;
    for (int m = 1; m <= levels; ++m) {
        auto Np = heisenberg_modp(p, m);
        auto Gp = std::make_shared<const ExtGroup>(ExtGroup::trivial_top(Np));
        NContext ctx(Gp);
        const auto& irr = ctx.irr_pairs();
        DirichletPoly S;
        if (twisted) {
            for (const auto& cls : ctx.twist_classes())
                S.add(theta_degree(ctx, irr[cls[0]]), Rat(1));
        } else {
            for (const auto& pr : irr) S.add(theta_degree(ctx, pr), Rat(1));
        }
        out.push_back(TowerLevel{m, Gp->order(), std::move(S)});
    }
    return out;
}

// ------------------------------------------------------------ rational -----

static Rat p_power(i64 p, int i) {
    return i >= 0 ? Rat(ipow(p, i)) : Rat(1, ipow(p, -i));
}

std::string RationalFit::str(i64 p) const {
    auto poly_str = [](const std::vector<Rat>& c) {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].num == 0) continue;
            Rat v = c[k];
            if (first) {
                if (v.num < 0) os << "-";
            } else {
                os << (v.num < 0 ? " - " : " + ");
            }
            first = false;
            Rat av = v.num < 0 ? Rat(-v.num, v.den) : v;
            if (k == 0 || !(av == Rat(1))) os << av.str();
            if (k >= 1) {
                if (!(av == Rat(1))) os << "*";
                os << "t";
                if (k > 1) os << "^" << k;
            }
        }
        if (first) os << "0";
        return os.str();
    };
    std::ostringstream os;
    os << "(" << poly_str(num) << ")";
    if (!factors.empty()) {
        os << " / ";
        for (auto [i, j] : factors) {
            os << "(1 - " << p_power(p, i).str();
            os << "*t";
            if (j > 1) os << "^" << j;
            os << ")";
        }
    }
    return os.str();
}

std::optional<RationalFit> rational_fit(const std::vector<Rat>& a, i64 p) {
    size_t L = a.size();
    if (L < 2) return std::nullopt;
    std::vector<std::pair<int, int>> fs;
    for (int i = -2; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j) fs.emplace_back(i, j);
    auto mul_factor = [&](std::vector<Rat> d, int i, int j) {
        Rat pi = p_power(p, i);
        std::vector<Rat> out(L, Rat(0));
        for (size_t k = 0; k < L; ++k) {
            out[k] = d[k];
            if (k >= (size_t)j) out[k] = out[k] - pi * d[k - (size_t)j];
        }
        return out;
    };
    auto evaluate = [&](const std::vector<std::pair<int, int>>& combo)
        -> std::optional<RationalFit> {
        std::vector<Rat> den(L, Rat(0));
        den[0] = Rat(1);
        for (auto [i, j] : combo) den = mul_factor(den, i, j);
        std::vector<Rat> numr(L, Rat(0));
        for (size_t k = 0; k < L; ++k)
            for (size_t m = 0; m <= k; ++m) numr[k] = numr[k] + den[m] * a[k - m];
        int deg = -1;
        for (size_t k = 0; k < L; ++k)
            if (numr[k].num != 0) deg = (int)k;
        if (deg > (int)L - 2) return std::nullopt;  // need a trailing guard zero
        numr.resize((size_t)std::max(deg + 1, 1));
        return RationalFit{std::move(numr), combo};
    };
    std::optional<RationalFit> best;
    auto consider = [&](const std::vector<std::pair<int, int>>& combo) {
        auto fit = evaluate(combo);
        if (!fit) return;
        if (!best || fit->factors.size() < best->factors.size() ||
            (fit->factors.size() == best->factors.size() &&
             fit->num.size() < best->num.size()))
            best = fit;
    };
    consider({});
    if (best) return best;
    for (auto f : fs) consider({f});
    if (best) return best;
    for (size_t s = 0; s < fs.size(); ++s)
        for (size_t t = s; t < fs.size(); ++t) consider({fs[s], fs[t]});
    return best;
}

}  // namespace repzeta
