/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance suite: ten numbered criteria, one PASS/FAIL
 *        line each, nonzero exit if any criterion fails.
 *
 * Each criterion carries a wall-clock budget; exceeding it fails the
 * criterion even when all identities hold.
 */
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "repzeta/oracle.hpp"
#include "repzeta/zeta.hpp"

using namespace repzeta;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;
    int checks = 0;

    void require(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int g_failures = 0;

void run_criterion(int number, const std::string& title, double budget_s,
                   const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    if (c.ok && dt > budget_s)
        c.require(false, "time budget exceeded (" + std::to_string(budget_s) + "s)");
    if (c.ok) {
        std::printf("PASS [criterion %2d] %s (%d checks, %.1fs)\n", number,
                    title.c_str(), c.checks, dt);
    } else {
        std::printf("FAIL [criterion %2d] %s: %s (%.1fs)\n", number, title.c_str(),
                    c.detail.c_str(), dt);
        ++g_failures;
    }
    std::fflush(stdout);
}

DirichletPoly series(std::initializer_list<std::pair<i64, i64>> terms) {
    DirichletPoly z;
    for (auto [deg, coeff] : terms) z.add(deg, Rat(coeff));
    return z;
}

QuotientTable full_quotient(const ExtGroup& G) {
    SubgroupG full;
    for (int i = 0; i < G.m; ++i) full.idx.push_back(i);
    return QuotientTable::of(G, full);
}

/** Solver vs exhaustive oracle on one cochain; records a failure into c. */
void cross_check_coboundary(Criterion& c, const std::string& label,
                            const QuotientTable& Q, const Cocycle2& z, i64 M) {
    bool main_found = coboundary_witness(Q, z, M).has_value();
    bool oracle_found = oracle::coboundary_exhaustive(Q.gam, z.z, M).has_value();
    c.require(main_found == oracle_found,
              label + ": solver disagrees with exhaustive search");
}

TwistChoices random_choices(const NContext& ctx, std::mt19937& rng) {
    TwistChoices ch;
    auto gen = std::make_shared<std::mt19937>(rng());
    ch.chooser = [gen](const std::vector<u32>& cands) {
        return cands[(*gen)() % cands.size()];
    };
    ch.scan_order = ctx.N().elements();
    std::shuffle(ch.scan_order.begin(), ch.scan_order.end(), rng);
    ch.psi_order.resize(ctx.lin_G_count());
    for (size_t t = 0; t < ch.psi_order.size(); ++t) ch.psi_order[t] = t;
    std::shuffle(ch.psi_order.begin(), ch.psi_order.end(), rng);
    return ch;
}

i64 conjugacy_class_count(const IGroup& G) {
    std::vector<u32> elems = G.elements();
    std::vector<char> seen(G.code_bound(), 0);
    i64 classes = 0;
    for (u32 x : elems) {
        if (seen[x]) continue;
        ++classes;
        for (u32 g : elems) seen[G.conj(g, x)] = 1;
    }
    return classes;
}

// ----------------------------------------------------------- criteria ----

void criterion_plain_assembly(Criterion& c) {
    std::set<std::string> groups;
    for (const auto& e : corpus()) {
        if (e.G->order() > 648) continue;
        groups.insert(e.group_id);
        NContext ctx(e.G);
        c.require(zeta_assemble(ctx) == zeta_direct(ctx),
                  e.id + ": fibered plain series != direct enumeration");
    }
    c.require(groups.size() >= 12, "fewer than 12 distinct groups covered");
    // Hand-computed values.
    c.require(zeta_assemble(NContext(corpus_entry("C4").G)) == series({{1, 4}}),
              "C4 series wrong");
    c.require(zeta_assemble(NContext(corpus_entry("S3").G)) ==
                  series({{1, 2}, {2, 1}}),
              "S3 series wrong");
    c.require(zeta_assemble(NContext(corpus_entry("H3/G").G)) ==
                  series({{1, 9}, {3, 2}}),
              "H3 series wrong");
    c.require(zeta_assemble(NContext(corpus_entry("Q8").G)) ==
                  series({{1, 4}, {2, 1}}),
              "Q8 series wrong");
    c.require(zeta_assemble(NContext(corpus_entry("D4/C4").G)) ==
                  series({{1, 4}, {2, 1}}),
              "D4 series wrong");
    c.require(zeta_assemble(NContext(corpus_entry("C3:C4").G)) ==
                  series({{1, 4}, {2, 2}}),
              "C3:C4 series wrong");
    c.require(zeta_assemble(NContext(corpus_entry("C3xS3").G)) ==
                  series({{1, 6}, {2, 3}}),
              "C3xS3 series wrong");
}

void criterion_twist_assembly(Criterion& c) {
    for (const auto& e : corpus()) {
        if (e.G->order() > 648) continue;
        NContext ctx(e.G);
        c.require(twist_assemble(ctx) == twist_direct(ctx),
                  e.id + ": fibered twist series != direct enumeration");
    }
    c.require(twist_assemble(NContext(corpus_entry("S3").G)) ==
                  series({{1, 1}, {2, 1}}),
              "S3 twist series wrong");
    c.require(twist_assemble(NContext(corpus_entry("H3/G").G)) ==
                  series({{1, 1}, {3, 2}}),
              "H3 twist series wrong");
}

void criterion_choice_of_N(Criterion& c) {
    struct Baseline {
        std::string id;
        DirichletPoly plain, twist;
    };
    std::map<std::string, Baseline> seen;
    int families = 0;
    for (const auto& e : corpus()) {
        NContext ctx(e.G);
        DirichletPoly z = zeta_assemble(ctx), t = twist_assemble(ctx);
        auto it = seen.find(e.group_id);
        if (it == seen.end()) {
            seen.emplace(e.group_id, Baseline{e.id, std::move(z), std::move(t)});
            continue;
        }
        ++families;
        c.require(z == it->second.plain,
                  e.group_id + ": plain series differs between " + it->second.id +
                      " and " + e.id);
        c.require(t == it->second.twist,
                  e.group_id + ": twist series differs between " + it->second.id +
                      " and " + e.id);
    }
    c.require(families >= 4, "too few repeated-group comparisons");
}

void criterion_coboundary_oracle(Criterion& c) {
    std::mt19937 rng(20260823);
    const i64 M = 8;  // all sampled denominators divide 8
    auto random_cochain = [&](int r) {
        Cocycle2 z = Cocycle2::zero(r);
        for (auto& row : z.z)
            for (QZ& v : row) v = QZ((i64)(rng() % (u32)M), M);
        return z;
    };
    auto random_coboundary = [&](const QuotientTable& Q) {
        int r = Q.r();
        std::vector<QZ> b((size_t)r);
        for (QZ& v : b) v = QZ((i64)(rng() % (u32)M), M);
        Cocycle2 z = Cocycle2::zero(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                z.z[(size_t)i][(size_t)j] =
                    b[(size_t)i] + b[(size_t)j] - b[(size_t)Q.gam[i][j]];
        return z;
    };
    // r = 2: the full sweep fits (M^(r^2) = 4096 cochains).
    {
        QuotientTable Q = full_quotient(*corpus_entry("D4/C4").G);
        for (i64 code = 0; code < M * M * M * M; ++code) {
            Cocycle2 z = Cocycle2::zero(2);
            i64 t = code;
            for (auto& row : z.z)
                for (QZ& v : row) {
                    v = QZ(t % M, M);
                    t /= M;
                }
            cross_check_coboundary(c, "r=2 sweep", Q, z, M);
        }
    }
    // r = 3 and r = 4: 10^4 random cochains plus structured samples.
    for (const std::string& id : {"H3/C3xC3", "D4/Z", "C3:C4"}) {
        QuotientTable Q = full_quotient(*corpus_entry(id).G);
        for (int trial = 0; trial < 10000; ++trial)
            cross_check_coboundary(c, id + " random", Q, random_cochain(Q.r()), M);
        for (int trial = 0; trial < 200; ++trial) {
            Cocycle2 b = random_coboundary(Q);
            c.require(coboundary_witness(Q, b, M).has_value(),
                      id + ": solver misses a constructed coboundary");
            cross_check_coboundary(c, id + " coboundary", Q, b, M);
            // Structured non-trivial samples: class representative plus a
            // coboundary (a coboundary iff the class is trivial).
            for (const Cocycle2& rep : h2_classes(Q, M))
                cross_check_coboundary(c, id + " class+coboundary", Q, rep + b, M);
        }
    }
}

void criterion_h2_counts(Criterion& c) {
    auto count = [&](const std::string& id) {
        QuotientTable Q = full_quotient(*corpus_entry(id).G);
        return h2_classes(Q, Q.exponent() * Q.exponent()).size();
    };
    c.require(count("D4/C4") == 1, "H^2(C2) != 1");      // cyclic tops
    c.require(count("H3/C3xC3") == 1, "H^2(C3) != 1");
    c.require(count("C3:C4") == 1, "H^2(C4) != 1");
    c.require(count("D4/Z") == 2, "H^2(C2 x C2) != 2");  // elementary tops
    c.require(count("H3/Z") == 3, "H^2(C3 x C3) != 3");
}

void criterion_sylow(Criterion& c) {
    for (const auto& e : corpus()) {
        if (e.G->order() > 243) continue;
        NContext ctx(e.G);
        const auto& irr = ctx.irr_pairs();
        for (size_t i = 0; i < irr.size(); ++i) {
            SylowReport rep = sylow_reduction_checks(ctx, irr[i]);
            std::string where = e.id + " theta#" + std::to_string(i);
            c.require(rep.struct_ok, where + ": Gamma_K != Gamma_K^0 . (Gamma_K)_p");
            c.require(rep.red_ok, where + ": p-part restriction not bijective");
            c.require(rep.t_q_ok, where + ": q-part action not absorbed by Lin(G)");
        }
    }
}

void criterion_invariance(Criterion& c) {
    std::mt19937 rng(20260823);
    for (const std::string& id :
         {"S3", "Q8", "D4/Z", "M27", "H3/Z", "H3/C3xC3", "C3:C4", "C3xS3"}) {
        NContext ctx(corpus_entry(id).G);
        auto classes = ctx.twist_classes();
        // First and last class representative of each group.
        std::vector<size_t> picks = {classes.front()[0]};
        if (classes.size() > 1) picks.push_back(classes.back()[0]);
        for (size_t pick : picks) {
            const NPair& theta = ctx.irr_pairs()[pick];
            TwistContext base(ctx, theta);
            auto gamma0 = gamma_group(base);
            auto t0 = t_invariant(base, gamma0);
            for (int trial = 0; trial < 50; ++trial) {
                TwistContext redo(ctx, theta, random_choices(ctx, rng));
                std::string where = id + " theta#" + std::to_string(pick) +
                                    " trial " + std::to_string(trial);
                auto gamma1 = gamma_group(redo);
                c.require(gamma0 == gamma1, where + ": Gamma changed");
                auto t1 = t_invariant(redo, gamma1);
                c.require(t0.classes[t0.mu_class] == t1.classes[t1.mu_class],
                          where + ": T class changed");
                Cocycle2 diff = base.pair_class() - redo.pair_class();
                i64 M = std::max<i64>(1, diff.denominator()) * base.QK().exponent();
                c.require(is_coboundary2(base.QK(), diff, M),
                          where + ": pair classes differ in H^2");
            }
        }
    }
}

void criterion_tower(Criterion& c) {
    for (i64 p : {2, 3}) {
        auto tower = heisenberg_tower(p, 3, true);
        c.require(tower.size() == 3, "tower level count wrong");
        for (const auto& level : tower) {
            // r~_{p^k} = p^{k-1} (p - 1) for k >= 1, and r~_1 = 1, already
            // stable at every finite level.
            std::string where =
                "p=" + std::to_string(p) + " m=" + std::to_string(level.level);
            c.require(level.group_order == ipow(p, 3 * level.level),
                      where + ": group order wrong");
            DirichletPoly expect;
            expect.add(1, Rat(1));
            for (int k = 1; k <= level.level; ++k)
                expect.add(ipow(p, k), Rat(ipow(p, k - 1) * (p - 1)));
            c.require(level.series == expect, where + ": twist series wrong");
        }
        // Cross-level stabilization of each coefficient.
        for (size_t a = 0; a + 1 < tower.size(); ++a)
            for (const auto& [deg, coeff] : tower[a].series.c)
                c.require(tower[a + 1].series.c.at(deg) == coeff,
                          "p=" + std::to_string(p) + ": coefficient at degree " +
                              std::to_string(deg) + " not stable");
        // Rational model of the stabilized coefficients.
        std::vector<Rat> coeffs;
        for (const auto& [deg, coeff] : tower.back().series.c)
            coeffs.push_back(coeff);
        auto fit = rational_fit(coeffs, p);
        c.require(fit.has_value(), "p=" + std::to_string(p) + ": no rational fit");
        if (fit) {
            std::string want = "(1 - t) / (1 - " + std::to_string(p) + "*t)";
            c.require(fit->str(p) == want,
                      "p=" + std::to_string(p) + ": fit is " + fit->str(p) +
                          ", expected " + want);
        }
    }
}

void criterion_pair_counts(Criterion& c) {
    for (const auto& e : corpus()) {
        NContext ctx(e.G);
        const PcGroupN& N = ctx.N();
        i64 sum = 0;
        for (const auto& pr : ctx.irr_pairs())
            sum += ipow(N.p, 2 * ctx.degree_exponent(pr));
        c.require(sum == N.size, e.id + ": sum p^(2f) != |N|");
        c.require((i64)ctx.irr_pairs().size() == conjugacy_class_count(N),
                  e.id + ": pair count != conjugacy class count of N");
    }
}

void criterion_oracle_concordance(Criterion& c) {
    for (const auto& e : corpus()) {
        if (e.G->order() > 243) continue;
        NContext ctx(e.G);
        auto T = oracle::irr_by_values(*e.G);
        DirichletPoly oz;
        for (i64 d : T.degrees) oz.add(d, Rat(1));
        c.require(oz == zeta_direct(ctx),
                  e.id + ": oracle degrees != direct enumeration");
        DirichletPoly tw;
        for (const auto& cls : oracle::twist_partition(T))
            tw.add(T.degrees[cls[0]], Rat(1));
        c.require(tw == twist_direct(ctx),
                  e.id + ": oracle twist partition != direct twist series");
        // Subgroup walks agree on N.
        auto naive = oracle::all_subgroups(*e.G->N);
        c.require(naive.size() == enumerate_subgroups_of_N(*e.G->N).size(),
                  e.id + ": oracle subgroup count != descent count");
        // Stabilizer searches agree on (|K|, |L|) multisets.
        auto rows = oracle::search_LKN(*e.G);
        std::multiset<std::pair<size_t, size_t>> engine, value_tables;
        for (const auto& pr : ctx.irr_pairs())
            engine.insert({ctx.stabilizer_K(pr).idx.size(),
                           ctx.stabilizer_L(pr).idx.size()});
        for (const auto& r : rows)
            value_tables.insert({r.K_idx.size(), r.L_idx.size()});
        c.require(engine == value_tables,
                  e.id + ": stabilizer searches disagree");
    }
}

}  // namespace

int main() {
    run_criterion(1, "plain assembly equals direct enumeration", 60,
                  criterion_plain_assembly);
    run_criterion(2, "twist assembly equals direct enumeration", 120,
                  criterion_twist_assembly);
    run_criterion(3, "series independent of the choice of N", 60,
                  criterion_choice_of_N);
    run_criterion(4, "coboundary solver vs exhaustive search", 120,
                  criterion_coboundary_oracle);
    run_criterion(5, "H^2 class counts for small tops", 60, criterion_h2_counts);
    run_criterion(6, "Sylow reduction of Gamma and the q-part action", 60,
                  criterion_sylow);
    run_criterion(7, "C, Gamma, T invariant under re-chosen data", 180,
                  criterion_invariance);
    run_criterion(8, "Heisenberg twist towers and rational fit", 300,
                  criterion_tower);
    run_criterion(9, "pair counts match class counts, sum p^(2f) = |N|", 60,
                  criterion_pair_counts);
    run_criterion(10, "oracle concordance", 300, criterion_oracle_concordance);
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
