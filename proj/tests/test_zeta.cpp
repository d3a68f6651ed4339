/**
 * @file test_zeta.cpp
 * @brief Zeta series: Dirichlet arithmetic, assembly vs direct enumeration,
 *        twisted series, Sylow consistency, towers and rational fits.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repzeta/zeta.hpp"

using namespace repzeta;

static DirichletPoly series(std::initializer_list<std::pair<i64, i64>> terms) {
    DirichletPoly out;
    for (auto [d, c] : terms) out.add(d, Rat(c));
    return out;
}

TEST_CASE("Dirichlet polynomial arithmetic") {
    DirichletPoly a = series({{1, 2}, {3, 1}});
    DirichletPoly b = series({{2, 1}});
    CHECK((a * b) == series({{2, 2}, {6, 1}}));
    CHECK(a.deg_scaled(3) == series({{3, 2}, {9, 1}}));
    CHECK(a.scaled(Rat(1, 2)).is_integral() == false);
    CHECK(a.weight() == 2 + 9);
    CHECK(a.str() == "2*1^-s + 1*3^-s");
    DirichletPoly c = a;
    c += a.scaled(Rat(-1));
    CHECK(c == DirichletPoly{});
}

TEST_CASE("direct enumeration matches known character degree counts") {
    auto direct = [](const std::string& id) {
        return zeta_direct(NContext(corpus_entry(id).G));
    };
    CHECK(direct("C4") == series({{1, 4}}));
    CHECK(direct("S3") == series({{1, 2}, {2, 1}}));
    CHECK(direct("H3/G") == series({{1, 9}, {3, 2}}));
    CHECK(direct("M27") == series({{1, 9}, {3, 2}}));
    CHECK(direct("Q8") == series({{1, 4}, {2, 1}}));
    CHECK(direct("D4/C4") == series({{1, 4}, {2, 1}}));
    CHECK(direct("C3:C4") == series({{1, 4}, {2, 2}}));
    CHECK(direct("C3xS3") == series({{1, 6}, {2, 3}}));
}

TEST_CASE("assembly agrees with the direct route on the catalogue") {
    for (const auto& entry : corpus()) {
        if (entry.G->order() > 648) continue;
        NContext ctx(entry.G);
        INFO(entry.id);
        CHECK(zeta_assemble(ctx) == zeta_direct(ctx));
    }
}

TEST_CASE("twisted assembly agrees with the direct twist route") {
    for (const auto& entry : corpus()) {
        if (entry.G->order() > 648) continue;
        NContext ctx(entry.G);
        INFO(entry.id);
        CHECK(twist_assemble(ctx) == twist_direct(ctx));
    }
    CHECK(twist_direct(NContext(corpus_entry("S3").G)) ==
          series({{1, 1}, {2, 1}}));
    CHECK(twist_direct(NContext(corpus_entry("H3/G").G)) ==
          series({{1, 1}, {3, 2}}));
}

TEST_CASE("assembly is independent of the choice of N") {
    auto by_group = [](const std::string& gid) {
        std::vector<DirichletPoly> plain, twist;
        for (const auto& entry : corpus()) {
            if (entry.group_id != gid) continue;
            NContext ctx(entry.G);
            plain.push_back(zeta_assemble(ctx));
            twist.push_back(twist_assemble(ctx));
        }
        REQUIRE(plain.size() >= 2);
        for (size_t i = 1; i < plain.size(); ++i) {
            CHECK(plain[i] == plain[0]);
            CHECK(twist[i] == twist[0]);
        }
    };
    by_group("H3");
    by_group("D4");
}

TEST_CASE("Sylow reductions hold on the mixed catalogue entries") {
    for (const std::string& id : {"S3", "C3:C4", "C3xS3", "D4/Z", "H3/C3xC3"}) {
        NContext ctx(corpus_entry(id).G);
        INFO(id);
        for (const auto& theta : ctx.irr_pairs()) {
            SylowReport rep = sylow_reduction_checks(ctx, theta);
            CHECK(rep.struct_ok);
            CHECK(rep.red_ok);
            CHECK(rep.t_q_ok);
        }
    }
}

TEST_CASE("Heisenberg towers: coefficients and rational fit") {
    for (i64 p : {2, 3}) {
        auto tower = heisenberg_tower(p, 2, true);
        REQUIRE(tower.size() == 2);
        CHECK(tower[0].series == series({{1, 1}, {p, p - 1}}));
        CHECK(tower[1].series ==
              series({{1, 1}, {p, p - 1}, {p * p, p * (p - 1)}}));
        // Coefficient sequence in t = p^{-s} from the deepest level.
        std::vector<Rat> coeffs;
        for (i64 d = 1; d <= p * p; d *= p)
            coeffs.push_back(tower[1].series.c.at(d));
        auto fit = rational_fit(coeffs, p);
        REQUIRE(fit.has_value());
        CHECK(fit->factors == std::vector<std::pair<int, int>>{{1, 1}});
        CHECK(fit->num == std::vector<Rat>{Rat(1), Rat(-1)});  // (1-t)/(1-pt)
        CHECK(fit->str(p) ==
              std::string("(1 - t) / (1 - ") + std::to_string(p) + "*t)");
    }
}

TEST_CASE("rational fit prefers fewest factors, then lowest degree") {
    // 1, 2, 4, 8 = 1/(1 - 2t) with p = 2.
    auto fit = rational_fit({Rat(1), Rat(2), Rat(4), Rat(8)}, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->factors == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(fit->num == std::vector<Rat>{Rat(1)});
    // A terminating sequence needs no denominator at all.
    auto poly = rational_fit({Rat(1), Rat(5), Rat(0), Rat(0)}, 3);
    REQUIRE(poly.has_value());
    CHECK(poly->factors.empty());
}
