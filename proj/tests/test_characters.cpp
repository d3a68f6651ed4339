/**
 * @file test_characters.cpp
 * @brief Pair calculus: linear characters, Mackey predicates, stabilizers,
 *        twist classes, and the monomial parametrization of Irr(N).
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repzeta/characters.hpp"

using namespace repzeta;

static NContext ctx_of(const std::string& id) {
    return NContext(std::const_pointer_cast<const ExtGroup>(corpus_entry(id).G));
}

TEST_CASE("linear character counts and homomorphism property") {
    NContext ctx = ctx_of("H3/G");
    const PcGroupN& N = ctx.N();
    auto full = make_subgroup(N, ctx.series(), N.elements());
    auto chars = ctx.lin_chars(full);
    CHECK(chars.size() == 9);  // |H(3)^{ab}| = 9
    for (const auto& c : chars)
        for (u32 x : {N.encode({1, 0, 0}), N.encode({1, 2, 1})})
            for (u32 y : {N.encode({0, 1, 0}), N.encode({2, 0, 2})})
                CHECK(ctx.eval(c, N.mul(x, y)) == ctx.eval(c, x) + ctx.eval(c, y));
    // Every linear character kills the center generator n3 = [N, N].
    for (const auto& c : chars) CHECK(ctx.eval(c, N.encode({0, 0, 1})).a == 0);
}

TEST_CASE("Lin(G) sizes") {
    CHECK(ctx_of("S3").lin_G_count() == 2);
    CHECK(ctx_of("H3/G").lin_G_count() == 9);
    CHECK(ctx_of("M27").lin_G_count() == 9);
    CHECK(ctx_of("H3/C3xC3").lin_G_count() == 9);
}

TEST_CASE("global linear characters satisfy the section identity") {
    // With sigma_i = psi(y_i) and tau = psi|_N:
    // sigma_gamma(i,j) + tau(a_ij phi_j^{-1}(n) n') = sigma_i + sigma_j + tau(n) + tau(n').
    NContext ctx = ctx_of("H3/C3xC3");
    const ExtGroup& G = ctx.G();
    const PcGroupN& N = *G.N;
    for (size_t psi = 0; psi < ctx.lin_G_count(); ++psi)
        for (int i = 0; i < G.m; ++i)
            for (int j = 0; j < G.m; ++j)
                for (u32 n : {(u32)0, N.encode({1, 1})})
                    for (u32 nn : {(u32)0, N.encode({2, 0})}) {
                        u32 tail = N.mul(N.mul(G.a[i][j], G.phi_inv(j, n)), nn);
                        QZ lhs = ctx.psi_eval(psi, G.code(G.gam[i][j], 0)) +
                                 ctx.psi_eval(psi, G.code(0, tail));
                        QZ rhs = ctx.psi_eval(psi, G.code(i, 0)) +
                                 ctx.psi_eval(psi, G.code(j, 0)) +
                                 ctx.psi_eval(psi, G.code(0, n)) +
                                 ctx.psi_eval(psi, G.code(0, nn));
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("Irr(N) for the Heisenberg group of order 27") {
    NContext ctx = ctx_of("H3/G");
    const auto& irr = ctx.irr_pairs();
    CHECK(irr.size() == 11);  // 9 linear + 2 of degree 3
    int deg1 = 0, deg3 = 0;
    for (const auto& pr : irr) {
        i64 f = ctx.degree_exponent(pr);
        if (f == 0) ++deg1;
        if (f == 1) ++deg3;
    }
    CHECK(deg1 == 9);
    CHECK(deg3 == 2);
    // Twist classes: the linears form one class; the two degree-3 characters
    // have distinct central characters, so no twist identifies them.
    auto tc = ctx.twist_classes();
    CHECK(tc.size() == 3);
    std::vector<size_t> sizes;
    for (const auto& c : tc) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 9});
}

TEST_CASE("stabilizers in H3 over N = C3 x C3") {
    NContext ctx = ctx_of("H3/C3xC3");
    const auto& irr = ctx.irr_pairs();
    CHECK(irr.size() == 9);  // N abelian: all pairs linear with M = N
    int full = 0, just_n = 0;
    for (const auto& pr : irr) {
        auto K = ctx.stabilizer_K(pr);
        if ((int)K.idx.size() == ctx.G().m)
            ++full;
        else if (K.idx == std::vector<int>{0})
            ++just_n;
    }
    CHECK(full == 3);
    CHECK(just_n == 6);
}

TEST_CASE("S3 acting on Irr(C3)") {
    NContext ctx = ctx_of("S3");
    const auto& irr = ctx.irr_pairs();
    REQUIRE(irr.size() == 3);
    // Identify the two faithful characters.
    const PcGroupN& N = ctx.N();
    std::vector<size_t> faithful;
    for (size_t i = 0; i < irr.size(); ++i)
        if (ctx.eval(irr[i], N.encode({1})).order() == 3) faithful.push_back(i);
    REQUIRE(faithful.size() == 2);
    CHECK_FALSE(ctx.induced_equal(irr[faithful[0]], irr[faithful[1]]));
    // Conjugation by the reflection swaps them.
    auto conj = ctx.conj_pair(ctx.G().code(1, 0), irr[faithful[0]]);
    CHECK(ctx.induced_equal(conj, irr[faithful[1]]));
    // Lin(S3) is trivial on N = [G, G], so the twist relation reduces to
    // conjugacy: two classes.
    CHECK(ctx.twist_classes().size() == 2);
    // Stabilizers: trivial character has K = G, faithful ones K = L = N.
    for (size_t i = 0; i < irr.size(); ++i) {
        auto K = ctx.stabilizer_K(irr[i]);
        auto L = ctx.stabilizer_L(irr[i]);
        if (ctx.eval(irr[i], N.encode({1})).a == 0) {
            CHECK(K.idx.size() == 2);
        } else {
            CHECK(K.idx == std::vector<int>{0});
            CHECK(L.idx == std::vector<int>{0});
        }
    }
}

TEST_CASE("M27: faithful theta has K = N but L = G") {
    NContext ctx = ctx_of("M27");
    const auto& irr = ctx.irr_pairs();
    REQUIRE(irr.size() == 9);  // N = C9 abelian
    const PcGroupN& N = ctx.N();
    u32 n1 = N.encode({1, 0});
    int checked = 0;
    for (const auto& pr : irr) {
        if (ctx.eval(pr, n1).order() != 9) continue;  // want faithful theta
        ++checked;
        CHECK(ctx.stabilizer_K(pr).idx == std::vector<int>{0});
        CHECK(ctx.stabilizer_L(pr).idx == std::vector<int>{0, 1, 2});
    }
    CHECK(checked == 6);
}

TEST_CASE("invariance of characters under H") {
    // H3 over N = C3 x C3: take H = G itself; the three K = G characters are
    // exactly the H-invariant ones.
    NContext ctx = ctx_of("H3/C3xC3");
    const ExtGroup& G = ctx.G();
    SubgroupG full{{0, 1, 2}};
    auto hh = enumerate_HH(G, full);
    const SubgroupH* Hfull = nullptr;
    for (const auto& H : hh)
        if (H.elems.size() == (size_t)G.order()) Hfull = &H;
    REQUIRE(Hfull != nullptr);
    int invariant = 0;
    for (const auto& pr : ctx.irr_pairs())
        invariant += ctx.is_invariant(*Hfull, pr);
    CHECK(invariant == 3);
}

TEST_CASE("Irr(N) degree counts for the Heisenberg group mod 9") {
    NContext ctx = ctx_of("Heis9/G");
    const auto& irr = ctx.irr_pairs();  // throws unless sum deg^2 = 729
    std::map<i64, int> by_f;
    for (const auto& pr : irr) ++by_f[ctx.degree_exponent(pr)];
    CHECK(by_f[0] == 81);
    CHECK(by_f[1] == 18);
    CHECK(by_f[2] == 6);
    CHECK(irr.size() == 105);
}
