/**
 * @file test_corpus.cpp
 * @brief Structural checks for the built-in group catalogue and the
 *        extension-layer operations (Sylow parts, transversal conjugation,
 *        and the H-subgroup enumeration).
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "repzeta/corpus.hpp"
#include "repzeta/groupio.hpp"

using namespace repzeta;

TEST_CASE("catalogue entries build and have the right orders") {
    std::map<std::string, i64> expected = {
        {"C2", 2},     {"C3", 3},      {"C4", 4},      {"C9", 9},
        {"C2xC2", 4},  {"C3xC3", 9},   {"H2", 8},      {"H3/G", 27},
        {"H3/C3xC3", 27}, {"H3/Z", 27}, {"M27", 27},   {"Q8", 8},
        {"D4/C4", 8},  {"D4/V4", 8},   {"D4/Z", 8},    {"S3", 6},
        {"C3:C4", 12}, {"C3xS3", 18},  {"Heis9/G", 729}, {"Heis9/XZ", 729}};
    CHECK(corpus().size() == expected.size());
    for (const auto& e : corpus()) {
        REQUIRE(expected.count(e.id));
        CHECK(e.G->order() == expected[e.id]);
        // Identity and inverses behave.
        for (u32 x : {e.G->one(), (u32)(e.G->order() - 1)}) {
            CHECK(e.G->mul(x, e.G->inv(x)) == e.G->one());
            CHECK(e.G->mul(e.G->one(), x) == x);
        }
    }
    CHECK_THROWS_AS((void)corpus_entry("nope"), std::out_of_range);
}

TEST_CASE("conjugation by the transversal acts as expected") {
    // In the modular group of order 27, y n y^{-1} = n^4.
    const auto& M27 = *corpus_entry("M27").G;
    const auto& N = *M27.N;
    u32 n1 = N.encode({1, 0});
    CHECK(M27.phi(1, n1) == N.pow(n1, 4));
    CHECK(M27.phi(2, n1) == N.pow(n1, 7));
    CHECK(M27.phi(1, N.encode({0, 1})) == N.encode({0, 1}));
    // Q8 vs D4: number of involutions distinguishes the two extensions of C4.
    auto count_involutions = [](const ExtGroup& G) {
        int c = 0;
        for (u32 x : G.elements()) c += x != G.one() && G.mul(x, x) == G.one();
        return c;
    };
    CHECK(count_involutions(*corpus_entry("Q8").G) == 1);
    CHECK(count_involutions(*corpus_entry("D4/C4").G) == 5);
    CHECK(count_involutions(*corpus_entry("D4/Z").G) == 5);
    // The three D4 presentations agree on element orders.
    const auto& d4v4 = *corpus_entry("D4/V4").G;
    CHECK(count_involutions(d4v4) == 5);
    int order4 = 0;
    for (u32 x : d4v4.elements()) order4 += d4v4.order_of(x) == 4;
    CHECK(order4 == 2);
}

TEST_CASE("kappa and d satisfy the defining identity") {
    for (const auto& e : corpus()) {
        const auto& G = *e.G;
        for (int i = 0; i < G.m; ++i)
            for (int j = 0; j < G.m; ++j) {
                u32 lhs = G.mul(G.mul(G.inv(G.code(i, 0)), G.code(j, 0)), G.code(i, 0));
                CHECK(lhs == G.code(G.kappa[i][j], G.d[i][j]));
            }
    }
}

TEST_CASE("subgroups over N and Sylow parts") {
    const auto& c34 = *corpus_entry("C3:C4").G;
    auto subs = subgroups_over_N(c34);
    CHECK(subs.size() == 3);  // C4 has subgroups 1, C2, C4
    SubgroupG full{{0, 1, 2, 3}};
    CHECK(sylow_p_part(c34, full).idx == std::vector<int>{0});  // p = 3
    auto syl2 = sylow_q_part(c34, full, 2);
    CHECK(syl2.size() == 4);
    CHECK_THROWS(sylow_q_part(c34, full, 5));
    CHECK_THROWS(sylow_q_part(c34, SubgroupG{{0}}, 2));

    const auto& m27 = *corpus_entry("M27").G;
    SubgroupG m27full{{0, 1, 2}};
    CHECK(sylow_p_part(m27, m27full).idx == m27full.idx);  // already a p-group

    const auto& s3 = *corpus_entry("S3").G;
    CHECK(sylow_q_part(s3, SubgroupG{{0, 1}}, 2).size() == 2);
}

TEST_CASE("text format round-trips every catalogue entry") {
    for (const auto& e : corpus()) {
        INFO(e.id);
        std::string text = write_group_text(*e.G);
        std::istringstream in(text);
        auto H = read_group_text(in);
        REQUIRE(H->order() == e.G->order());
        CHECK(H->N->power == e.G->N->power);
        CHECK(H->N->comm == e.G->N->comm);
        CHECK(H->gam == e.G->gam);
        CHECK(H->a == e.G->a);
        // Full multiplication agreement (same element coding by construction).
        if (H->order() <= 64) {
            for (u32 x : H->elements())
                for (u32 y : H->elements()) CHECK(H->mul(x, y) == e.G->mul(x, y));
        }
        CHECK(write_group_text(*H) == text);
    }
}

TEST_CASE("text format parse errors carry line numbers") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_group_text(in);
    };
    // A valid two-generator example first.
    auto G = parse("# Heisenberg mod 2\np 2\nd 3\ncomm 2 1 = 0 0 1\n");
    CHECK(G->order() == 8);
    auto line_of = [&](const std::string& s) {
        try {
            parse(s);
        } catch (const GroupParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("d 2\n") == 1);                        // p missing
    CHECK(line_of("p 2\nd 1\npower 3 =\n") == 3);        // bad generator index
    CHECK(line_of("p 2\nd 2\npower 1 = 0 1 1\n") == 3);  // wrong arity
    CHECK(line_of("p 3\nd 1\npower 1 = 5\n") == 3);      // exponent range
    CHECK(line_of("p 2\nd 1\nm 2\ngamma 0 1\n") == 5);   // missing gamma row (EOF)
    CHECK(line_of("p 2\nd 1\nbogus 1\n") == 3);          // unknown directive
    // Structurally inconsistent data is rejected by the validating builders.
    CHECK(line_of("p 2\nd 2\npower 1 = 1 0\n") >= 1);    // non-weighted power
    // phi_1 is a shear of order 3, violating phi_1 o phi_1 = phi_{gamma(1,1)}.
    CHECK(line_of("p 3\nd 2\nm 2\ngamma 0 1\ngamma 1 0\nphi 1 = 1 1 / 0 1\n") >= 1);
}

TEST_CASE("enumerate_HH lists exactly the N-supplementing subgroups") {
    // H3 over N = C3 x C3: |HH(G)| = 1 (G) + 3 (maximals other than N)
    // + 9 (order-3 complements) = 13.
    const auto& e = corpus_entry("H3/C3xC3");
    SubgroupG full{{0, 1, 2}};
    auto hh = enumerate_HH(*e.G, full);
    CHECK(hh.size() == 13);
    for (const auto& H : hh) {
        CHECK(H.idx == full.idx);
        CHECK(H.elems.size() == H.M.elems.size() * 3);
        // The recorded transversal lies inside H.
        for (size_t s = 0; s < H.idx.size(); ++s)
            CHECK(contains(H.elems, e.G->code(H.idx[s], H.tails[s])));
    }
    // K_p = N: every subgroup of N qualifies (19 for the Heisenberg group).
    auto hh_n = enumerate_HH(*corpus_entry("H3/G").G, SubgroupG{{0}});
    CHECK(hh_n.size() == 19);
    // H3 over its center: only H = G covers all nine cosets.
    auto hh_z = enumerate_HH(*corpus_entry("H3/Z").G, SubgroupG{{0, 1, 2, 3, 4, 5, 6, 7, 8}});
    CHECK(hh_z.size() == 1);
    CHECK(hh_z[0].M.elems.size() == 3);
}
