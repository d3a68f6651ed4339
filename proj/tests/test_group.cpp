/**
 * @file test_group.cpp
 * @brief Unit tests for pc-group collection, tables, and abelian duals.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repzeta/groupview.hpp"
#include "repzeta/pcgroup.hpp"

using namespace repzeta;

namespace {

// C9 as a chained pc presentation: n_1^3 = n_2, n_2^3 = 1.
PcGroupN make_c9() {
    return PcGroupN::build(3, {{0, 1}, {0, 0}}, {{}, {ExpVec{0, 0}}});
}

// Heisenberg group of order 27: [n_2, n_1] = n_3^2, all cubes trivial.
PcGroupN make_h3() {
    return PcGroupN::build(
        3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
        {{}, {ExpVec{0, 0, 2}}, {ExpVec{0, 0, 0}, ExpVec{0, 0, 0}}});
}

}  // namespace

TEST_CASE("collection computes normal forms in a chained cyclic group") {
    auto C9 = make_c9();
    CHECK(C9.size == 9);
    CHECK(C9.collect({0, 0, 0}) == ExpVec{0, 1});  // n_1^3 = n_2
    u32 n1 = C9.encode({1, 0});
    CHECK(C9.order_of(n1) == 9);
    CHECK(C9.pow(n1, 9) == C9.one());
    CHECK(C9.pow(n1, 3) == C9.encode({0, 1}));
    CHECK(C9.mul(n1, C9.inv(n1)) == C9.one());
}

TEST_CASE("collection in the order-27 Heisenberg group") {
    auto H = make_h3();
    CHECK(H.size == 27);
    // n_2 n_1 = n_1 n_2 n_3^2 (i.e. n_1 n_2 n_3^{-1}).
    CHECK(H.collect({1, 0}) == ExpVec{1, 1, 2});
    u32 n1 = H.encode({1, 0, 0}), n2 = H.encode({0, 1, 0}), n3 = H.encode({0, 0, 1});
    CHECK(H.commutator(n2, n1) == H.encode({0, 0, 2}));
    CHECK(H.order_of(n1) == 3);
    CHECK(H.order_of(n3) == 3);
    // n_3 is central.
    for (u32 x : H.elements()) CHECK(H.mul(x, n3) == H.mul(n3, x));
    // Full associativity was already swept in build(); spot-check inverses.
    for (u32 x : H.elements()) CHECK(H.mul(H.inv(x), x) == H.one());
}

TEST_CASE("malformed presentations are rejected") {
    // Non-weighted power word (n_1^3 = n_1).
    CHECK_THROWS(PcGroupN::build(3, {{1, 0}, {0, 0}}, {{}, {ExpVec{0, 0}}}));
    // Exponent out of range.
    CHECK_THROWS(PcGroupN::build(3, {{0, 3}, {0, 0}}, {{}, {ExpVec{0, 0}}}));
    // Composite p.
    CHECK_THROWS(PcGroupN::build(4, {{0, 0}}, {{}}));
}

TEST_CASE("closure and derived subgroup") {
    auto H = make_h3();
    u32 n1 = H.encode({1, 0, 0}), n3 = H.encode({0, 0, 1});
    auto Z = closure(H, {n3});
    CHECK(Z.size() == 3);
    auto A = closure(H, {n1, n3});
    CHECK(A.size() == 9);
    auto D = derived_subgroup(H, H.elements());
    CHECK(D == Z);  // [H, H] = Z(H)
    CHECK(derived_subgroup(H, A).size() == 1);
    auto frat = power_commutator_step(H, H.elements(), H.elements(), 3);
    CHECK(frat == Z);  // Frattini subgroup = Z
}

TEST_CASE("abelian dual enumerates linear characters") {
    auto H = make_h3();
    auto D = derived_subgroup(H, H.elements());
    auto dual = abelian_dual(H, H.elements(), D);
    CHECK(dual.chars.size() == 9);  // |H^{ab}| = 9
    // Characters are homomorphisms and pairwise distinct on generators.
    u32 n1 = H.encode({1, 0, 0}), n2 = H.encode({0, 1, 0});
    std::set<std::pair<QZ, QZ>> seen;
    auto key = [&](size_t i) {
        return std::make_pair(dual.eval(i, n1), dual.eval(i, n2));
    };
    for (size_t i = 0; i < dual.chars.size(); ++i) {
        CHECK(seen.insert(key(i)).second);
        for (u32 x : {n1, n2, H.mul(n1, n2)})
            for (u32 y : {n2, H.encode({0, 0, 1})})
                CHECK(dual.eval(i, H.mul(x, y)) == dual.eval(i, x) + dual.eval(i, y));
    }
    // Dual of the full abelian group C9.
    auto C9 = make_c9();
    auto d9 = abelian_dual(C9, C9.elements(), {C9.one()});
    CHECK(d9.chars.size() == 9);
    u32 g = C9.encode({1, 0});
    int faithful = 0;
    for (size_t i = 0; i < d9.chars.size(); ++i) faithful += d9.eval(i, g).order() == 9;
    CHECK(faithful == 6);
}

#include "repzeta/subgroups.hpp"

TEST_CASE("lower p-series and omega") {
    auto H = make_h3();
    auto series = lower_p_series(H, H.elements(), 3);
    REQUIRE(series.size() == 3);  // H > Z > 1
    CHECK(series[0].size() == 27);
    CHECK(series[1].size() == 3);
    CHECK(series[2].size() == 1);
    CHECK(omega_of(series, H.encode({0, 0, 1}), H.one()) == 2);
    CHECK(omega_of(series, H.encode({1, 0, 0}), H.one()) == 1);
    CHECK(omega_of(series, H.one(), H.one()) == OMEGA_INF);
}

TEST_CASE("good bases are deterministic and canonical") {
    auto H = make_h3();
    auto series = lower_p_series(H, H.elements(), 3);
    // The trivial subgroup has the empty basis.
    CHECK(good_basis(H, series, {H.one()}).empty());
    // <n_1> has good basis (n_1).
    u32 n1 = H.encode({1, 0, 0});
    auto b = good_basis(H, series, closure(H, {n1}));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == n1);
    // The full group: three basis elements, ordered by omega (n_3 last);
    // within the first layer the exponent-vector lex order puts n_2 first.
    auto bh = good_basis(H, series, H.elements());
    REQUIRE(bh.size() == 3);
    CHECK(bh[0] == H.encode({0, 1, 0}));
    CHECK(bh[1] == n1);
    CHECK(bh[2] == H.encode({0, 0, 1}));
}

TEST_CASE("subgroup enumeration with canonical dedup") {
    auto C3 = PcGroupN::build(3, {{ExpVec{0}}}, {{}});
    CHECK(enumerate_subgroups_of_N(C3).size() == 2);
    auto V4 = PcGroupN::build(2, {ExpVec{0, 0}, ExpVec{0, 0}}, {{}, {ExpVec{0, 0}}});
    CHECK(enumerate_subgroups_of_N(V4).size() == 5);
    auto H = make_h3();
    auto subs = enumerate_subgroups_of_N(H);
    // 1 trivial + 13 of order 3 + 4 maximals + H itself (checked against an
    // independent brute-force closure enumeration).
    CHECK(subs.size() == 19);
    // Index bound trims the enumeration.
    CHECK(enumerate_subgroups_of_N(H, 3).size() == 5);  // H + four maximals
    // Every listed subgroup is closed and its basis generates it.
    for (auto& S : subs) {
        CHECK(closure(H, S.basis).size() == S.elems.size());
        CHECK((i64)(27 / S.elems.size()) * (i64)S.elems.size() == 27);
    }
}
