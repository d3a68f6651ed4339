/**
 * @file oracle.cpp
 * @brief Value-table reference implementations (oracle.hpp).
 */
#include "repzeta/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repzeta::oracle {

std::vector<std::vector<u32>> all_subgroups(const IGroup& G) {
    std::set<std::vector<u32>> seen;
    std::vector<std::vector<u32>> work;
    std::vector<u32> triv{G.one()};
    seen.insert(triv);
    work.push_back(triv);
    while (!work.empty()) {
        std::vector<u32> S = std::move(work.back());
        work.pop_back();
        for (u32 g : G.elements()) {
            if (contains(S, g)) continue;
            std::vector<u32> gens = S;
            gens.push_back(g);
            std::vector<u32> T = closure(G, gens);
            if (seen.insert(T).second) work.push_back(T);
        }
    }
    return {seen.begin(), seen.end()};
}

/** Value table of Ind_P^G chi at every element of G. */
static std::vector<CycInt> induce(const IGroup& G, const std::vector<u32>& elems,
                                  const std::vector<u32>& P,
                                  const AbelianDual& dual,
                                  const std::vector<QZ>& chi) {
    // Left coset representatives of P.
    std::vector<u32> reps;
    std::set<u32> covered;
    for (u32 g : elems) {
        if (covered.count(g)) continue;
        reps.push_back(g);
        for (u32 x : P) covered.insert(G.mul(g, x));
    }
    std::vector<CycInt> row;
    row.reserve(elems.size());
    for (u32 x : elems) {
        CycInt v = CycInt::integer(0);
        for (u32 g : reps) {
            u32 y = G.mul(G.mul(G.inv(g), x), g);
            if (contains(P, y)) v = v + CycInt::root(dual.eval_values(chi, y));
        }
        row.push_back(v);
    }
    return row;
}

IrrTable irr_by_values(const IGroup& G) {
    IrrTable T;
    T.elems = G.elements();
    size_t id_pos = 0;
    while (T.elems[id_pos] != G.one()) ++id_pos;
    for (const auto& P : all_subgroups(G)) {
        AbelianDual dual = abelian_dual(G, P, derived_subgroup(G, P));
        for (const auto& chi : dual.chars) {
            std::vector<CycInt> row = induce(G, T.elems, P, dual, chi);
            if (!(inner_product(row, row) == Rat(1))) continue;  // reducible
            bool fresh = true;
            for (const auto& r : T.rows)
                if (!(inner_product(row, r) == Rat(0))) {  // same irreducible
                    fresh = false;
                    break;
                }
            if (!fresh) continue;
            T.degrees.push_back(row[id_pos].as_integer());
            T.rows.push_back(std::move(row));
        }
    }
    // Stable order by degree.
    std::vector<size_t> order(T.rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return T.degrees[a] < T.degrees[b];
    });
    IrrTable out;
    out.elems = T.elems;
    for (size_t i : order) {
        out.rows.push_back(std::move(T.rows[i]));
        out.degrees.push_back(T.degrees[i]);
    }
    i64 sum = 0;
    for (i64 d : out.degrees) sum += d * d;
    if (sum != (i64)out.elems.size())
        throw std::logic_error("oracle: monomial enumeration incomplete");
    return out;
}

std::vector<std::vector<size_t>> twist_partition(const IrrTable& T) {
    std::vector<size_t> lin;
    for (size_t i = 0; i < T.rows.size(); ++i)
        if (T.degrees[i] == 1) lin.push_back(i);
    auto twisted_equal = [&](size_t a, size_t b) {
        for (size_t l : lin) {
            bool all = true;
            for (size_t x = 0; x < T.elems.size() && all; ++x)
                all = T.rows[a][x] * T.rows[l][x] == T.rows[b][x];
            if (all) return true;
        }
        return false;
    };
    std::vector<char> placed(T.rows.size(), 0);
    std::vector<std::vector<size_t>> out;
    for (size_t i = 0; i < T.rows.size(); ++i) {
        if (placed[i]) continue;
        out.push_back({i});
        placed[i] = 1;
        for (size_t j = i + 1; j < T.rows.size(); ++j) {
            if (placed[j] || T.degrees[j] != T.degrees[i]) continue;
            if (twisted_equal(i, j)) {
                placed[j] = 1;
                out.back().push_back(j);
            }
        }
    }
    return out;
}

std::optional<std::vector<QZ>> coboundary_exhaustive(
    const std::vector<std::vector<int>>& gam,
    const std::vector<std::vector<QZ>>& z, i64 M) {
    int r = (int)gam.size();
    // b_1 is forced: z_1j = b_1 + b_j - b_j for every j.
    QZ b1 = z[0][0];
    if (M % b1.n != 0) return std::nullopt;
    for (int j = 0; j < r; ++j)
        if (!(z[0][j] == b1) || !(z[j][0] == b1)) return std::nullopt;
    std::vector<i64> pick((size_t)r, 0);  // numerators of b_i over M; b_0 fixed
    std::vector<QZ> b((size_t)r);
    for (;;) {
        b[0] = b1;
        for (int i = 1; i < r; ++i) b[(size_t)i] = QZ(pick[(size_t)i], M);
        bool ok = true;
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < r && ok; ++j)
                ok = z[(size_t)i][(size_t)j] ==
                     b[(size_t)i] + b[(size_t)j] - b[(size_t)gam[i][j]];
        if (ok) return b;
        int t = 1;
        while (t < r && ++pick[(size_t)t] == M) pick[(size_t)t++] = 0;
        if (t == r) return std::nullopt;
    }
}

std::vector<LKRow> search_LKN(const ExtGroup& G) {
    const PcGroupN& N = *G.N;
    IrrTable TN = irr_by_values(N);
    IrrTable TG = irr_by_values(G);
    std::vector<size_t> linG;
    for (size_t i = 0; i < TG.rows.size(); ++i)
        if (TG.degrees[i] == 1) linG.push_back(i);
    std::vector<LKRow> out;
    for (size_t ri = 0; ri < TN.rows.size(); ++ri) {
        LKRow row{ri, TN.degrees[ri], {}, {}};
        for (int i = 0; i < G.m; ++i) {
            // ^{y_i} theta (x) = theta(y_i^-1 x y_i) = theta(phi_i^-1(x)).
            bool fixed = true;
            for (u32 x : TN.elems)
                if (!(TN.rows[ri][G.phi_inv(i, x)] == TN.rows[ri][x])) {
                    fixed = false;
                    break;
                }
            if (fixed) row.K_idx.push_back(i);
            bool twisted = fixed;
            if (!twisted) {
                for (size_t l : linG) {
                    bool all = true;
                    for (u32 x : TN.elems) {
                        CycInt lhs = TN.rows[ri][G.phi_inv(i, x)];
                        CycInt rhs = TN.rows[ri][x] * TG.rows[l][G.code(0, x)];
                        if (!(lhs == rhs)) {
                            all = false;
                            break;
                        }
                    }
                    if (all) {
                        twisted = true;
                        break;
                    }
                }
            }
            if (twisted) row.L_idx.push_back(i);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace repzeta::oracle
