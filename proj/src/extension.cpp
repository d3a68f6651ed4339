#include "repzeta/extension.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace repzeta {

u32 ExtGroup::mul(u32 x, u32 y) const {
    int i = top_of(x), j = top_of(y);
    u32 n = tail_of(x), b = tail_of(y);
    u32 tail = N->mul(N->mul(a[i][j], phi_inv_[j][n]), b);
    return code(gam[i][j], tail);
}

u32 ExtGroup::inv(u32 x) const {
    int i = top_of(x);
    int j = top_inv[i];
    u32 n = tail_of(x);
    u32 tail = N->mul(phi_inv_[j][N->inv(n)], N->inv(a[i][j]));
    return code(j, tail);
}

std::vector<u32> ExtGroup::elements() const {
    std::vector<u32> out(code_bound());
    for (u32 i = 0; i < code_bound(); ++i) out[i] = i;
    return out;
}

ExtGroup ExtGroup::trivial_top(std::shared_ptr<const PcGroupN> N) {
    std::vector<std::vector<ExpVec>> id_phi = {{}};
    return build(std::move(N), {{0}}, {{0}}, id_phi);
}

ExtGroup ExtGroup::build(std::shared_ptr<const PcGroupN> N,
                         std::vector<std::vector<int>> gamma,
                         std::vector<std::vector<u32>> a,
                         const std::vector<std::vector<ExpVec>>& phi_gen_images) {
    ExtGroup G;
    G.N = std::move(N);
    G.m = (int)gamma.size();
    const i64 ns = G.N->size;
    if (G.m < 1 || (int)a.size() != G.m || (int)phi_gen_images.size() != G.m)
        throw std::invalid_argument("extension: table shapes disagree");
    for (int i = 0; i < G.m; ++i) {
        if ((int)gamma[i].size() != G.m || (int)a[i].size() != G.m)
            throw std::invalid_argument("extension: table shapes disagree");
        for (int j = 0; j < G.m; ++j) {
            if (gamma[i][j] < 0 || gamma[i][j] >= G.m)
                throw std::invalid_argument("extension: gamma entry out of range");
            if ((i64)a[i][j] >= ns)
                throw std::invalid_argument("extension: tail out of range");
        }
    }
    for (int j = 0; j < G.m; ++j) {
        if (gamma[0][j] != j || gamma[j][0] != j)
            throw std::invalid_argument("extension: index 1 must act as identity in gamma");
        if (a[0][j] != 0 || a[j][0] != 0)
            throw std::invalid_argument("extension: tails of the identity coset must be trivial");
    }
    // gamma rows and columns must be permutations (Q is a group).
    for (int i = 0; i < G.m; ++i) {
        std::set<int> row, col;
        for (int j = 0; j < G.m; ++j) { row.insert(gamma[i][j]); col.insert(gamma[j][i]); }
        if ((int)row.size() != G.m || (int)col.size() != G.m)
            throw std::invalid_argument("extension: gamma rows/columns are not permutations");
    }
    G.gam = std::move(gamma);
    G.a = std::move(a);

    // Conjugation automorphisms extended from generator images.
    G.phi_.assign((size_t)G.m, {});
    G.phi_inv_.assign((size_t)G.m, {});
    for (int i = 0; i < G.m; ++i) {
        std::vector<u32>& tab = G.phi_[i];
        tab.resize((size_t)ns);
        if (i == 0 || phi_gen_images[i].empty()) {
            for (i64 x = 0; x < ns; ++x) tab[(size_t)x] = (u32)x;
            if (i == 0 && !phi_gen_images[0].empty())
                throw std::invalid_argument("extension: phi_1 must be the identity");
        } else {
            if ((int)phi_gen_images[i].size() != G.N->d)
                throw std::invalid_argument("extension: phi needs one image per generator of N");
            std::vector<u32> gen_img(G.N->d);
            for (int g = 0; g < G.N->d; ++g) gen_img[g] = G.N->encode(phi_gen_images[i][g]);
            for (i64 x = 0; x < ns; ++x) {
                ExpVec e = G.N->decode((u32)x);
                u32 y = G.N->one();
                for (int g = 0; g < G.N->d; ++g)
                    for (i64 t = 0; t < e[g]; ++t) y = G.N->mul(y, gen_img[g]);
                tab[(size_t)x] = y;
            }
        }
        // Bijectivity, and homomorphism (exhaustive on small N).
        std::vector<char> hit((size_t)ns, 0);
        for (i64 x = 0; x < ns; ++x) {
            if (hit[tab[(size_t)x]])
                throw std::invalid_argument("extension: phi is not a bijection");
            hit[tab[(size_t)x]] = 1;
        }
        auto hom_check = [&](u32 x, u32 y) {
            if (tab[G.N->mul(x, y)] != G.N->mul(tab[x], tab[y]))
                throw std::invalid_argument("extension: phi is not a homomorphism");
        };
        if (ns <= 1024) {
            for (i64 x = 0; x < ns; ++x)
                for (i64 y = 0; y < ns; ++y) hom_check((u32)x, (u32)y);
        } else {
            std::mt19937 rng(0xFEED + (u32)i);
            for (int t = 0; t < 10000; ++t)
                hom_check(rng() % (u32)ns, rng() % (u32)ns);
        }
        G.phi_inv_[i].resize((size_t)ns);
        for (i64 x = 0; x < ns; ++x) G.phi_inv_[i][tab[(size_t)x]] = (u32)x;
    }

    // Compatibility: phi_gamma(i,j) o conj_{a_ij} = phi_i o phi_j.
    for (int i = 0; i < G.m; ++i)
        for (int j = 0; j < G.m; ++j) {
            u32 t = G.a[i][j];
            for (i64 x = 0; x < ns; ++x) {
                u32 cx = G.N->mul(G.N->mul(t, (u32)x), G.N->inv(t));
                if (G.phi_[G.gam[i][j]][cx] != G.phi_[i][G.phi_[j][(size_t)x]])
                    throw std::invalid_argument(
                        "extension: phi does not match gamma and the tails");
            }
        }

    // gamma-inverses, then kappa and d from the group law.
    G.top_inv.assign((size_t)G.m, -1);
    for (int i = 0; i < G.m; ++i)
        for (int j = 0; j < G.m; ++j)
            if (G.gam[i][j] == 0) G.top_inv[i] = j;
    for (int i = 0; i < G.m; ++i)
        if (G.top_inv[i] < 0) throw std::invalid_argument("extension: gamma has no inverses");
    G.kappa.assign((size_t)G.m, std::vector<int>((size_t)G.m));
    G.d.assign((size_t)G.m, std::vector<u32>((size_t)G.m));
    for (int i = 0; i < G.m; ++i)
        for (int j = 0; j < G.m; ++j) {
            u32 yi = G.code(i, 0), yj = G.code(j, 0);
            u32 z = G.mul(G.mul(G.inv(yi), yj), yi);
            G.kappa[i][j] = G.top_of(z);
            G.d[i][j] = G.tail_of(z);
        }

    // Associativity sweep on G.
    const i64 gs = G.order();
    auto check = [&](u32 x, u32 y, u32 z) {
        if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)))
            throw std::invalid_argument("extension: multiplication is not associative");
    };
    if (gs <= 243) {
        for (i64 x = 0; x < gs; ++x)
            for (i64 y = 0; y < gs; ++y)
                for (i64 z = 0; z < gs; ++z) check((u32)x, (u32)y, (u32)z);
    } else {
        std::mt19937 rng(0xBEEF);
        for (int t = 0; t < 10000; ++t)
            check(rng() % (u32)gs, rng() % (u32)gs, rng() % (u32)gs);
    }
    return G;
}

bool SubgroupG::contains_index(int i) const {
    return std::binary_search(idx.begin(), idx.end(), i);
}

std::vector<u32> SubgroupG::elements(const ExtGroup& G) const {
    std::vector<u32> out;
    out.reserve(idx.size() * (size_t)G.N->size);
    for (int i : idx)
        for (i64 n = 0; n < G.N->size; ++n) out.push_back(G.code(i, (u32)n));
    return out;
}

std::vector<SubgroupG> subgroups_over_N(const ExtGroup& G) {
    auto close_idx = [&](std::vector<int> s) {
        std::set<int> cur(s.begin(), s.end());
        cur.insert(0);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> v(cur.begin(), cur.end());
            for (int i : v)
                for (int j : v)
                    if (cur.insert(G.gam[i][j]).second) grew = true;
        }
        return std::vector<int>(cur.begin(), cur.end());
    };
    std::set<std::vector<int>> seen;
    seen.insert(close_idx({}));
    bool grew = true;
    while (grew) {
        grew = false;
        auto cur = seen;
        for (const auto& s : cur)
            for (int g = 0; g < G.m; ++g) {
                auto s2 = s;
                s2.push_back(g);
                if (seen.insert(close_idx(std::move(s2))).second) grew = true;
            }
    }
    std::vector<SubgroupG> out;
    for (auto& s : seen) out.push_back(SubgroupG{s});
    std::sort(out.begin(), out.end(), [](const SubgroupG& x, const SubgroupG& y) {
        if (x.idx.size() != y.idx.size()) return x.idx.size() > y.idx.size();
        return x.idx < y.idx;
    });
    return out;
}

SubgroupG sylow_p_part(const ExtGroup& G, const SubgroupG& K) {
    i64 p = G.N->p;
    i64 k = (i64)K.idx.size();
    i64 ppart = 1;
    while (k % p == 0) { ppart *= p; k /= p; }
    // subgroups_over_N is sorted, so the first hit is the canonical choice.
    for (const auto& S : subgroups_over_N(G)) {
        if ((i64)S.idx.size() != ppart) continue;
        bool inside = true;
        for (int i : S.idx) inside &= K.contains_index(i);
        if (inside) return S;
    }
    throw std::logic_error("sylow_p_part: no Sylow subgroup found");
}

std::vector<u32> sylow_q_part(const ExtGroup& G, const SubgroupG& K, i64 q) {
    if (q == G.N->p) throw std::invalid_argument("sylow_q_part: q must differ from p");
    i64 k = (i64)K.idx.size();
    i64 b = 0;
    while (k % q == 0) { k /= q; ++b; }
    if (b == 0) throw std::invalid_argument("sylow_q_part: q does not divide |K/N|");
    i64 qb = ipow(q, b);
    // The q-part of K is isomorphic to the q-part of K/N (N is a p-group);
    // find an element whose q-part has full order (cyclic q-part assumed).
    for (u32 g : K.elements(G)) {
        i64 o = G.order_of(g);
        i64 ov = 1;
        while (o % q == 0) { o /= q; ov *= q; }
        if (ov == qb) return closure(G, {G.pow(g, o)});
    }
    throw std::domain_error("sylow_q_part: q-part of K/N is not cyclic");
}

SubgroupH subgroup_h_from_elements(const ExtGroup& G,
                                   const std::vector<std::vector<u32>>& series,
                                   std::vector<u32> elems,
                                   const TransversalChooser& chooser) {
    SubgroupH H;
    std::map<int, std::vector<u32>> by_top;
    for (u32 g : elems) by_top[G.top_of(g)].push_back(G.tail_of(g));
    for (auto& [i, tails] : by_top) {
        std::sort(tails.begin(), tails.end());
        H.idx.push_back(i);
        if (i == 0)
            H.tails.push_back(G.N->one());
        else
            H.tails.push_back(chooser ? chooser(tails) : tails.front());
    }
    H.M = make_subgroup(*G.N, series, by_top.at(0));
    std::sort(elems.begin(), elems.end());
    H.elems = std::move(elems);
    if (H.elems.size() != H.M.elems.size() * H.idx.size())
        throw std::logic_error("subgroup_h_from_elements: cosets are not uniform");
    return H;
}

std::vector<SubgroupH> enumerate_HH(const ExtGroup& G, const SubgroupG& K_p,
                                    const TransversalChooser& chooser) {
    auto series = lower_p_series(*G.N, G.N->elements(), G.N->p);
    auto covers = [&](const std::vector<u32>& elems) {
        std::set<int> tops;
        for (u32 g : elems) tops.insert(G.top_of(g));
        return (i64)tops.size() == (i64)K_p.idx.size();
    };
    auto lists = p_subgroup_descent(G, K_p.elements(G), G.N->p, INT64_MAX, covers);
    std::vector<SubgroupH> out;
    out.reserve(lists.size());
    for (auto& elems : lists)
        out.push_back(subgroup_h_from_elements(G, series, std::move(elems), chooser));
    std::sort(out.begin(), out.end(), [](const SubgroupH& x, const SubgroupH& y) {
        if (x.elems.size() != y.elems.size()) return x.elems.size() > y.elems.size();
        return x.elems < y.elems;
    });
    return out;
}

}  // namespace repzeta
