#include "repzeta/groupview.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repzeta {

u32 IGroup::pow(u32 x, i64 k) const {
    if (k < 0) { x = inv(x); k = -k; }
    u32 r = one();
    while (k-- > 0) r = mul(r, x);
    return r;
}

i64 IGroup::order_of(u32 x) const {
    i64 n = 1;
    u32 y = x;
    while (y != one()) { y = mul(y, x); ++n; }
    return n;
}

bool contains(const std::vector<u32>& sorted_set, u32 x) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

std::vector<u32> closure(const IGroup& G, const std::vector<u32>& gens) {
    std::vector<char> seen(G.code_bound(), 0);
    std::vector<u32> out = {G.one()};
    seen[G.one()] = 1;
    for (size_t head = 0; head < out.size(); ++head)
        for (u32 g : gens) {
            u32 y = G.mul(out[head], g);
            if (!seen[y]) { seen[y] = 1; out.push_back(y); }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u32> conj_subgroup(const IGroup& G, u32 g, const std::vector<u32>& H) {
    std::vector<u32> out;
    out.reserve(H.size());
    for (u32 h : H) out.push_back(G.conj(g, h));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u32> small_generating_set(const IGroup& G, const std::vector<u32>& H) {
    std::vector<u32> gens;
    std::vector<u32> cur = {G.one()};
    for (u32 h : H) {
        if (contains(cur, h)) continue;
        gens.push_back(h);
        cur = closure(G, gens);
        if (cur.size() == H.size()) break;
    }
    return gens;
}

/** Greedy small generating set of a subgroup given by its elements. */
static std::vector<u32> small_gens(const IGroup& G, const std::vector<u32>& H) {
    return small_generating_set(G, H);
}

std::vector<u32> center_of(const IGroup& G, const std::vector<u32>& S) {
    auto gens = small_generating_set(G, S);
    std::vector<u32> out;
    for (u32 x : S) {
        bool central = true;
        for (u32 g : gens)
            if (G.mul(x, g) != G.mul(g, x)) { central = false; break; }
        if (central) out.push_back(x);
    }
    return out;  // S is sorted, so the filter is too
}

/** Closure of seeds under the group operation and conjugation by conj_gens. */
static std::vector<u32> normal_closure(const IGroup& G, std::vector<u32> seeds,
                                       const std::vector<u32>& conj_gens) {
    std::vector<u32> cur = closure(G, seeds);
    for (;;) {
        bool grew = false;
        for (u32 s : seeds)
            for (u32 c : conj_gens) {
                u32 y = G.conj(c, s);
                if (!contains(cur, y)) {
                    seeds.push_back(y);
                    cur = closure(G, seeds);
                    grew = true;
                }
            }
        if (!grew) return cur;
    }
}

std::vector<u32> derived_subgroup(const IGroup& G, const std::vector<u32>& H) {
    auto gens = small_gens(G, H);
    std::vector<u32> seeds;
    for (u32 a : gens)
        for (u32 b : gens)
            if (a != b) seeds.push_back(G.commutator(a, b));
    return normal_closure(G, std::move(seeds), gens);
}

std::vector<u32> power_commutator_step(const IGroup& G, const std::vector<u32>& H,
                                       const std::vector<u32>& K, i64 p) {
    auto hg = small_gens(G, H);
    auto kg = small_gens(G, K);
    std::vector<u32> seeds;
    for (u32 h : hg) seeds.push_back(G.pow(h, p));
    for (u32 h : hg)
        for (u32 k : kg) seeds.push_back(G.commutator(h, k));
    std::vector<u32> conj_gens = kg;
    conj_gens.insert(conj_gens.end(), hg.begin(), hg.end());
    return normal_closure(G, std::move(seeds), conj_gens);
}

QZ AbelianDual::eval(size_t idx, u32 x) const { return eval_values(chars[idx], x); }

QZ AbelianDual::eval_values(const std::vector<QZ>& vals, u32 x) const {
    auto it = coset_rep.find(x);
    if (it == coset_rep.end()) throw std::invalid_argument("AbelianDual: element outside domain");
    const auto& lg = logs.at(it->second);
    QZ v(0, 1);
    for (size_t j = 0; j < vals.size(); ++j)
        if (lg[j]) v = v + vals[j] * lg[j];
    return v;
}

AbelianDual abelian_dual(const IGroup& G, const std::vector<u32>& S,
                         const std::vector<u32>& D,
                         const std::vector<u32>& gens_hint) {
    AbelianDual dual;
    // Coset representatives (minimum code in each coset of D).
    for (u32 s : S) {
        if (dual.coset_rep.count(s)) continue;
        std::vector<u32> coset;
        for (u32 d : D) coset.push_back(G.mul(s, d));
        u32 rep = *std::min_element(coset.begin(), coset.end());
        for (u32 c : coset) dual.coset_rep[c] = rep;
    }
    auto rep_mul = [&](u32 a, u32 b) { return dual.coset_rep.at(G.mul(a, b)); };
    u32 id = dual.coset_rep.at(G.one());

    std::set<u32> cur = {id};
    dual.logs[id] = {};
    std::vector<u32> candidates = gens_hint;
    for (auto& [c, rep] : dual.coset_rep)
        if (c == rep) candidates.push_back(rep);
    for (u32 cand : candidates) {
        u32 g = dual.coset_rep.at(cand);
        if (cur.count(g)) continue;
        // Relative order: least q >= 1 with g^q in the current subgroup.
        i64 q = 1;
        u32 gp = g;
        while (!cur.count(gp)) { gp = rep_mul(gp, g); ++q; }
        // Extend logs: every new element is (old) * g^i uniquely, 0 <= i < q.
        std::map<u32, std::vector<i64>> next_logs;
        std::set<u32> next;
        for (u32 c : cur) {
            u32 e = c;
            for (i64 i = 0; i < q; ++i) {
                auto lg = dual.logs.at(c);
                lg.push_back(i);
                if (!next.insert(e).second)
                    throw std::logic_error("abelian_dual: section is not abelian");
                next_logs[e] = std::move(lg);
                if (i + 1 < q) e = rep_mul(e, g);
            }
        }
        dual.gens.push_back(g);
        dual.rel_orders.push_back(q);
        dual.logs = std::move(next_logs);
        cur = std::move(next);
    }
    // Sanity: the generators exhaust the section.
    size_t nreps = 0;
    for (auto& [c, rep] : dual.coset_rep) nreps += c == rep;
    if (cur.size() != nreps)
        throw std::logic_error("abelian_dual: generators do not span the section");

    // Enumerate all characters by extending one generator at a time.
    dual.chars = {{}};
    for (size_t j = 0; j < dual.gens.size(); ++j) {
        i64 q = dual.rel_orders[j];
        // chi(g_j) must solve q * v = chi(g_j^q); g_j^q lies in the span of
        // earlier generators, so it evaluates with the partial value vector.
        u32 gq = id;
        for (i64 i = 0; i < q; ++i) gq = rep_mul(gq, dual.gens[j]);
        std::vector<std::vector<QZ>> next_chars;
        for (auto& vals : dual.chars) {
            std::vector<QZ> padded = vals;
            padded.resize(dual.gens.size(), QZ(0, 1));
            QZ target = dual.eval_values(padded, gq);
            for (i64 i = 0; i < q; ++i) {
                auto ext = vals;
                ext.push_back(QZ(target.a + i * target.n, target.n * q));
                next_chars.push_back(std::move(ext));
            }
        }
        dual.chars = std::move(next_chars);
    }
    return dual;
}

}  // namespace repzeta
