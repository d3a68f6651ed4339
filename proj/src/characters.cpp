/**
 * @file characters.cpp
 * @brief Pair calculus for monomial characters of N (see characters.hpp).
 */
#include "repzeta/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace repzeta {

bool operator<(const NPair& a, const NPair& b) {
    // Degree ascending (= |M| descending), then canonical subgroup key,
    // then the character values on the good basis.
    if (a.M.elems.size() != b.M.elems.size())
        return a.M.elems.size() > b.M.elems.size();
    if (a.M.basis_mat != b.M.basis_mat) return a.M.basis_mat < b.M.basis_mat;
    return a.xi < b.xi;
}

bool operator==(const NPair& a, const NPair& b) {
    return a.M.basis_mat == b.M.basis_mat && a.xi == b.xi;
}

NContext::NContext(std::shared_ptr<const ExtGroup> Gp) : G_(std::move(Gp)) {
    const PcGroupN& N = *G_->N;
    series_ = lower_p_series(N, N.elements(), N.p);
}

int NContext::subgroup_id(const SubgroupOfN& M) const {
    auto it = sub_ids_.find(M.basis_mat);
    if (it != sub_ids_.end()) return it->second;
    int id = (int)sub_ids_.size();
    sub_ids_.emplace(M.basis_mat, id);
    return id;
}

const AbelianDual& NContext::dual_of(const SubgroupOfN& M) const {
    int id = subgroup_id(M);
    auto it = duals_.find(id);
    if (it != duals_.end()) return it->second;
    const PcGroupN& N = this->N();
    AbelianDual dual =
        abelian_dual(N, M.elems, derived_subgroup(N, M.elems), M.basis);
    return duals_.emplace(id, std::move(dual)).first->second;
}

std::vector<NPair> NContext::lin_chars(const SubgroupOfN& M) const {
    const AbelianDual& dual = dual_of(M);
    std::vector<NPair> out;
    out.reserve(dual.chars.size());
    for (const auto& dv : dual.chars) {
        NPair pr{M, {}, dv};
        pr.xi.reserve(M.basis.size());
        for (u32 b : M.basis) pr.xi.push_back(dual.eval_values(dv, b));
        out.push_back(std::move(pr));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QZ NContext::eval(const NPair& pair, u32 m) const {
    return dual_of(pair.M).eval_values(pair.dvals, m);
}

NPair NContext::conj_pair(u32 g, const NPair& pair) const {
    const ExtGroup& G = *G_;
    const PcGroupN& N = this->N();
    std::vector<u32> elems;
    elems.reserve(pair.M.elems.size());
    for (u32 x : pair.M.elems) {
        u32 c = G.conj(g, G.code(0, x));
        if (G.top_of(c) != 0) throw std::logic_error("conj_pair: N not normal");
        elems.push_back(G.tail_of(c));
    }
    std::sort(elems.begin(), elems.end());
    NPair out{make_subgroup(N, series_, std::move(elems)), {}, {}};
    u32 gi = G.inv(g);
    auto back_val = [&](u32 x) {  // chi(g^{-1} x g)
        return eval(pair, G.tail_of(G.conj(gi, G.code(0, x))));
    };
    const AbelianDual& dual = dual_of(out.M);
    for (u32 gen : dual.gens) out.dvals.push_back(back_val(gen));
    for (u32 b : out.M.basis) out.xi.push_back(back_val(b));
    return out;
}

bool NContext::is_invariant(const SubgroupH& H, const NPair& pair) const {
    const ExtGroup& G = *G_;
    for (size_t s = 0; s < H.idx.size(); ++s) {
        u32 h = G.code(H.idx[s], H.tails[s]);
        for (u32 x : pair.M.basis) {
            u32 c = G.conj(h, G.code(0, x));
            u32 cx = G.tail_of(c);
            if (!contains(pair.M.elems, cx)) return false;
            if (!(eval(pair, cx) == eval(pair, x))) return false;
        }
    }
    return true;
}

std::vector<u32> NContext::coset_reps(const SubgroupOfN& M) const {
    int id = subgroup_id(M);
    auto it = reps_.find(id);
    if (it != reps_.end()) return it->second;
    const PcGroupN& N = this->N();
    std::vector<char> seen((size_t)N.size, 0);
    std::vector<u32> reps;
    for (u32 g = 0; g < (u32)N.size; ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (u32 m : M.elems) seen[N.mul(g, m)] = 1;  // left coset g M
    }
    reps_.emplace(id, reps);
    return reps;
}

const NContext::IntersectionData& NContext::intersection_data(
    const NPair& a, const NPair& b, u32 g) const {
    auto key = std::make_tuple(subgroup_id(a.M), subgroup_id(b.M), g);
    auto it = inter_.find(key);
    if (it != inter_.end()) return it->second;
    const PcGroupN& N = this->N();
    IntersectionData data;
    std::vector<u32> conj_a = conj_subgroup(N, g, a.M.elems);
    std::vector<u32> inter = intersect_sorted(conj_a, b.M.elems);
    data.gens = good_basis(N, series_, inter);
    u32 gi = N.inv(g);
    for (u32 x : data.gens) data.gens_back.push_back(N.conj(gi, x));
    return inter_.emplace(key, std::move(data)).first->second;
}

bool NContext::induces_irreducibly(const NPair& pair) const {
    for (u32 g : coset_reps(pair.M)) {
        if (g == 0) continue;  // the M-coset itself
        const IntersectionData& data = intersection_data(pair, pair, g);
        bool agrees = true;
        for (size_t t = 0; t < data.gens.size() && agrees; ++t)
            agrees = eval(pair, data.gens_back[t]) == eval(pair, data.gens[t]);
        if (agrees) return false;  // ^g chi meets chi => Ind reducible
    }
    return true;
}

bool NContext::induced_equal(const NPair& a, const NPair& b) const {
    if (a.M.elems.size() != b.M.elems.size()) return false;
    if (a == b) return true;
    for (u32 g : coset_reps(a.M)) {
        const IntersectionData& data = intersection_data(a, b, g);
        bool agrees = true;
        for (size_t t = 0; t < data.gens.size() && agrees; ++t)
            agrees = eval(a, data.gens_back[t]) == eval(b, data.gens[t]);
        if (agrees) return true;
    }
    return false;
}

std::optional<size_t> NContext::induced_twist_equal(
    const NPair& a, const NPair& b, const std::vector<size_t>* psi_order) const {
    if (a.M.elems.size() != b.M.elems.size()) return std::nullopt;
    const ExtGroup& G = *G_;
    size_t count = lin_G_count();
    for (size_t t = 0; t < count; ++t) {
        size_t psi = psi_order ? (*psi_order)[t] : t;
        for (u32 g : coset_reps(a.M)) {
            const IntersectionData& data = intersection_data(a, b, g);
            bool agrees = true;
            for (size_t k = 0; k < data.gens.size() && agrees; ++k) {
                QZ lhs = eval(a, data.gens_back[k]) +
                         psi_eval(psi, G.code(0, data.gens[k]));
                agrees = lhs == eval(b, data.gens[k]);
            }
            if (agrees) return psi;
        }
    }
    return std::nullopt;
}

const AbelianDual& NContext::g_dual() const {
    if (!gdual_) {
        const ExtGroup& G = *G_;
        std::vector<u32> all = G.elements();
        gdual_ = abelian_dual(G, all, derived_subgroup(G, all));
    }
    return *gdual_;
}

SubgroupG NContext::stabilizer_K(const NPair& pair) const {
    SubgroupG out;
    for (int i = 0; i < G_->m; ++i)
        if (induced_equal(conj_pair(G_->code(i, 0), pair), pair))
            out.idx.push_back(i);
    return out;
}

SubgroupG NContext::stabilizer_L(const NPair& pair) const {
    SubgroupG out;
    for (int i = 0; i < G_->m; ++i)
        if (induced_twist_equal(conj_pair(G_->code(i, 0), pair), pair))
            out.idx.push_back(i);
    return out;
}

i64 NContext::degree_exponent(const NPair& pair) const {
    i64 index = N().size / (i64)pair.M.elems.size();
    i64 f = 0;
    while (index > 1) {
        index /= N().p;
        ++f;
    }
    return f;
}

bool NContext::twist_related(const NPair& a, const NPair& b) const {
    if (induced_twist_equal(a, b)) return true;  // identity coset: ^1 a = a
    for (int i = 1; i < G_->m; ++i)
        if (induced_twist_equal(conj_pair(G_->code(i, 0), a), b)) return true;
    return false;
}

std::vector<QZ> NContext::central_orbit_key(const std::vector<u32>& zbasis,
                                            const NPair& pair) const {
    const ExtGroup& G = *G_;
    size_t linc = lin_G_count();
    std::vector<QZ> best;
    for (int i = 0; i < G.m; ++i) {
        u32 yi_inv = G.inv(G.code(i, 0));
        std::vector<QZ> base;
        base.reserve(zbasis.size());
        for (u32 z : zbasis)
            base.push_back(eval(pair, G.tail_of(G.conj(yi_inv, G.code(0, z)))));
        for (size_t psi = 0; psi < linc; ++psi) {
            std::vector<QZ> v = base;
            for (size_t t = 0; t < zbasis.size(); ++t)
                v[t] = v[t] + psi_eval(psi, G.code(0, zbasis[t]));
            if (best.empty() || v < best) best = std::move(v);
        }
    }
    return best;
}

std::vector<std::vector<size_t>> NContext::twist_classes() const {
    const auto& irr = irr_pairs();
    const PcGroupN& N = this->N();
    std::vector<u32> zbasis = good_basis(N, series_, center_of(N, N.elements()));
    // Twist-related pairs have equal degree and central characters in one
    // orbit under transversal conjugation and Lin(G)-restriction (both act
    // as groups on Z(N)^), so (|M|, canonical orbit minimum) buckets the
    // relation and comparisons run within buckets only.
    std::vector<std::vector<size_t>> out;
    std::map<std::pair<size_t, std::vector<QZ>>, std::vector<size_t>> buckets;
    for (size_t i = 0; i < irr.size(); ++i) {
        auto key = std::make_pair(irr[i].M.elems.size(),
                                  central_orbit_key(zbasis, irr[i]));
        auto& bucket = buckets[key];
        bool found = false;
        for (size_t c : bucket)
            if (twist_related(irr[out[c][0]], irr[i])) {
                out[c].push_back(i);
                found = true;
                break;
            }
        if (!found) {
            bucket.push_back(out.size());
            out.push_back({i});
        }
    }
    return out;
}

const std::vector<NPair>& NContext::irr_pairs() const {
    if (irr_) return *irr_;
    const PcGroupN& N = this->N();
    // Z(N) <= M for every pair inducing irreducibly: the induced character
    // theta has |theta(z)| = theta(1) on the centre, while the induction
    // formula gives theta(z) = 0 for central z outside M.  Together with
    // deg^2 <= |N : Z(N)| this bounds the index by sqrt(|N : Z(N)|).
    std::vector<u32> Z = center_of(N, N.elements());
    std::vector<u32> zbasis = good_basis(N, series_, Z);
    i64 max_index = 1;
    while (max_index * N.p * (max_index * N.p) * (i64)Z.size() <= N.size)
        max_index *= N.p;
    auto contains_centre = [&](const std::vector<u32>& S) {
        for (u32 z : zbasis)
            if (!contains(S, z)) return false;
        return true;
    };
    std::vector<NPair> candidates;
    for (auto& elems :
         p_subgroup_descent(N, N.elements(), N.p, max_index, contains_centre)) {
        SubgroupOfN M = make_subgroup(N, series_, std::move(elems));
        for (auto& pr : lin_chars(M))
            if (induces_irreducibly(pr)) candidates.push_back(std::move(pr));
    }
    std::sort(candidates.begin(), candidates.end());
    // Equal induced characters share |M| and the central character chi|_Z(N)
    // (theta|_Z = |N:M| chi|_Z), so deduplication runs within such buckets.
    std::vector<NPair> reps;
    std::map<std::pair<size_t, std::vector<QZ>>, std::vector<size_t>> buckets;
    for (auto& c : candidates) {
        std::vector<QZ> zvals;
        zvals.reserve(zbasis.size());
        for (u32 z : zbasis) zvals.push_back(eval(c, z));
        auto& bucket = buckets[{c.M.elems.size(), std::move(zvals)}];
        bool fresh = true;
        for (size_t ri : bucket)
            if (induced_equal(reps[ri], c)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(reps.size());
            reps.push_back(std::move(c));
        }
    }
    i64 sum = 0;
    for (const auto& r : reps) {
        i64 deg = N.size / (i64)r.M.elems.size();
        sum += deg * deg;
    }
    if (sum != N.size)
        throw std::logic_error("irr_pairs: sum of squared degrees != |N|");
    irr_ = std::move(reps);
    return *irr_;
}

}  // namespace repzeta
