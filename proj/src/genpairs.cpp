/**
 * @file genpairs.cpp
 * @brief Monomial pair calculus in an arbitrary finite group (genpairs.hpp).
 */
#include "repzeta/genpairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repzeta {

GPairCtx::GPairCtx(const IGroup& G, std::vector<u32> elems)
    : G_(&G), elems_(std::move(elems)) {
    if (!std::is_sorted(elems_.begin(), elems_.end()))
        std::sort(elems_.begin(), elems_.end());
}

std::vector<std::vector<u32>> GPairCtx::subgroups_p(
    i64 p, i64 max_index, const std::vector<u32>& floor) const {
    auto ok = [&floor](const std::vector<u32>& S) {
        for (u32 x : floor)
            if (!contains(S, x)) return false;
        return true;
    };
    return p_subgroup_descent(*G_, elems_, p, max_index, ok);
}

std::vector<std::vector<u32>> GPairCtx::subgroups_all() const {
    std::set<std::vector<u32>> seen;
    std::vector<std::vector<u32>> work;
    std::vector<u32> triv{G_->one()};
    seen.insert(triv);
    work.push_back(triv);
    while (!work.empty()) {
        std::vector<u32> S = std::move(work.back());
        work.pop_back();
        for (u32 g : elems_) {
            if (contains(S, g)) continue;
            std::vector<u32> gens = S;
            gens.push_back(g);
            std::vector<u32> T = closure(*G_, gens);
            if (seen.insert(T).second) work.push_back(T);
        }
    }
    std::vector<std::vector<u32>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

int GPairCtx::sub_id(const std::vector<u32>& P) const {
    auto it = ids_.find(P);
    if (it != ids_.end()) return it->second;
    int id = (int)ids_.size();
    ids_.emplace(P, id);
    return id;
}

const AbelianDual& GPairCtx::dual_of(const std::vector<u32>& P) const {
    int id = sub_id(P);
    auto it = duals_.find(id);
    if (it != duals_.end()) return it->second;
    AbelianDual dual = abelian_dual(*G_, P, derived_subgroup(*G_, P));
    return duals_.emplace(id, std::move(dual)).first->second;
}

std::vector<GPair> GPairCtx::lin_chars(const std::vector<u32>& P) const {
    const AbelianDual& dual = dual_of(P);
    std::vector<GPair> out;
    out.reserve(dual.chars.size());
    for (const auto& dv : dual.chars) out.push_back(GPair{P, dv});
    std::sort(out.begin(), out.end(),
              [](const GPair& a, const GPair& b) { return a.dvals < b.dvals; });
    return out;
}

QZ GPairCtx::eval(const GPair& pair, u32 x) const {
    return dual_of(pair.P).eval_values(pair.dvals, x);
}

i64 GPairCtx::degree(const GPair& pair) const {
    return (i64)elems_.size() / (i64)pair.P.size();
}

const std::vector<u32>& GPairCtx::coset_reps(const std::vector<u32>& P) const {
    int id = sub_id(P);
    auto it = reps_.find(id);
    if (it != reps_.end()) return it->second;
    std::vector<u32> reps;
    std::set<u32> seen;
    for (u32 g : elems_) {
        if (seen.count(g)) continue;
        reps.push_back(g);
        for (u32 x : P) seen.insert(G_->mul(g, x));  // left coset g P
    }
    return reps_.emplace(id, std::move(reps)).first->second;
}

const GPairCtx::IntersectionData& GPairCtx::intersection_data(
    const std::vector<u32>& Pa, const std::vector<u32>& Pb, u32 g) const {
    auto key = std::make_tuple(sub_id(Pa), sub_id(Pb), g);
    auto it = inter_.find(key);
    if (it != inter_.end()) return it->second;
    IntersectionData data;
    std::vector<u32> inter =
        intersect_sorted(conj_subgroup(*G_, g, Pa), Pb);
    data.gens = small_generating_set(*G_, inter);
    u32 gi = G_->inv(g);
    for (u32 x : data.gens) data.gens_back.push_back(G_->conj(gi, x));
    return inter_.emplace(key, std::move(data)).first->second;
}

bool GPairCtx::induces_irreducibly(const GPair& pair) const {
    for (u32 g : coset_reps(pair.P)) {
        if (contains(pair.P, g)) continue;  // the P-coset itself
        const IntersectionData& data = intersection_data(pair.P, pair.P, g);
        bool agrees = true;
        for (size_t t = 0; t < data.gens.size() && agrees; ++t)
            agrees = eval(pair, data.gens_back[t]) == eval(pair, data.gens[t]);
        if (agrees) return false;  // ^g mu meets mu => Ind reducible
    }
    return true;
}

bool GPairCtx::induced_equal(const GPair& a, const GPair& b,
                             const AmbientChar* twist) const {
    if (a.P.size() != b.P.size()) return false;
    for (u32 g : coset_reps(a.P)) {
        const IntersectionData& data = intersection_data(a.P, b.P, g);
        bool agrees = true;
        for (size_t t = 0; t < data.gens.size() && agrees; ++t) {
            // twist is a class function, so twist(g^-1 x g) = twist(x).
            QZ lhs = eval(a, data.gens_back[t]);
            if (twist) lhs = lhs + (*twist)(data.gens[t]);
            agrees = lhs == eval(b, data.gens[t]);
        }
        if (agrees) return true;
    }
    return false;
}

bool GPairCtx::lies_over(const GPair& lam, const std::vector<u32>& M,
                         const AmbientChar& chi) const {
    for (u32 g : coset_reps(lam.P)) {
        const IntersectionData& data = intersection_data(lam.P, M, g);
        bool agrees = true;
        for (size_t t = 0; t < data.gens.size() && agrees; ++t)
            agrees = eval(lam, data.gens_back[t]) == chi(data.gens[t]);
        if (agrees) return true;  // <^g mu, chi> != 0 on ^gP cap M
    }
    return false;
}

std::vector<GPair> GPairCtx::irr_from(
    const std::vector<std::vector<u32>>& subs) const {
    std::vector<GPair> candidates;
    for (const auto& P : subs)
        for (auto& pr : lin_chars(P))
            if (induces_irreducibly(pr)) candidates.push_back(std::move(pr));
    std::sort(candidates.begin(), candidates.end(),
              [](const GPair& a, const GPair& b) {
                  if (a.P.size() != b.P.size()) return a.P.size() > b.P.size();
                  if (a.P != b.P) return a.P < b.P;
                  return a.dvals < b.dvals;
              });
    std::vector<GPair> reps;
    for (auto& c : candidates) {
        bool fresh = true;
        for (const auto& r : reps) {
            if (r.P.size() != c.P.size()) continue;
            if (induced_equal(r, c)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(std::move(c));
    }
    return reps;
}

}  // namespace repzeta
