#include "repzeta/subgroups.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace repzeta {

std::vector<std::vector<u32>> lower_p_series(const IGroup& G,
                                             const std::vector<u32>& N, i64 p) {
    std::vector<std::vector<u32>> terms = {N};
    while (terms.back().size() > 1) {
        auto next = power_commutator_step(G, terms.back(), N, p);
        if (next.size() >= terms.back().size())
            throw std::logic_error("lower p-series did not descend");
        terms.push_back(std::move(next));
    }
    return terms;
}

i64 omega_of(const std::vector<std::vector<u32>>& series, u32 x, u32 identity) {
    if (x == identity) return OMEGA_INF;
    i64 w = 0;
    for (size_t i = 0; i < series.size(); ++i)
        if (contains(series[i], x)) w = (i64)i + 1;
    if (w == 0) throw std::invalid_argument("omega_of: element outside N");
    return w;
}

std::vector<u32> intersect_sorted(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<u32> good_basis(const PcGroupN& N,
                            const std::vector<std::vector<u32>>& series,
                            const std::vector<u32>& M) {
    auto lex_less = [&](u32 a, u32 b) { return N.decode(a) < N.decode(b); };
    std::vector<u32> basis;
    for (size_t i = 0; i + 1 <= series.size(); ++i) {
        std::vector<u32> layer = intersect_sorted(M, series[i]);
        std::vector<u32> deeper =
            i + 1 < series.size() ? intersect_sorted(M, series[i + 1]) : std::vector<u32>{N.one()};
        // Candidates sorted by exponent-vector lex order for the tie-break.
        std::vector<u32> cand = layer;
        std::sort(cand.begin(), cand.end(), lex_less);
        std::vector<u32> chosen;
        std::vector<u32> span = deeper;
        for (u32 h : cand) {
            if (chosen.size() && span.size() == layer.size()) break;
            if (contains(span, h)) continue;
            chosen.push_back(h);
            std::vector<u32> gens = chosen;
            gens.insert(gens.end(), deeper.begin(), deeper.end());
            span = closure(N, gens);
        }
        if (span.size() != layer.size() && !(layer.size() == 1 && span.size() == 1))
            throw std::logic_error("good_basis: layer span mismatch");
        basis.insert(basis.end(), chosen.begin(), chosen.end());
    }
    return basis;
}

SubgroupOfN make_subgroup(const PcGroupN& N,
                          const std::vector<std::vector<u32>>& series,
                          std::vector<u32> elems) {
    SubgroupOfN S;
    S.basis = good_basis(N, series, elems);
    for (u32 h : S.basis) S.basis_mat.push_back(N.decode(h));
    S.elems = std::move(elems);
    return S;
}

std::vector<std::vector<u32>> p_subgroup_descent(
    const IGroup& G, const std::vector<u32>& top, i64 p, i64 max_index,
    const std::function<bool(const std::vector<u32>&)>& branch_ok) {
    std::map<std::vector<u32>, char> seen;
    std::vector<std::vector<u32>> out;
    std::vector<std::vector<u32>> queue = {top};
    while (!queue.empty()) {
        auto elems = std::move(queue.back());
        queue.pop_back();
        i64 index = (i64)top.size() / (i64)elems.size();
        if (index > max_index) continue;
        if (!seen.emplace(elems, 1).second) continue;
        if (branch_ok && !branch_ok(elems)) continue;
        out.push_back(elems);
        if (index * p > max_index || elems.size() == 1) continue;
        // Maximal subgroups: preimages of hyperplanes modulo Frattini.
        auto frat = power_commutator_step(G, elems, elems, p);
        auto dual = abelian_dual(G, elems, frat);
        size_t r = dual.gens.size();
        for (i64 q : dual.rel_orders)
            if (q != p) throw std::logic_error("Frattini quotient not elementary abelian");
        // Functionals over F_p with leading coefficient 1 (one per hyperplane).
        std::vector<i64> f(r, 0);
        for (size_t lead = 0; lead < r; ++lead) {
            i64 tail = ipow(p, (i64)(r - lead - 1));
            for (i64 code = 0; code < tail; ++code) {
                std::fill(f.begin(), f.end(), 0);
                f[lead] = 1;
                i64 t = code;
                for (size_t j = lead + 1; j < r; ++j) { f[j] = t % p; t /= p; }
                std::vector<u32> M;
                for (u32 h : elems) {
                    const auto& lg = dual.logs.at(dual.coset_rep.at(h));
                    i64 s = 0;
                    for (size_t j = 0; j < r; ++j) s += f[j] * lg[j];
                    if (s % p == 0) M.push_back(h);
                }
                queue.push_back(std::move(M));
            }
        }
    }
    return out;
}

std::vector<SubgroupOfN> enumerate_subgroups_of_N(const PcGroupN& N, i64 max_index) {
    auto series = lower_p_series(N, N.elements(), N.p);
    auto lists = p_subgroup_descent(N, N.elements(), N.p, max_index, nullptr);
    std::vector<SubgroupOfN> out;
    out.reserve(lists.size());
    for (auto& elems : lists) out.push_back(make_subgroup(N, series, std::move(elems)));
    std::sort(out.begin(), out.end(), [](const SubgroupOfN& a, const SubgroupOfN& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() > b.elems.size();
        return a.basis_mat < b.basis_mat;
    });
    return out;
}

}  // namespace repzeta
