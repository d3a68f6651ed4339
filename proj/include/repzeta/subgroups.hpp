#pragma once
/**
 * @file subgroups.hpp
 * @brief Lower p-series, good bases, and subgroup enumeration inside a
 *        pc-presented p-group N.
 *
 * The lower p-series N = N_1 >= N_2 >= ... (N_{i+1} = N_i^p [N_i, N]) has
 * elementary abelian layers.  The weight omega(x) is the largest i with
 * x in N_i (infinite for the identity).  A good basis of a subgroup M is a
 * deterministic polycyclic sequence ordered by omega: per layer, greedily
 * take the element of M cap N_i with lexicographically smallest exponent
 * vector that enlarges the span of what was already chosen together with
 * M cap N_{i+1}.  Its matrix of exponent vectors is the canonical key used
 * to deduplicate subgroups.
 */

#include <functional>
#include <vector>

#include "repzeta/pcgroup.hpp"

namespace repzeta {

constexpr i64 OMEGA_INF = INT64_MAX;

/** Terms N_1 = N, N_2, ..., down to and including the trivial subgroup. */
std::vector<std::vector<u32>> lower_p_series(const IGroup& G,
                                             const std::vector<u32>& N, i64 p);

/** omega(x) = max { i : x in N_i }, with omega(1) = OMEGA_INF. */
i64 omega_of(const std::vector<std::vector<u32>>& series, u32 x, u32 identity);

/** Intersection of two sorted code vectors. */
std::vector<u32> intersect_sorted(const std::vector<u32>& a, const std::vector<u32>& b);

/** Subgroup of N with its good basis and canonical key. */
struct SubgroupOfN {
    std::vector<u32> elems;          ///< sorted element codes
    std::vector<u32> basis;          ///< good basis, ordered by omega
    std::vector<ExpVec> basis_mat;   ///< exponent vectors of the basis (canonical key)
};

std::vector<u32> good_basis(const PcGroupN& N,
                            const std::vector<std::vector<u32>>& series,
                            const std::vector<u32>& M);

SubgroupOfN make_subgroup(const PcGroupN& N,
                          const std::vector<std::vector<u32>>& series,
                          std::vector<u32> elems);

/**
 * All subgroups of N with index <= max_index (default: all), deduplicated by
 * canonical key, via top-down descent through maximal subgroups (preimages
 * of hyperplanes modulo the Frattini subgroup).
 */
std::vector<SubgroupOfN> enumerate_subgroups_of_N(const PcGroupN& N,
                                                  i64 max_index = INT64_MAX);

/**
 * Generic top-down subgroup enumeration inside a finite p-group given as an
 * element set of an ambient group: descend through maximal subgroups
 * (hyperplane preimages modulo Frattini), deduplicating by element set.
 * Branches where @p branch_ok fails are neither emitted nor descended
 * (sound for monotone predicates), as are branches of index > max_index.
 */
std::vector<std::vector<u32>> p_subgroup_descent(
    const IGroup& G, const std::vector<u32>& top, i64 p, i64 max_index,
    const std::function<bool(const std::vector<u32>&)>& branch_ok);

}  // namespace repzeta
