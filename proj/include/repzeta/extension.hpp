#pragma once
/**
 * @file extension.hpp
 * @brief Finite groups G given as extensions 1 -> N -> G -> Q -> 1 with a
 *        fixed transversal.
 *
 * G is described over a pc-presented p-group N by a transversal
 * y_1 = 1, y_2, ..., y_m of N in G together with:
 *   - the quotient multiplication table gamma: y_i y_j in y_gamma(i,j) N,
 *   - the tails a_ij in N with y_i y_j = y_gamma(i,j) a_ij,
 *   - the conjugation automorphisms phi_i(n) = y_i n y_i^{-1}.
 * Elements are coded as i * |N| + n.  The derived data kappa(i,j), d_ij
 * satisfy y_i^{-1} y_j y_i = y_kappa(i,j) d_ij.
 *
 * Construction validates the compatibility law
 * phi_gamma(i,j) o conj_{a_ij} = phi_i o phi_j, the identity row/column, and
 * associativity of the resulting multiplication (exhaustively for
 * |G| <= 3^5, randomized above).
 */

#include <functional>
#include <memory>

#include "repzeta/subgroups.hpp"

namespace repzeta {

class ExtGroup : public IGroup {
 public:
    std::shared_ptr<const PcGroupN> N;
    int m = 1;                                ///< number of N-cosets
    std::vector<std::vector<int>> gam;        ///< gamma(i,j)
    std::vector<std::vector<u32>> a;          ///< tails a_ij (N-codes)
    std::vector<std::vector<int>> kappa;      ///< y_i^{-1} y_j y_i = y_kappa(i,j) d_ij
    std::vector<std::vector<u32>> d;          ///< the tails d_ij
    std::vector<int> top_inv;                 ///< j with gamma(i,j) = 0

    /**
     * @param phi_gen_images  per coset index i, the images phi_i(n_g) as
     *        exponent vectors, one per generator of N (empty list = identity).
     */
    static ExtGroup build(std::shared_ptr<const PcGroupN> N,
                          std::vector<std::vector<int>> gamma,
                          std::vector<std::vector<u32>> a,
                          const std::vector<std::vector<ExpVec>>& phi_gen_images);

    /** G = N itself (trivial top). */
    static ExtGroup trivial_top(std::shared_ptr<const PcGroupN> N);

    int top_of(u32 g) const { return (int)(g / (u32)N->size); }
    u32 tail_of(u32 g) const { return g % (u32)N->size; }
    u32 code(int i, u32 n) const { return (u32)i * (u32)N->size + n; }

    u32 phi(int i, u32 n) const { return phi_[i][n]; }        ///< y_i n y_i^{-1}
    u32 phi_inv(int i, u32 n) const { return phi_inv_[i][n]; }

    // IGroup interface.
    u32 mul(u32 x, u32 y) const override;
    u32 inv(u32 x) const override;
    u32 code_bound() const override { return (u32)m * (u32)N->size; }
    std::vector<u32> elements() const override;

    i64 order() const { return (i64)m * N->size; }

 private:
    std::vector<std::vector<u32>> phi_, phi_inv_;  ///< [i][n] permutation tables
};

/** Subgroup of G containing N: a set of coset indices closed under gamma. */
struct SubgroupG {
    std::vector<int> idx;  ///< sorted coset indices, idx[0] = 0

    i64 order(const ExtGroup& G) const { return (i64)idx.size() * G.N->size; }
    std::vector<u32> elements(const ExtGroup& G) const;
    bool contains_index(int i) const;
};

/** All subgroups of G containing N (i.e. all subgroups of G/N). */
std::vector<SubgroupG> subgroups_over_N(const ExtGroup& G);

/** K_p = the (unique in scope) subgroup with K_p/N = Sylow_p(K/N). */
SubgroupG sylow_p_part(const ExtGroup& G, const SubgroupG& K);

/**
 * A Sylow q-subgroup of K for q != p = char(N), as an element list.
 * Requires q | |K/N| (error otherwise) and cyclic q-part of K/N.
 */
std::vector<u32> sylow_q_part(const ExtGroup& G, const SubgroupG& K, i64 q);

/**
 * Subgroup H of a p-power-index overgroup K_p of N with H N = K_p:
 * the intersection M = N cap H plus one transversal element y_i t_i per
 * coset index of K_p (t_1 = 1 for the identity coset).
 */
struct SubgroupH {
    SubgroupOfN M;            ///< N cap H
    std::vector<int> idx;     ///< coset indices of K_p (sorted, idx[0] = 0)
    std::vector<u32> tails;   ///< t_i (N-codes), aligned with idx
    std::vector<u32> elems;   ///< all of H as sorted G-codes

    i64 order() const { return (i64)elems.size(); }
};

/** Chooses a transversal element from the elements of H in one coset. */
using TransversalChooser = std::function<u32(const std::vector<u32>&)>;

/** Build the SubgroupH record from an element set (default chooser: min). */
SubgroupH subgroup_h_from_elements(const ExtGroup& G,
                                   const std::vector<std::vector<u32>>& series,
                                   std::vector<u32> elems,
                                   const TransversalChooser& chooser = {});

/**
 * All H <= K_p with H N = K_p, via pruned p-group descent (a branch whose
 * cosets do not cover K_p/N is discarded with its whole subtree).
 */
std::vector<SubgroupH> enumerate_HH(const ExtGroup& G, const SubgroupG& K_p,
                                    const TransversalChooser& chooser = {});

}  // namespace repzeta
