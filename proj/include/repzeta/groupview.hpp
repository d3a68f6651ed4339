#pragma once
/**
 * @file groupview.hpp
 * @brief Generic finite-group machinery over dense element codes.
 *
 * All concrete groups in the engine (pc-groups and their extensions) expose
 * their elements as integers in [0, code_bound).  The helpers here implement
 * structure computations that only need the abstract multiplication:
 * subgroup closure, conjugation, commutator subgroups, and duals of abelian
 * sections (the data behind linear characters).
 */

#include <map>
#include <vector>

#include "repzeta/qz.hpp"

namespace repzeta {

/** Abstract finite group on integer element codes. */
class IGroup {
 public:
    virtual ~IGroup() = default;
    virtual u32 mul(u32 a, u32 b) const = 0;
    virtual u32 inv(u32 a) const = 0;
    virtual u32 one() const { return 0; }
    virtual u32 code_bound() const = 0;           ///< codes lie in [0, bound)
    virtual std::vector<u32> elements() const = 0;

    u32 conj(u32 g, u32 x) const {                ///< g x g^-1
        return mul(mul(g, x), inv(g));
    }
    u32 commutator(u32 a, u32 b) const {          ///< a^-1 b^-1 a b
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    u32 pow(u32 x, i64 k) const;
    i64 order_of(u32 x) const;
};

/** Subgroup generated by gens; sorted element codes. */
std::vector<u32> closure(const IGroup& G, const std::vector<u32>& gens);

/** Image of a sorted subgroup under conjugation by g; sorted. */
std::vector<u32> conj_subgroup(const IGroup& G, u32 g, const std::vector<u32>& H);

/** Derived subgroup [H, H] of the subgroup with the given elements. */
std::vector<u32> derived_subgroup(const IGroup& G, const std::vector<u32>& H);

/** H^p [H, K]: the subgroup generated by p-th powers of H and [H, K]. */
std::vector<u32> power_commutator_step(const IGroup& G, const std::vector<u32>& H,
                                       const std::vector<u32>& K, i64 p);

/** Sorted-vector membership test. */
bool contains(const std::vector<u32>& sorted_set, u32 x);

/** Greedy small generating set of a subgroup given by its sorted elements. */
std::vector<u32> small_generating_set(const IGroup& G, const std::vector<u32>& H);

/** Center of the subgroup with sorted elements S (elements of S commuting
 *  with a generating set of S); sorted. */
std::vector<u32> center_of(const IGroup& G, const std::vector<u32>& S);

/**
 * Dual of an abelian section S/D, where D is normal in S and S/D abelian.
 *
 * Elements of the section are represented by their coset minima.  A
 * polycyclic generator sequence (g_1, ..., g_k) is fixed (caller-supplied or
 * chosen greedily), every coset gets a discrete-log vector (i_1, ..., i_k)
 * with coset = g_1^i_1 ... g_k^i_k, and each character is stored as its k
 * values on the generators.  Characters evaluate by dot product against the
 * log vector, so tables of values over all elements are never materialized.
 */
struct AbelianDual {
    std::vector<u32> gens;                 ///< codes in the ambient group
    std::vector<i64> rel_orders;           ///< q_j = order of g_j over <g_1..g_{j-1}, D>
    std::map<u32, std::vector<i64>> logs;  ///< coset rep -> exponent vector
    std::map<u32, u32> coset_rep;          ///< element of S -> min element of its coset
    std::vector<std::vector<QZ>> chars;    ///< all homs S/D -> Q/Z, values on gens

    /** Value of character #idx at x (x must lie in S). */
    QZ eval(size_t idx, u32 x) const;
    /** Value of an external value-vector (on gens) at x. */
    QZ eval_values(const std::vector<QZ>& vals, u32 x) const;
};

/**
 * Build the dual of S/D.  @p gens_hint, if nonempty, is used (in order) as
 * the polycyclic sequence; redundant entries are skipped.  D must be normal
 * in S with abelian quotient.
 */
AbelianDual abelian_dual(const IGroup& G, const std::vector<u32>& S,
                         const std::vector<u32>& D,
                         const std::vector<u32>& gens_hint = {});

}  // namespace repzeta
