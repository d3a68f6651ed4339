#pragma once
/**
 * @file genpairs.hpp
 * @brief Monomial pair calculus inside an arbitrary finite group.
 *
 * The same Mackey predicates that drive the pair calculus on N apply to any
 * finite group K whose relevant irreducibles are monomial: a character is
 * handled as a pair (P, mu) with P <= K and mu a linear character of P whose
 * induction to K is irreducible.  Inner products of two such inductions
 * decompose over double cosets into restrictions of linear characters, so
 * irreducibility, equality, twisted equality and "lying over" are all exact
 * finite checks.  Every finite p-group and, more generally, every
 * supersolvable group is monomial, which covers all groups handled here; the
 * degree identity sum |K:P|^2 = |K| is asserted by callers whenever a
 * complete irreducible enumeration is claimed.
 *
 * K is given as a sorted element list inside an ambient group (so the same
 * machinery serves K <= G and K = G alike).
 */

#include <functional>
#include <map>
#include <optional>

#include "repzeta/groupview.hpp"
#include "repzeta/subgroups.hpp"

namespace repzeta {

/** A pair (P, mu): mu linear on the subgroup with sorted elements P. */
struct GPair {
    std::vector<u32> P;      ///< sorted ambient element codes
    std::vector<QZ> dvals;   ///< mu on the dual generators of P/[P,P]
};

/** An externally supplied character value map on ambient codes. */
using AmbientChar = std::function<QZ(u32)>;

class GPairCtx {
 public:
    GPairCtx(const IGroup& G, std::vector<u32> elems);

    const IGroup& group() const { return *G_; }
    const std::vector<u32>& elems() const { return elems_; }
    i64 order() const { return (i64)elems_.size(); }

    /**
     * All subgroups of K of index <= max_index, via p-power descent through
     * maximal subgroups; requires |K| to be a power of p.  Subgroups not
     * containing @p floor are pruned with their subtrees (sound: the
     * predicate is monotone under inclusion).
     */
    std::vector<std::vector<u32>> subgroups_p(i64 p, i64 max_index,
                                              const std::vector<u32>& floor = {}) const;

    /**
     * Every subgroup of K, by closing generator sets bottom-up.  Exhaustive
     * and prime-free; meant for the small groups of the catalogue.
     */
    std::vector<std::vector<u32>> subgroups_all() const;

    /** Dual of P/[P,P] (memoized per subgroup). */
    const AbelianDual& dual_of(const std::vector<u32>& P) const;

    /** All linear characters of P, in canonical order. */
    std::vector<GPair> lin_chars(const std::vector<u32>& P) const;

    /** mu(x) for x in P. */
    QZ eval(const GPair& pair, u32 x) const;

    /** deg Ind_P^K mu = |K : P|. */
    i64 degree(const GPair& pair) const;

    /** Mackey: is Ind_P^K mu irreducible? */
    bool induces_irreducibly(const GPair& pair) const;

    /**
     * Ind_P^K (mu . twist|_P) = Ind_{P'}^K mu' ?  @p twist, when present,
     * must be (the restriction of) a class function of the ambient group,
     * e.g. a linear character of a group containing K.
     */
    bool induced_equal(const GPair& a, const GPair& b,
                       const AmbientChar* twist = nullptr) const;

    /**
     * < Ind_P^K mu , Ind_M^K chi > != 0 for a linear character chi of the
     * subgroup with sorted elements @p M (given by its values)?
     */
    bool lies_over(const GPair& lam, const std::vector<u32>& M,
                   const AmbientChar& chi) const;

    /**
     * Pairs for the distinct irreducible monomial inductions from the given
     * subgroups (one canonical representative per character).
     */
    std::vector<GPair> irr_from(const std::vector<std::vector<u32>>& subs) const;

    /** Left coset representatives of P in K (identity first; memoized). */
    const std::vector<u32>& coset_reps(const std::vector<u32>& P) const;

 private:
    int sub_id(const std::vector<u32>& P) const;
    struct IntersectionData {
        std::vector<u32> gens;       ///< generators of ^gP cap P'
        std::vector<u32> gens_back;  ///< g^-1 x g per generator
    };
    const IntersectionData& intersection_data(const std::vector<u32>& Pa,
                                              const std::vector<u32>& Pb,
                                              u32 g) const;

    const IGroup* G_;
    std::vector<u32> elems_;
    mutable std::map<std::vector<u32>, int> ids_;
    mutable std::map<int, AbelianDual> duals_;
    mutable std::map<int, std::vector<u32>> reps_;
    mutable std::map<std::tuple<int, int, u32>, IntersectionData> inter_;
};

}  // namespace repzeta
