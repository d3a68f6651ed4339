#pragma once
/**
 * @file characters.hpp
 * @brief Linear characters of subgroups of N and the pair calculus for
 *        irreducible characters of N under the G-action.
 *
 * Irreducible characters of the p-group N are handled exclusively through
 * pairs (M, chi): a subgroup M <= N and a linear character chi of M whose
 * induction to N is irreducible (N is monomial).  All comparisons go through
 * Mackey-style predicates on such pairs; character value tables over N are
 * never materialized here.
 *
 * chi is stored by its values on the good basis of M (the canonical key)
 * together with its values on the polycyclic generators of M/[M,M] used for
 * evaluation.
 */

#include <optional>

#include "repzeta/corpus.hpp"

namespace repzeta {

/** A pair (M, chi): chi is a linear character of M <= N. */
struct NPair {
    SubgroupOfN M;
    std::vector<QZ> xi;     ///< chi on M.basis (canonical key)
    std::vector<QZ> dvals;  ///< chi on the dual generators of M/[M,M]

    /** Canonical total order: by (|M|, basis matrix, xi values). */
    friend bool operator<(const NPair& a, const NPair& b);
    friend bool operator==(const NPair& a, const NPair& b);
};

/**
 * Shared computation context for one extension (G, N): the lower p-series,
 * memoized abelian duals and subgroup intersections, and Lin(G).
 */
class NContext {
 public:
    explicit NContext(std::shared_ptr<const ExtGroup> Gp);

    const ExtGroup& G() const { return *G_; }
    const PcGroupN& N() const { return *G_->N; }
    const std::vector<std::vector<u32>>& series() const { return series_; }

    /** Dual of M/[M,M] with the good basis as generator hint (memoized). */
    const AbelianDual& dual_of(const SubgroupOfN& M) const;

    /** All linear characters of M, in canonical order. */
    std::vector<NPair> lin_chars(const SubgroupOfN& M) const;

    /** chi(m) for m in M. */
    QZ eval(const NPair& pair, u32 m) const;

    /** The conjugate pair ^g(M, chi) for g in G (a G-code). */
    NPair conj_pair(u32 g, const NPair& pair) const;

    /** Is chi invariant under conjugation by all of H? */
    bool is_invariant(const SubgroupH& H, const NPair& pair) const;

    /** Mackey: is Ind_M^N chi irreducible? */
    bool induces_irreducibly(const NPair& pair) const;

    /** E: Ind_M^N chi = Ind_M'^N chi' ? */
    bool induced_equal(const NPair& a, const NPair& b) const;

    /**
     * E-twist: the first psi in Lin(G) (canonical order, or the order given
     * by psi_order) with (Ind chi) * psi|_N = Ind chi', if any.
     */
    std::optional<size_t> induced_twist_equal(
        const NPair& a, const NPair& b,
        const std::vector<size_t>* psi_order = nullptr) const;

    /** Lin(G) as the dual of G/[G,G]; characters in canonical order. */
    const AbelianDual& g_dual() const;
    size_t lin_G_count() const { return g_dual().chars.size(); }
    QZ psi_eval(size_t psi, u32 g) const { return g_dual().eval(psi, g); }

    /** Stabilizer K of Ind chi in G (contains N). */
    SubgroupG stabilizer_K(const NPair& pair) const;

    /** Twist stabilizer L = { g : ^g(Ind chi) = (Ind chi) psi|_N for some psi }. */
    SubgroupG stabilizer_L(const NPair& pair) const;

    /**
     * One pair per irreducible character of N (canonical E-class
     * representatives, sorted).  Degrees satisfy sum |N:M|^2 = |N|.
     */
    const std::vector<NPair>& irr_pairs() const;

    /** f with p^f = |N : M| = deg Ind chi. */
    i64 degree_exponent(const NPair& pair) const;

    /** Are Ind chi and Ind chi' equal up to G-conjugation and a Lin(G)-twist? */
    bool twist_related(const NPair& a, const NPair& b) const;

    /**
     * Partition of irr_pairs() into classes of the twist relation
     * (G-conjugacy combined with multiplication by Lin(G) restricted to N).
     * Each class lists indices into irr_pairs(); the first is the canonical
     * representative.
     */
    std::vector<std::vector<size_t>> twist_classes() const;

    /** Stable integer id of a subgroup (for memo keys). */
    int subgroup_id(const SubgroupOfN& M) const;

    /** Representatives of N / M (one element per coset, M-coset first). */
    std::vector<u32> coset_reps(const SubgroupOfN& M) const;

 private:
    /**
     * Lexicographic minimum over {psi, transversal conjugation} of the
     * central character values on zbasis: a bucket key for twist_classes().
     */
    std::vector<QZ> central_orbit_key(const std::vector<u32>& zbasis,
                                      const NPair& pair) const;

    struct IntersectionData {
        std::vector<u32> gens;       ///< generators of ^gM cap M'
        std::vector<u32> gens_back;  ///< g^{-1} x g for each generator
    };
    const IntersectionData& intersection_data(const NPair& a, const NPair& b,
                                              u32 g) const;

    std::shared_ptr<const ExtGroup> G_;
    std::vector<std::vector<u32>> series_;
    mutable std::map<std::vector<ExpVec>, int> sub_ids_;
    mutable std::map<int, AbelianDual> duals_;
    mutable std::map<int, std::vector<u32>> reps_;
    mutable std::map<std::tuple<int, int, u32>, IntersectionData> inter_;
    mutable std::optional<AbelianDual> gdual_;
    mutable std::optional<std::vector<NPair>> irr_;
};

}  // namespace repzeta
