#pragma once
/**
 * @file twist.hpp
 * @brief Twist-level invariants of an irreducible theta = Ind_M^N chi:
 *        the stabilizer pair (K, L), the subgroup Gamma of Lin(K_p/N), the
 *        crossed homomorphism mu, and the class T = [mu] in
 *        H^1(L_p/N, F_{K_p}/Gamma_p).
 *
 * Everything is computed from the pair (H, chi) at the p-part: H is the
 * stabilizer of (M, chi) in K_p, chi extends strongly to H by
 * chi^(y_i t_i n) = chi(n), and theta^ = Ind_H^{K_p} chi^ is a projective
 * character of K_p whose factor set is the inflation of the class of the
 * pair.  For g in L_p, ^g(theta^) = theta^ . psi_g|_{K_p} . mu(gN) with
 * psi_g in Lin(G) and mu(gN) a function on K_p/N; mu is extracted from
 * theta^-values at nonvanishing points and satisfies the crossed
 * homomorphism law mu(gg') = mu(g) . ^g mu(g').
 */

#include "repzeta/cohomology.hpp"
#include "repzeta/cyclotomic.hpp"

namespace repzeta {

/** The quotient table viewed as a finite group on local indices. */
class QGroupView : public IGroup {
 public:
    explicit QGroupView(const QuotientTable& Q);
    u32 mul(u32 x, u32 y) const override { return (u32)Q_->gam[x][y]; }
    u32 inv(u32 x) const override { return inv_[x]; }
    u32 code_bound() const override { return (u32)Q_->r(); }
    std::vector<u32> elements() const override;

 private:
    const QuotientTable* Q_;
    std::vector<u32> inv_;
};

/** All linear characters of Q, each as its value vector per local index. */
std::vector<std::vector<QZ>> lin_of_quotient(const QuotientTable& Q);

/** H = Stab_{K_p}((M, chi)); throws unless H covers every coset of K_p. */
SubgroupH stabilizer_H(const NContext& ctx, const SubgroupG& Kp,
                       const NPair& chi, const TransversalChooser& chooser = {});

/**
 * Does y_j n' lie in ^{y_i n} H?  Decided through chi alone: the set
 * S = phi_i(^n M) must be preserved by x -> phi_j(^{n'} x) and chi must be
 * unchanged along the comparison chi(^{n^-1} phi_i^-1(.)).
 */
bool predicate_A(const NContext& ctx, const NPair& chi, int i_glob, u32 n,
                 int j_glob, u32 nprime);

/**
 * Value of the conjugated strong extension ^{y_i n} chi^ at y_j n'
 * (defined when y_j n' lies in ^{y_i n} H):
 * chi(t_kappa(i,j)^-1 phi_kappa(i,j)^-1(n^-1) d_ij phi_i^-1(n') n).
 */
QZ conj_chi_hat(const NContext& ctx, const QuotientTable& QK,
                const SubgroupH& H, const NPair& chi, int i_glob, u32 n,
                int j_glob, u32 nprime);

/** Deterministic randomization hooks for invariance testing. */
struct TwistChoices {
    TransversalChooser chooser;           ///< transversal of H inside K_p
    std::vector<u32> scan_order;          ///< N-codes, order of evaluation points
    std::vector<size_t> psi_order;        ///< preference order on Lin(G)
};

/** Twist data of one pair: stabilizers, strong extension, mu. */
class TwistContext {
 public:
    TwistContext(const NContext& ctx, const NPair& pair,
                 const TwistChoices& choices = {});

    const NContext& ctx() const { return *ctx_; }
    const NPair& pair() const { return pair_; }
    const SubgroupG& K() const { return K_; }
    const SubgroupG& L() const { return L_; }
    const SubgroupG& Kp() const { return Kp_; }
    const SubgroupG& Lp() const { return Lp_; }
    const QuotientTable& QK() const { return QK_; }
    const QuotientTable& QL() const { return QL_; }
    const SubgroupH& H() const { return H_; }

    /** theta^(x) for x in K_p (projective character value; memoized). */
    const CycInt& theta_hat(u32 x) const;

    /** mu(y_k N)(y_i N) with k local in QL and i local in QK. */
    const std::vector<std::vector<QZ>>& mu() const { return mu_; }

    /** The Lin(G) witness psi_k with ^{y_k} theta = theta . psi_k|_N. */
    size_t psi_of(int k_local) const { return psi_[k_local]; }

    /** Class of the pair (H, chi) in H^2(K_p/N). */
    const Cocycle2& pair_class() const { return c_; }

 private:
    void build_mu(const TwistChoices& choices);

    const NContext* ctx_;
    NPair pair_;
    SubgroupG K_, L_, Kp_, Lp_;
    QuotientTable QK_, QL_;
    SubgroupH H_;
    std::vector<u32> h_reps_;  ///< left coset reps of H in K_p (G-codes)
    Cocycle2 c_;
    std::vector<std::vector<QZ>> mu_;
    std::vector<size_t> psi_;
    mutable std::map<u32, CycInt> theta_memo_;
};

/**
 * nu in Gamma_{K_p, theta~}?  The literal first-order form: some eps in
 * Lin(G) and some y_i n align the twisted strong extensions, i.e. for all
 * y_j n' in H cap ^{y_i n}H (membership via predicate_A):
 * (^{y_i n} chi^)(y_j n') + nu(y_j) = chi(t_j^-1 n') + eps(y_j) + eps(n).
 */
bool gamma_contains(const TwistContext& tc, const std::vector<QZ>& nu);

/** Direct cross-check: exists eps with theta^ . eps = theta^ . nu pointwise. */
bool gamma_contains_direct(const TwistContext& tc, const std::vector<QZ>& nu);

/** The subgroup Gamma_{K_p, theta~} of Lin(K_p/N), via gamma_contains. */
std::vector<std::vector<QZ>> gamma_group(const TwistContext& tc);

/**
 * The comparison term of the linearised twist condition, for k local in QL
 * and i, j local in QK: checks
 * chi(t_kappa(k,j)^-1 d_kj phi_k^-1(n')) =
 *   mu_ki' + delta_ki' + nu_i' + psi(y_j) + psi(n') + (^{y_i n} chi^)(y_j n')
 * where i' = kappa(i, j) (local) and mu, delta, nu, psi are supplied values.
 */
bool predicate_B(const TwistContext& tc, int k_local, int i_local, int j_local,
                 u32 n, u32 nprime, const QZ& mu_val, const QZ& delta_val,
                 const QZ& nu_val, size_t psi);

/** Result of the T-invariant computation. */
struct TInvariant {
    /**
     * Candidate class representatives w[k][i] of H^1(QL, F/Gamma).  Since mu
     * is a ratio of projective characters with equal factor sets, its values
     * lie in Lin(K_p/N); the enumeration therefore runs over
     * Lin(K_p/N)-valued crossed homomorphisms (which represent every class
     * the invariant can take), while equivalence is tested with coboundaries
     * from the full function module.
     */
    std::vector<std::vector<std::vector<QZ>>> classes;
    size_t mu_class;  ///< unique candidate equivalent to mu
};

/**
 * T_{L_p, K_p, Gamma_p}(theta~) as the class of mu among enumerated
 * representatives of H^1(L_p/N, F_{K_p}/Gamma_p).  Asserts that exactly one
 * candidate matches.
 */
TInvariant t_invariant(const TwistContext& tc,
                       const std::vector<std::vector<QZ>>& Gamma);

}  // namespace repzeta
