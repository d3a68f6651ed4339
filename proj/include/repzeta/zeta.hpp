#pragma once
/**
 * @file zeta.hpp
 * @brief Representation zeta series: exact Dirichlet polynomials, the
 *        fibered decomposition over irreducibles of N, its twisted analogue,
 *        direct cross-enumerations, pro-p towers, and rational model fits.
 *
 * The plain series Z_G(s) = sum over Irr(G) of lambda(1)^{-s} is assembled as
 *   Z_G = sum_K |G:K|^{-s-1} sum_c f_K^c(s) Z_K^c(s),
 * where K runs over stabilizers of theta in Irr(N), c over classes of the
 * factor set of theta at K_p, f_K^c collects the degree ratios of Irr(K|theta)
 * and Z_K^c sums theta(1)^{-s} over the thetas in the cell.  Each lambda in
 * Irr(G) is Ind_K^G mu for mu over one of the |G:K| conjugates of theta, which
 * accounts for the 1/|G:K| weight.  The twisted series runs the same scheme
 * over Lin(G)-twist classes of Irr(N) with the stabilizer L of the twist
 * class, cells further keyed by the invariants (Gamma, T).
 *
 * Both series are cross-checked against direct monomial enumerations of
 * Irr(G): all catalogued groups are supersolvable, hence monomial, and
 * sum lambda(1)^2 = |G| certifies completeness of the direct route.
 */

#include "repzeta/genpairs.hpp"
#include "repzeta/twist.hpp"

namespace repzeta {

/** Finite Dirichlet polynomial sum_d c_d d^{-s} with exact coefficients. */
struct DirichletPoly {
    std::map<i64, Rat> c;  ///< degree -> coefficient; zeros are erased

    void add(i64 deg, const Rat& coeff);
    DirichletPoly& operator+=(const DirichletPoly& o);
    /** (a m^{-s})(b n^{-s}) = ab (mn)^{-s}. */
    friend DirichletPoly operator*(const DirichletPoly& x, const DirichletPoly& y);
    DirichletPoly scaled(const Rat& r) const;   ///< scale all coefficients
    DirichletPoly deg_scaled(i64 m) const;      ///< n^{-s} -> (m n)^{-s}
    bool is_integral() const;                   ///< positive integer coefficients
    /** sum c_d d^2 (equals |G| when the series enumerates Irr(G)). */
    i64 weight() const;
    friend bool operator==(const DirichletPoly& a, const DirichletPoly& b) {
        return a.c == b.c;
    }
    std::string str() const;  ///< e.g. "9*1^-s + 2*3^-s"
};

/**
 * f_{(K, N, theta)}(s) = sum over Irr(K|theta) of (lambda(1)/theta(1))^{-s}.
 * K = N gives 1; p-power K/N runs the monomial pair search inside K with the
 * Mackey lying-over filter and asserts sum of squared ratios = |K/N|; mixed
 * cyclic K/N is the Gallagher case |K/N| * 1^{-s} (theta extends along a
 * cyclic quotient and all constituents have ratio 1).  Mixed non-cyclic
 * quotients are outside the implemented scope and throw.
 */
DirichletPoly f_over(const NContext& ctx, const NPair& theta, const SubgroupG& K);

/**
 * Twisted analogue: members of Irr(L|theta) = Ind_K^L Irr(K|theta) counted
 * modulo multiplication by restrictions of Lin(G).
 */
DirichletPoly f_twist_over(const NContext& ctx, const NPair& theta,
                           const SubgroupG& K, const SubgroupG& L);

/** One assembly cell: fixed stabilizer K and factor-set class c at K_p. */
struct ZetaCell {
    std::vector<int> K_idx;       ///< stabilizer coset indices
    Cocycle2 c;                   ///< class representative at K_p
    i64 modulus = 1;              ///< comparison modulus of c
    std::vector<size_t> members;  ///< irr_pairs indices with this (K, c)
    DirichletPoly f;              ///< f of the cell's first member
    DirichletPoly part;           ///< sum theta(1)^{-s} over members
};

std::vector<ZetaCell> zeta_cells(const NContext& ctx);

/** Z_G via the fibered decomposition; asserts integrality and weight |G|. */
DirichletPoly zeta_assemble(const NContext& ctx);

/** Z_G by direct monomial enumeration of Irr(G) (prime-free subgroup walk). */
DirichletPoly zeta_direct(const NContext& ctx);

/** Partition of irr_pairs under theta ~ theta . psi|_N (no conjugation). */
std::vector<std::vector<size_t>> psi_twist_classes(const NContext& ctx);

/** One twisted cell: (L, K, Gamma, c, T) all equal. */
struct TwistCell {
    std::vector<int> L_idx, K_idx;
    std::vector<std::vector<QZ>> Gamma;  ///< subgroup of Lin(K_p/N)
    Cocycle2 c;                          ///< pair class at K_p
    i64 modulus = 1;
    std::vector<std::vector<QZ>> T;      ///< canonical T-class representative
    std::vector<size_t> members;         ///< psi_twist_classes indices
    DirichletPoly f;                     ///< f~ of the first member
    DirichletPoly part;
};

std::vector<TwistCell> twist_cells(const NContext& ctx);

/** Twist zeta via the fibered decomposition over twist classes. */
DirichletPoly twist_assemble(const NContext& ctx);

/** Twist zeta by direct enumeration: Irr(G) modulo Lin(G)-multiplication. */
DirichletPoly twist_direct(const NContext& ctx);

/**
 * Consistency of the Sylow decomposition of Gamma at a mixed stabilizer:
 * Gamma_K factors as Gamma_K^0 . (Gamma_K)_p, restriction to K_p is injective
 * on the p-part with image Gamma_{K_p}, and the twisted conjugation action of
 * every q-part of L (q != p) is already absorbed by Lin(G).
 */
struct SylowReport {
    bool struct_ok = false;  ///< Gamma_K = Gamma_K^0 . (Gamma_K)_p
    bool red_ok = false;     ///< restriction: (Gamma_K)_p ~ Gamma_{K_p}, injective
    bool t_q_ok = false;     ///< q-parts of L act trivially modulo Lin(G)
};

SylowReport sylow_reduction_checks(const NContext& ctx, const NPair& theta);

/** One level of the Heisenberg pro-p tower. */
struct TowerLevel {
    int level = 0;          ///< m: the group is Heisenberg over Z/p^m
    i64 group_order = 0;
    DirichletPoly series;   ///< twist (or plain) zeta of the level group
};

std::vector<TowerLevel> heisenberg_tower(i64 p, int levels, bool twisted);

/** Rational model num(t) / prod (1 - p^i t^j) for a coefficient sequence. */
struct RationalFit {
    std::vector<Rat> num;                      ///< numerator, num[k] * t^k
    std::vector<std::pair<int, int>> factors;  ///< denominator exponents (i, j)
    std::string str(i64 p) const;
};

/**
 * Fit sum a_k t^k by num(t) / prod (1 - p^i t^j) with at most two factors,
 * i in [-2, 3], j in {1, 2}: fewest factors first, then lowest numerator
 * degree.  The numerator must leave at least one trailing zero inside the
 * data window; returns nullopt when nothing qualifies.
 */
std::optional<RationalFit> rational_fit(const std::vector<Rat>& coeffs, i64 p);

}  // namespace repzeta
