#pragma once
/**
 * @file cohomology.hpp
 * @brief Second cohomology of the top quotient Q = K_p/N with values in
 *        Q/Z, and the cohomology class attached to a pair (H, chi).
 *
 * Q is described by the restriction of the transversal multiplication table
 * gamma to the coset indices of K_p.  A 2-cocycle is an r x r matrix z over
 * Q/Z with z_{gamma(i,j),k} + z_{ij} = z_{i,gamma(j,k)} + z_{jk}; it is a
 * coboundary when z_ij = b_i + b_j - b_{gamma(i,j)} for some function b
 * (whose value b_1 at the identity coset is forced to z_11).
 *
 * The class attached to an H-invariant pair (H, chi) is represented by
 * z_ij = -chi(t_{gamma(i,j)}^{-1} a_ij phi_j^{-1}(t_i) t_j), the factor set
 * of the strong extension of chi to H along the transversal (y_i t_i).
 */

#include "repzeta/characters.hpp"

namespace repzeta {

/** The quotient Q = K/N as a local multiplication table on coset indices. */
struct QuotientTable {
    std::vector<int> idx;               ///< global coset indices, idx[0] = 0
    std::vector<std::vector<int>> gam;  ///< local multiplication table
    std::vector<int> local;             ///< global index -> local index or -1

    int r() const { return (int)idx.size(); }
    /** Local index of a global coset index (must belong to Q). */
    int local_of(int global) const;
    /** Order of the local element i in Q. */
    i64 order_of(int i) const;
    /** Exponent of Q (lcm of element orders). */
    i64 exponent() const;

    static QuotientTable of(const ExtGroup& G, const SubgroupG& K);
};

/** A function [r] x [r] -> Q/Z (2-cochain on Q). */
struct Cocycle2 {
    std::vector<std::vector<QZ>> z;

    int r() const { return (int)z.size(); }
    static Cocycle2 zero(int r);
    Cocycle2 operator+(const Cocycle2& o) const;
    Cocycle2 operator-(const Cocycle2& o) const;
    bool operator==(const Cocycle2& o) const { return z == o.z; }
    bool operator<(const Cocycle2& o) const { return z < o.z; }
    /** lcm of the orders of all entries. */
    i64 denominator() const;
};

/** Does z satisfy the 2-cocycle identity over Q? */
bool is_cocycle2(const QuotientTable& Q, const Cocycle2& z);

/**
 * A function b: [r] -> (1/M) Z/Z with z_ij = b_i + b_j - b_{gamma(i,j)},
 * if one exists.  Solved as an exact linear system over Z/M.
 */
std::optional<std::vector<QZ>> coboundary_witness(const QuotientTable& Q,
                                                  const Cocycle2& z, i64 M);

bool is_coboundary2(const QuotientTable& Q, const Cocycle2& z, i64 M);

/**
 * The factor-set representative of the class C(H, chi) for an H-invariant
 * pair; H must have its transversal aligned with Q (H.idx == Q.idx).
 */
Cocycle2 class_of_pair(const NContext& ctx, const QuotientTable& Q,
                       const SubgroupH& H, const NPair& pair);

/**
 * The modulus p^E used when comparing classes of pairs: p^e (order of the
 * values of chi) times the p-part of exp(Q).
 */
i64 class_modulus(const NContext& ctx, const QuotientTable& Q, const NPair& pair);

/** C(H, chi) = [c]?  (Coboundary test of class_of_pair - c at class_modulus.) */
bool satisfies_class(const NContext& ctx, const QuotientTable& Q,
                     const SubgroupH& H, const NPair& pair, const Cocycle2& c);

/**
 * Representatives of all classes in H^2(Q, (1/M) Z/Z): the kernel of the
 * cocycle identity modulo coboundaries, explored class by class.  With
 * M = |Q| this exhausts H^2(Q, Q/Z).
 */
std::vector<Cocycle2> h2_classes(const QuotientTable& Q, i64 M);

/** Restriction of z along the inclusion Qsub <= Q (global indices). */
Cocycle2 restrict_cocycle(const QuotientTable& Qsub, const Cocycle2& z,
                          const QuotientTable& Q);

/** Entrywise q-primary component (represents the q-part of the class). */
Cocycle2 primary_component(const Cocycle2& z, i64 q);

}  // namespace repzeta
