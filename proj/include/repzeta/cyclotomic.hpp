#pragma once
/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in rings of cyclotomic integers Z[zeta_n].
 *
 * Character values and their inner products must be computed without
 * floating-point error, so sums of roots of unity are kept as integer
 * coefficient vectors indexed by exponents mod n.  Zero-testing and equality
 * go through a canonical form: for every prime p | n the coefficients are
 * projected onto the tensor integral basis cut out by the relations
 * sum_{i=0}^{p-1} zeta^(j + i n/p) = 0, leaving only exponents whose top
 * p-adic digit (within the p-power part of n) is < p-1.
 */

#include <vector>

#include "repzeta/qz.hpp"

namespace repzeta {

/** Element of Z[zeta_n]: c[j] is the coefficient of e^(2 pi i j/n). */
struct CycInt {
    i64 n = 1;
    std::vector<i64> c = {0};

    CycInt() = default;
    explicit CycInt(i64 level) : n(level), c(level, 0) {}

    /** The integer k as a cyclotomic integer (level 1). */
    static CycInt integer(i64 k);

    /** The root of unity e^(2 pi i a/n) given by r in Q/Z. */
    static CycInt root(const QZ& r);

    /** Same element expressed at level m (n must divide m). */
    CycInt lifted(i64 m) const;

    /** Canonical tensor-basis form (idempotent; level preserved). */
    CycInt canonical() const;

    CycInt conj() const;             ///< complex conjugation (exponent negation)
    bool is_zero() const;
    bool is_integer() const;         ///< lies in Z
    i64 as_integer() const;          ///< value, if is_integer()

    friend CycInt operator+(const CycInt& x, const CycInt& y);
    friend CycInt operator-(const CycInt& x, const CycInt& y);
    friend CycInt operator*(const CycInt& x, const CycInt& y);
    friend CycInt operator*(i64 k, const CycInt& x);
    friend bool operator==(const CycInt& x, const CycInt& y);
    friend bool operator!=(const CycInt& x, const CycInt& y) { return !(x == y); }

    std::string str() const;
};

/**
 * Inner product of two class-function value tables listed over all group
 * elements: (1/|G|) sum_g a(g) conj(b(g)).  Exact; throws if the sum is not
 * rational (cannot happen for genuine class functions over full element
 * lists, so a throw indicates a caller bug).
 */
Rat inner_product(const std::vector<CycInt>& a, const std::vector<CycInt>& b);

}  // namespace repzeta
