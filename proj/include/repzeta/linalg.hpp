#pragma once
/**
 * @file linalg.hpp
 * @brief Exact linear algebra over Z/M for small dense systems.
 *
 * Coboundary tests, cocycle-space enumeration and crossed-homomorphism
 * solvability all reduce to linear systems over Z/M where M is a small
 * prime power (or, for mixed-denominator inputs, a product of small prime
 * powers handled by CRT).
 *
 * Over Z/q^a the valuation of entries is a total order, so Gaussian
 * elimination with global minimal-valuation pivoting is exact and complete:
 * after elimination every remaining entry in a pivot row has valuation at
 * least the pivot's, which makes both solvability testing and kernel
 * generation straightforward.
 */

#include <optional>
#include <vector>

#include "repzeta/qz.hpp"

namespace repzeta {

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  ///< row-major, entries reduced mod M

/** Solve A x = b over Z/M.  Returns a solution if one exists. */
std::optional<Vec> solve_mod(const Mat& A, const Vec& b, i64 M);

/**
 * Generators of { x : A x = 0 over Z/M }.
 * Every solution is a Z-combination of the returned vectors (mod M).
 */
std::vector<Vec> kernel_mod(const Mat& A, i64 M);

/** Factor M into prime powers (M <= ~10^6; trial division). */
std::vector<std::pair<i64, i64>> factor_prime_powers(i64 M);  // (q, q^a) pairs

}  // namespace repzeta
