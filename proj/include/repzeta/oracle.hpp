#pragma once
/**
 * @file oracle.hpp
 * @brief Independent reference implementations used only for cross-checks.
 *
 * Everything here works on full character value tables and exhaustive
 * searches -- the representations the engine deliberately avoids -- and
 * shares nothing with it beyond the group arithmetic and cyclotomic scalars.
 * Subgroups are enumerated by naive closure growth (not by Frattini
 * descent), irreducibility and equality of characters are decided by inner
 * products of value rows, and coboundary questions by exhaustive search over
 * all candidate functions.  These routes are exponentially slower but have
 * no shared failure mode with the engine.
 */

#include <optional>

#include "repzeta/cyclotomic.hpp"
#include "repzeta/extension.hpp"

namespace repzeta::oracle {

/** All subgroups of G, as sorted element lists, by closure growth. */
std::vector<std::vector<u32>> all_subgroups(const IGroup& G);

/** Irr(G) as value tables (rows indexed by element code). */
struct IrrTable {
    std::vector<u32> elems;                 ///< element codes, row index order
    std::vector<std::vector<CycInt>> rows;  ///< one row per irreducible
    std::vector<i64> degrees;               ///< row degree (value at identity)
};

/**
 * Irr(G) by inducing every linear character of every subgroup and keeping
 * the irreducible, pairwise distinct value tables; asserts
 * sum deg^2 = |G| (all groups in scope are monomial).
 */
IrrTable irr_by_values(const IGroup& G);

/** Partition of the rows under multiplication by the degree-1 rows. */
std::vector<std::vector<size_t>> twist_partition(const IrrTable& T);

/**
 * Exhaustive 2-coboundary search: b with z_ij = b_i + b_j - b_gam(i,j) and
 * all values in (1/M) Z/Z.  b_1 is forced to z_11, so the search space is
 * M^(r-1); rows/columns through the identity are pre-checked.
 */
std::optional<std::vector<QZ>> coboundary_exhaustive(
    const std::vector<std::vector<int>>& gam,
    const std::vector<std::vector<QZ>>& z, i64 M);

/** Stabilizer data of one irreducible of N inside G, from value tables. */
struct LKRow {
    size_t row;              ///< index into irr_by_values(N).rows
    i64 degree;
    std::vector<int> K_idx;  ///< cosets fixing the character
    std::vector<int> L_idx;  ///< cosets fixing it up to a linear character of G
};

/** K and L for every irreducible character of N = the base of the extension. */
std::vector<LKRow> search_LKN(const ExtGroup& G);

}  // namespace repzeta::oracle
