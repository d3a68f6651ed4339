#pragma once
/**
 * @file corpus.hpp
 * @brief Catalogue of built-in groups, each presented as an extension of a
 *        designated normal p-subgroup N, plus parametric family builders.
 *
 * Several groups appear multiple times with different admissible choices of
 * N (the series assembly must not depend on that choice, which the test
 * suite exploits).  Entry ids are "<group>" when the choice of N is unique
 * and "<group>/<normal>" otherwise.
 */

#include <memory>
#include <string>

#include "repzeta/extension.hpp"

namespace repzeta {

struct CorpusEntry {
    std::string id;        ///< e.g. "D4/C4"
    std::string group_id;  ///< e.g. "D4"
    std::shared_ptr<const ExtGroup> G;
};

/** All built-in (G, N) pairs. */
const std::vector<CorpusEntry>& corpus();

/** Entry lookup by id; throws std::out_of_range for unknown ids. */
const CorpusEntry& corpus_entry(const std::string& id);

// Family builders.

/** Chained pc presentation of the cyclic group C_{p^e}. */
std::shared_ptr<const PcGroupN> cyclic_chained(i64 p, int e);

/** Elementary abelian group of the given rank. */
std::shared_ptr<const PcGroupN> elementary(i64 p, int rank);

/**
 * Heisenberg group over Z/p^m (order p^{3m}) on chained generators
 * x_1..x_m, y_1..y_m, z_1..z_m with [y_1, x_1] = z^{-1} and z central.
 */
std::shared_ptr<const PcGroupN> heisenberg_modp(i64 p, int m);

/** Modular (M-type) group C_{p^m} x| C_p, with n -> n^{1 + p^{m-1}}. */
std::shared_ptr<const ExtGroup> m_type_modular(i64 p, int m);

}  // namespace repzeta
