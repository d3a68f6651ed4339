#pragma once
/**
 * @file pcgroup.hpp
 * @brief Finite p-groups given by weighted power-commutator presentations.
 *
 * A group N of order p^d is presented on generators n_1, ..., n_d with
 * relations n_i^p = w_i and n_j n_i = n_i n_j [n_j, n_i] for j > i, where
 * each right-hand side is a normal word in generators of strictly larger
 * index (the weighting that makes collection from the left terminate).
 * Every element has the unique normal form n_1^e_1 ... n_d^e_d with
 * 0 <= e_i < p; elements are stored as the mixed-radix code sum e_i p^i.
 *
 * Collection from the left is the ground truth for the multiplication;
 * per-generator multiplication tables are built from it once and validated
 * by an associativity sweep (exhaustive for |N| <= 3^5, randomized above).
 */

#include <memory>
#include <string>
#include <vector>

#include "repzeta/groupview.hpp"

namespace repzeta {

using ExpVec = std::vector<i64>;  ///< exponent vector, entries in [0, p)

class PcGroupN : public IGroup {
 public:
    i64 p = 2;
    int d = 0;
    i64 size = 1;  ///< p^d

    /** power[i] = normal form of n_i^p (nonzero only at indices > i). */
    std::vector<ExpVec> power;
    /** comm[j][i] = normal form of [n_j, n_i], j > i (nonzero only at > j). */
    std::vector<std::vector<ExpVec>> comm;

    /**
     * Validate the presentation (weighting, ranges), build multiplication
     * tables by collection, and run the associativity sweep.
     * @throws std::invalid_argument on a malformed presentation.
     */
    static PcGroupN build(i64 p, std::vector<ExpVec> power,
                          std::vector<std::vector<ExpVec>> comm);

    u32 encode(const ExpVec& e) const;
    ExpVec decode(u32 code) const;

    /** Normal form of an arbitrary letter word (generator indices, each one
     *  letter = that generator to the first power). */
    ExpVec collect(std::vector<int> letters) const;

    /** Letter word of the normal form x (for feeding back into collect). */
    std::vector<int> letters_of(u32 x) const;

    u32 mul_gen(u32 x, int g) const { return gen_mul_[g][x]; }

    // IGroup interface.
    u32 mul(u32 a, u32 b) const override;
    u32 inv(u32 a) const override { return inv_[a]; }
    u32 code_bound() const override { return (u32)size; }
    std::vector<u32> elements() const override;

 private:
    std::vector<std::vector<u32>> gen_mul_;  ///< gen_mul_[g][x] = x * n_g
    std::vector<u32> inv_;
};

}  // namespace repzeta
