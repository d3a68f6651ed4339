#pragma once
/**
 * @file groupio.hpp
 * @brief Text format for extension groups: parser and writer.
 *
 * The format describes 1 -> N -> G -> Q -> 1 explicitly (see the grammar in
 * the README):
 *
 *   # comment
 *   p 3                 prime of N
 *   d 2                 number of pc generators of N
 *   power 1 = 0 1       normal form of n1^p (d integers; omitted = identity)
 *   comm 2 1 = 0 1      normal form of [n2, n1], j > i (omitted = identity)
 *   m 3                 number of N-cosets (omitted = 1)
 *   gamma 0 1 2         one row of the quotient table per line (m rows)
 *   tail 1 2 = 0 1      a_ij as an exponent vector (omitted = identity)
 *   phi 1 = 1 1 / 0 1   images of n1..nd under phi_1 (omitted = identity)
 *
 * Parsing reconstructs the group through the validating builders, so a file
 * that parses also presents a consistent group; structural errors carry the
 * offending line number.
 */

#include <istream>
#include <stdexcept>

#include "repzeta/extension.hpp"

namespace repzeta {

/** Parse failure with 1-based line number. */
struct GroupParseError : std::runtime_error {
    int line;
    GroupParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

std::shared_ptr<const ExtGroup> read_group_text(std::istream& in);
std::shared_ptr<const ExtGroup> read_group_file(const std::string& path);

/** Serialization that read_group_text accepts and rebuilds losslessly. */
std::string write_group_text(const ExtGroup& G);

}  // namespace repzeta
