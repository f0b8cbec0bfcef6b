#pragma once

#include <array>
#include <map>

#include "rsverify/characters.hpp"

namespace rsv {

/// Multiset of irreducible constituents: weight -> multiplicity.
using WeightMultiset = std::map<WeightA3, unsigned>;

/// GL4 partition with at most four rows.
using Partition4 = std::array<unsigned, 4>;

/// Closed-form decomposition of A[t,0,v] * A[0,u,0]:
/// { A[t+u-2i-j, i+j-k, v-u+j+2k] : 0<=k<=i<=t, 0<=j<=u-i, u-v<=j+k }.
WeightMultiset lr_closed_form(unsigned t, unsigned u, unsigned v);

/// Tensor product decomposition by brute-force Littlewood-Richardson
/// tableaux: boxes labelled 1..rows(mu) are added to `lambda` row strip by
/// row strip, kept when the result is a column-strict skew tableau whose
/// reverse reading word is a lattice word. Shapes with more than four rows
/// are discarded; full columns are dropped when converting to SL4 weights.
WeightMultiset lr_oracle(const Partition4& lambda, const Partition4& mu);

}  // namespace rsv
