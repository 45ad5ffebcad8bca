#pragma once

#include <functional>
#include <vector>

#include "qmac/standard.hpp"

namespace qmac {

inline constexpr int kDefaultMaxN = 8;

// Packed non-attacking fillings of dg(inc(gamma)) whose bottom row is
// order-equivalent to beta_perm(gamma), in lexicographic order of the
// reading-order entry sequence.
void for_each_packed_nat(const Composition& gamma, const std::function<void(const Filling&)>& fn,
                         int max_n = kDefaultMaxN);
std::vector<Filling> enumerate_packed_nat(const Composition& gamma, int max_n = kDefaultMaxN);

enum class StandardClass {
    All,           // every standard filling
    NoDescents,    // entries decrease up each column
    UnitDescents,  // every descent drops by exactly 1
};

void for_each_standard(const Composition& gamma, StandardClass cls,
                       const std::function<void(const StandardFilling&)>& fn,
                       int max_n = kDefaultMaxN);
std::vector<StandardFilling> enumerate_st(const Composition& gamma, int max_n = kDefaultMaxN);
std::vector<StandardFilling> enumerate_st0(const Composition& gamma, int max_n = kDefaultMaxN);
std::vector<StandardFilling> enumerate_st1(const Composition& gamma, int max_n = kDefaultMaxN);

// Non-attacking fillings of d with the bottom row fixed and all entries in
// 1..m, in lexicographic order of the hat-cell reading sequence.
void for_each_nat_bounded(const Diagram& d, const std::vector<int>& bottom_row, int m,
                          const std::function<void(const Filling&)>& fn);

}  // namespace qmac
