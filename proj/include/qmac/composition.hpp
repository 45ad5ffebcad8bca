#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmac {

// Parts of a composition; weak (zeros allowed) unless a function says strong.
using Composition = std::vector<int>;
// One-line permutation of {1,...,m}: perm[i-1] is the image of i.
using Permutation = std::vector<int>;

int comp_size(const Composition& alpha);
bool is_strong(const Composition& alpha);

// Removes zero parts, keeping order.
Composition collapse(const Composition& alpha);

// Parts sorted weakly increasing.
Composition inc_sort(const Composition& alpha);

// The longest sorting permutation beta with alpha[beta[i]-1] = inc_sort(alpha)[i-1]:
// positions ordered by part value ascending, ties by position descending.
Permutation beta_perm(const Composition& alpha);

int inversion_count(const Permutation& perm);

// Comma-separated parts, e.g. "1,4,3".
Composition parse_composition(const std::string& text);
std::string composition_str(const Composition& alpha);

// Subset of {1,...,n-1}; bit i-1 of bits set iff i is a member.
struct SubsetMask {
    int n = 1;
    uint64_t bits = 0;

    SubsetMask() = default;
    SubsetMask(int degree, uint64_t mask);
    static SubsetMask from_members(int degree, const std::vector<int>& members);

    bool contains(int i) const { return i >= 1 && i < n && (bits >> (i - 1)) & 1; }
    void insert(int i);
    int size() const;
    std::vector<int> members() const;
    bool subset_of(const SubsetMask& rhs) const;
    SubsetMask unioned(const SubsetMask& rhs) const;

    bool operator==(const SubsetMask&) const = default;
    std::string str() const;
};

// The bijection between strong compositions of n and subsets of [n-1]:
// S = {gamma_1, gamma_1+gamma_2, ...} omitting the full sum n.
SubsetMask comp_subset(const Composition& gamma);
Composition subset_comp(const SubsetMask& s);

// All strong compositions of n, ordered by their subset mask ascending.
std::vector<Composition> strong_compositions(int n);

}  // namespace qmac
