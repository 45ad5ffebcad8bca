#pragma once

#include <vector>

#include "qmac/filling.hpp"

namespace qmac {

// A filling whose entries are a bijection onto {1,...,n}; cells and values
// identify each other.
class StandardFilling {
public:
    explicit StandardFilling(Filling f);

    const Filling& filling() const { return f_; }
    const Diagram& diagram() const { return f_.diagram(); }
    int size() const { return f_.size(); }
    Cell cell_of(int value) const;
    int at(Cell u) const { return f_.at(u); }

    // ID: values i such that i+1 precedes i in the reading word.
    SubsetMask inverse_descents() const;
    // V = ID plus values i whose cell attacks the cell of i+1.
    SubsetMask v_set() const;
    // W: values i with i+1 directly below.
    SubsetMask w_set() const;

    bool in_st0() const { return f_.descent_cells().empty(); }
    // Every descent cell exceeds the cell below by exactly 1.
    bool in_st1() const;

    // Maximal vertical run of cells around the cell of the value, descents
    // all the way down to (but excluding) the run's bottom cell.
    std::vector<Cell> descent_group(int value) const;
    // Nu: values i in ID or whose descent group attacks the group of i+1.
    SubsetMask nu_set() const;
    // h(shape) minus the number of i sharing a column with i+1.
    int omega() const;
    // Sum of arm over descent cells.
    int coinv_des() const;

    bool operator==(const StandardFilling& rhs) const { return f_ == rhs.f_; }
    bool operator<(const StandardFilling& rhs) const { return f_ < rhs.f_; }

private:
    Filling f_;
    std::vector<int> cell_index_of_value_;
};

// The unique standard filling ordering entries by value, ties broken by
// reading order; preserves maj and coinv.
StandardFilling standardize(const Filling& T);

// delta_S: entries w[tau(u)] for w = (1^{a_1},...,k^{a_k}), a = subset_comp(S).
// Requires V(tau) as a subset of S; inverse of standardize on its image.
Filling destandardize(const StandardFilling& tau, const SubsetMask& S);

// The weight of destandardize(tau, S) in closed form: t^coinv q^maj times the
// (1-t)/(1-q^(leg+1) t^(arm+1)) factors over hat cells outside W(tau) and over
// cells of values in S intersect W(tau).
RatExpr destandardized_weight(const StandardFilling& tau, const SubsetMask& S);

// For tau with no descents and U inside W(tau): reverses the values of each
// maximal run {i,...,i+k-1} of U together with i+k along their vertical strip,
// producing a filling whose descents all drop by exactly 1.
StandardFilling iota(const StandardFilling& tau, const SubsetMask& U);

// Sorts every column to decrease upward; inverts iota on its image.
StandardFilling sort_columns_decreasing(const StandardFilling& tau);

}  // namespace qmac
