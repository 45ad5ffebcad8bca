#pragma once

#include <string>
#include <vector>

#include "qmac/diagram.hpp"
#include "qmac/ratexpr.hpp"

namespace qmac {

// Assignment of positive entries to the cells of a diagram.
class Filling {
public:
    Filling(Diagram d, std::vector<int> entries);
    // Columns given bottom to top, e.g. {{1},{4,5,3},{2,3,1,2}}.
    static Filling from_columns(const std::vector<std::vector<int>>& cols);
    // Semicolon-separated columns, entries bottom to top: "1;4,5,3;2,3,1,2".
    static Filling parse(const std::string& text);

    const Diagram& diagram() const { return d_; }
    int size() const { return d_.size(); }
    int at(Cell u) const { return entries_[d_.index_of(u)]; }
    int at_index(int i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }
    std::vector<std::vector<int>> columns() const;
    std::string str() const;

    bool is_packed() const;
    int max_entry() const;
    // Entry multiplicities (count of 1, ..., count of max_entry).
    Composition content() const;
    std::vector<int> reading_word() const;

    std::vector<Cell> descent_cells() const;
    // Sorted entries found in descent cells.
    std::vector<int> descent_values() const;
    int maj() const;
    int coinv() const;
    RatExpr weight() const;
    bool is_non_attacking() const;

    bool operator==(const Filling& rhs) const {
        return d_.heights() == rhs.d_.heights() && entries_ == rhs.entries_;
    }
    bool operator<(const Filling& rhs) const {
        if (d_.heights() != rhs.d_.heights()) return d_.heights() < rhs.d_.heights();
        return entries_ < rhs.entries_;
    }

private:
    Diagram d_;
    std::vector<int> entries_;
};

// A triple at a hat cell holds entries x (the cell), y (below it), z (one of
// its arm cells); it is a coinversion iff x<z<y, z<y<x, or y<x<z.
bool is_coinversion(int x, int y, int z);

// True iff the bottom-row entries of T, left to right, are distinct and
// order-equivalent to beta_perm(gamma). T must fill dg(inc(gamma)).
bool bottom_row_ok(const Filling& T, const Composition& gamma);

}  // namespace qmac
