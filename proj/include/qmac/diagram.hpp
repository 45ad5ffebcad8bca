#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmac/composition.hpp"

namespace qmac {

// 1-based coordinates; row 1 is the bottom row (French notation).
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell&) const = default;
    bool operator<(const Cell& rhs) const {
        return col != rhs.col ? col < rhs.col : row < rhs.row;
    }
    std::string str() const;
};

// Column diagram dg(alpha): heights[c-1] cells in column c.
class Diagram {
public:
    explicit Diagram(Composition heights);

    const Composition& heights() const { return heights_; }
    int columns() const { return int(heights_.size()); }
    int height(int col) const { return heights_[col - 1]; }
    int size() const { return total_; }

    bool contains(Cell u) const;
    // Column-major, bottom to top; stable cell <-> index identification.
    int index_of(Cell u) const;
    Cell cell_at(int index) const;

    int leg(Cell u) const;
    int arm(Cell u) const;
    // The cells counted by arm(u): same-row cells to the right in weakly
    // shorter columns, then row-below cells to the left in strictly shorter
    // columns. These are exactly the third cells of the triples at u.
    std::vector<Cell> arm_cells(Cell u) const;

    std::optional<Cell> south(Cell u) const;
    bool attacks(Cell u, Cell v) const;

    // Rows from top to bottom, each row left to right.
    const std::vector<Cell>& reading_cells() const { return reading_; }
    // Cells with a cell below them (all rows except the bottom one).
    const std::vector<Cell>& hat_cells() const { return hat_; }

private:
    void require(Cell u) const;

    Composition heights_;
    std::vector<int> col_offset_;
    int total_ = 0;
    std::vector<Cell> reading_;
    std::vector<Cell> hat_;
};

// h(gamma) = |gamma| - length(gamma), the hat-cell count of dg(inc(gamma)).
int h_stat(const Composition& gamma);

}  // namespace qmac
