#include "qmac/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "qmac/errors.hpp"

namespace qmac {

std::string Cell::str() const {
    std::ostringstream os;
    os << '(' << row << ',' << col << ')';
    return os.str();
}

Diagram::Diagram(Composition heights) : heights_(std::move(heights)) {
    col_offset_.reserve(heights_.size());
    for (int h : heights_) {
        if (h < 0) throw PreconditionViolated("negative column height");
        col_offset_.push_back(total_);
        total_ += h;
    }
    int max_h = heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
    for (int r = max_h; r >= 1; --r)
        for (int c = 1; c <= columns(); ++c)
            if (height(c) >= r) reading_.push_back({r, c});
    for (Cell u : reading_)
        if (u.row >= 2) hat_.push_back(u);
}

bool Diagram::contains(Cell u) const {
    return u.col >= 1 && u.col <= columns() && u.row >= 1 && u.row <= height(u.col);
}

void Diagram::require(Cell u) const {
    if (!contains(u)) throw CellOutOfDiagram("cell " + u.str() + " not in diagram");
}

int Diagram::index_of(Cell u) const {
    require(u);
    return col_offset_[u.col - 1] + u.row - 1;
}

Cell Diagram::cell_at(int index) const {
    if (index < 0 || index >= total_) throw CellOutOfDiagram("cell index out of range");
    int c = int(std::upper_bound(col_offset_.begin(), col_offset_.end(), index) -
                col_offset_.begin());
    return {index - col_offset_[c - 1] + 1, c};
}

int Diagram::leg(Cell u) const {
    require(u);
    return height(u.col) - u.row;
}

std::vector<Cell> Diagram::arm_cells(Cell u) const {
    require(u);
    std::vector<Cell> out;
    for (int j = u.col + 1; j <= columns(); ++j)
        if (height(j) <= height(u.col) && height(j) >= u.row) out.push_back({u.row, j});
    if (u.row >= 2)
        for (int j = 1; j < u.col; ++j)
            if (height(j) < height(u.col) && height(j) >= u.row - 1) out.push_back({u.row - 1, j});
    return out;
}

int Diagram::arm(Cell u) const { return int(arm_cells(u).size()); }

std::optional<Cell> Diagram::south(Cell u) const {
    require(u);
    if (u.row == 1) return std::nullopt;
    return Cell{u.row - 1, u.col};
}

bool Diagram::attacks(Cell u, Cell v) const {
    require(u);
    require(v);
    if (u == v) return false;
    if (u.row == v.row) return true;
    if (u.row == v.row + 1) return u.col > v.col;
    if (v.row == u.row + 1) return v.col > u.col;
    return false;
}

int h_stat(const Composition& gamma) {
    if (!is_strong(gamma)) throw PreconditionViolated("h_stat needs a strong composition");
    return comp_size(gamma) - int(gamma.size());
}

}  // namespace qmac
