#include "qmac/filling.hpp"

#include <algorithm>
#include <sstream>

#include "qmac/errors.hpp"

namespace qmac {

Filling::Filling(Diagram d, std::vector<int> entries)
    : d_(std::move(d)), entries_(std::move(entries)) {
    if (int(entries_.size()) != d_.size())
        throw PreconditionViolated("entry count does not match diagram size");
    for (int e : entries_)
        if (e < 1) throw PreconditionViolated("entries must be positive");
}

Filling Filling::from_columns(const std::vector<std::vector<int>>& cols) {
    Composition heights;
    std::vector<int> entries;
    for (const auto& col : cols) {
        heights.push_back(int(col.size()));
        entries.insert(entries.end(), col.begin(), col.end());
    }
    return Filling(Diagram(std::move(heights)), std::move(entries));
}

Filling Filling::parse(const std::string& text) {
    std::vector<std::vector<int>> cols;
    std::istringstream in(text);
    std::string col_text;
    while (std::getline(in, col_text, ';')) {
        Composition col = parse_composition(col_text);
        cols.emplace_back(col.begin(), col.end());
    }
    if (cols.empty()) throw PreconditionViolated("empty filling text");
    return from_columns(cols);
}

std::vector<std::vector<int>> Filling::columns() const {
    std::vector<std::vector<int>> out(d_.columns());
    for (int c = 1; c <= d_.columns(); ++c)
        for (int r = 1; r <= d_.height(c); ++r) out[c - 1].push_back(at({r, c}));
    return out;
}

std::string Filling::str() const {
    std::ostringstream os;
    auto cols = columns();
    for (size_t c = 0; c < cols.size(); ++c) {
        if (c) os << ';';
        for (size_t r = 0; r < cols[c].size(); ++r) {
            if (r) os << ',';
            os << cols[c][r];
        }
    }
    return os.str();
}

int Filling::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool Filling::is_packed() const {
    std::vector<bool> seen(size_t(max_entry()), false);
    for (int e : entries_) seen[e - 1] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

Composition Filling::content() const {
    Composition counts(size_t(max_entry()), 0);
    for (int e : entries_) ++counts[e - 1];
    return counts;
}

std::vector<int> Filling::reading_word() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (Cell u : d_.reading_cells()) out.push_back(at(u));
    return out;
}

std::vector<Cell> Filling::descent_cells() const {
    std::vector<Cell> out;
    for (Cell u : d_.hat_cells())
        if (at(u) > at(*d_.south(u))) out.push_back(u);
    return out;
}

std::vector<int> Filling::descent_values() const {
    std::vector<int> out;
    for (Cell u : descent_cells()) out.push_back(at(u));
    std::sort(out.begin(), out.end());
    return out;
}

int Filling::maj() const {
    int sum = 0;
    for (Cell u : descent_cells()) sum += d_.leg(u) + 1;
    return sum;
}

bool is_coinversion(int x, int y, int z) {
    return (x < z && z < y) || (z < y && y < x) || (y < x && x < z);
}

int Filling::coinv() const {
    int count = 0;
    for (Cell u : d_.hat_cells()) {
        int x = at(u);
        int y = at(*d_.south(u));
        for (Cell zc : d_.arm_cells(u))
            if (is_coinversion(x, y, at(zc))) ++count;
    }
    return count;
}

RatExpr Filling::weight() const {
    RatExpr w(Poly::qt_monomial(unsigned(maj()), unsigned(coinv())));
    Poly one_minus_t = Poly(1) - Poly::var_t();
    for (Cell u : d_.hat_cells()) {
        if (at(u) == at(*d_.south(u))) continue;
        w *= RatExpr(one_minus_t);
        w.divide_by(DenFactor::qt_binomial(unsigned(d_.leg(u) + 1), unsigned(d_.arm(u) + 1)));
    }
    return w;
}

bool Filling::is_non_attacking() const {
    const auto& cells = d_.reading_cells();
    for (size_t i = 0; i < cells.size(); ++i)
        for (size_t j = i + 1; j < cells.size(); ++j)
            if (at(cells[i]) == at(cells[j]) && d_.attacks(cells[i], cells[j])) return false;
    return true;
}

bool bottom_row_ok(const Filling& T, const Composition& gamma) {
    if (T.diagram().heights() != inc_sort(gamma))
        throw PreconditionViolated("filling shape is not dg(inc(gamma))");
    Permutation beta = beta_perm(gamma);
    const int m = T.diagram().columns();
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            int bi = T.at({1, i});
            int bj = T.at({1, j});
            if (bi == bj) return false;
            if ((bi < bj) != (beta[i - 1] < beta[j - 1])) return false;
        }
    }
    return true;
}

}  // namespace qmac
