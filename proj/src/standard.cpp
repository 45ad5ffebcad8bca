#include "qmac/standard.hpp"

#include <algorithm>
#include <numeric>

#include "qmac/errors.hpp"

namespace qmac {

StandardFilling::StandardFilling(Filling f) : f_(std::move(f)) {
    const int n = f_.size();
    cell_index_of_value_.assign(size_t(n), -1);
    for (int i = 0; i < n; ++i) {
        int v = f_.at_index(i);
        if (v > n || cell_index_of_value_[v - 1] != -1)
            throw PreconditionViolated("entries are not a bijection onto 1..n");
        cell_index_of_value_[v - 1] = i;
    }
}

Cell StandardFilling::cell_of(int value) const {
    if (value < 1 || value > size()) throw PreconditionViolated("value out of range");
    return diagram().cell_at(cell_index_of_value_[value - 1]);
}

SubsetMask StandardFilling::inverse_descents() const {
    const int n = size();
    std::vector<int> pos(size_t(n) + 1, 0);
    std::vector<int> rw = f_.reading_word();
    for (int i = 0; i < n; ++i) pos[rw[i]] = i;
    SubsetMask id(n, 0);
    for (int i = 1; i < n; ++i)
        if (pos[i + 1] < pos[i]) id.insert(i);
    return id;
}

SubsetMask StandardFilling::v_set() const {
    SubsetMask v = inverse_descents();
    for (int i = 1; i < size(); ++i)
        if (diagram().attacks(cell_of(i), cell_of(i + 1))) v.insert(i);
    return v;
}

SubsetMask StandardFilling::w_set() const {
    SubsetMask w(size(), 0);
    for (int i = 1; i < size(); ++i) {
        auto below = diagram().south(cell_of(i));
        if (below && at(*below) == i + 1) w.insert(i);
    }
    return w;
}

bool StandardFilling::in_st1() const {
    for (Cell u : f_.descent_cells())
        if (at(u) != at(*diagram().south(u)) + 1) return false;
    return true;
}

namespace {

bool is_descent_cell(const Filling& f, Cell u) {
    auto below = f.diagram().south(u);
    return below && f.at(u) > f.at(*below);
}

}  // namespace

std::vector<Cell> StandardFilling::descent_group(int value) const {
    Cell bottom = cell_of(value);
    while (is_descent_cell(f_, bottom)) bottom = *diagram().south(bottom);
    Cell top = cell_of(value);
    while (diagram().contains({top.row + 1, top.col}) &&
           is_descent_cell(f_, {top.row + 1, top.col}))
        top = {top.row + 1, top.col};
    std::vector<Cell> out;
    for (int r = bottom.row; r <= top.row; ++r) out.push_back({r, bottom.col});
    return out;
}

SubsetMask StandardFilling::nu_set() const {
    SubsetMask nu = inverse_descents();
    for (int i = 1; i < size(); ++i) {
        if (nu.contains(i)) continue;
        auto gi = descent_group(i);
        auto gj = descent_group(i + 1);
        bool attack = false;
        for (Cell u : gi) {
            for (Cell v : gj)
                if (diagram().attacks(u, v)) {
                    attack = true;
                    break;
                }
            if (attack) break;
        }
        if (attack) nu.insert(i);
    }
    return nu;
}

int StandardFilling::omega() const {
    int shared = 0;
    for (int i = 1; i < size(); ++i)
        if (cell_of(i).col == cell_of(i + 1).col) ++shared;
    return size() - diagram().columns() - shared;
}

int StandardFilling::coinv_des() const {
    int sum = 0;
    for (Cell u : f_.descent_cells()) sum += diagram().arm(u);
    return sum;
}

StandardFilling standardize(const Filling& T) {
    const Diagram& d = T.diagram();
    const int n = T.size();
    std::vector<int> reading_rank(size_t(n), 0);
    {
        int rank = 0;
        for (Cell u : d.reading_cells()) reading_rank[d.index_of(u)] = rank++;
    }
    std::vector<int> order(size_t(n), 0);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (T.at_index(i) != T.at_index(j)) return T.at_index(i) < T.at_index(j);
        return reading_rank[i] < reading_rank[j];
    });
    std::vector<int> entries(size_t(n), 0);
    for (int v = 1; v <= n; ++v) entries[order[v - 1]] = v;
    return StandardFilling(Filling(d, std::move(entries)));
}

Filling destandardize(const StandardFilling& tau, const SubsetMask& S) {
    const int n = tau.size();
    if (S.n != n || !tau.v_set().subset_of(S))
        throw PreconditionViolated("subset does not contain V of the standard filling");
    Composition alpha = subset_comp(S);
    std::vector<int> word;
    word.reserve(size_t(n));
    for (size_t k = 0; k < alpha.size(); ++k)
        word.insert(word.end(), size_t(alpha[k]), int(k) + 1);
    std::vector<int> entries(size_t(n), 0);
    for (int i = 0; i < n; ++i) entries[i] = word[tau.filling().at_index(i) - 1];
    return Filling(tau.diagram(), std::move(entries));
}

RatExpr destandardized_weight(const StandardFilling& tau, const SubsetMask& S) {
    const Diagram& d = tau.diagram();
    SubsetMask w = tau.w_set();
    RatExpr out(Poly::qt_monomial(unsigned(tau.filling().maj()), unsigned(tau.filling().coinv())));
    Poly one_minus_t = Poly(1) - Poly::var_t();
    auto multiply_cell_factor = [&](Cell u) {
        out *= RatExpr(one_minus_t);
        out.divide_by(DenFactor::qt_binomial(unsigned(d.leg(u) + 1), unsigned(d.arm(u) + 1)));
    };
    for (Cell u : d.hat_cells()) {
        int value = tau.at(u);
        if (!w.contains(value) || S.contains(value)) multiply_cell_factor(u);
    }
    return out;
}

StandardFilling iota(const StandardFilling& tau, const SubsetMask& U) {
    if (!tau.in_st0()) throw PreconditionViolated("iota needs a filling with no descents");
    if (U.n != tau.size() || !U.subset_of(tau.w_set()))
        throw PreconditionViolated("iota needs U inside W of the filling");
    std::vector<int> entries = tau.filling().entries();
    const Diagram& d = tau.diagram();
    std::vector<int> run = U.members();
    for (size_t k = 0; k < run.size();) {
        size_t end = k;
        while (end + 1 < run.size() && run[end + 1] == run[end] + 1) ++end;
        int i = run[k];
        int j = run[end] + 1;  // values i..j occupy one vertical strip
        for (int v = i; v <= j; ++v) entries[d.index_of(tau.cell_of(v))] = i + j - v;
        k = end + 1;
    }
    return StandardFilling(Filling(d, std::move(entries)));
}

StandardFilling sort_columns_decreasing(const StandardFilling& tau) {
    const Diagram& d = tau.diagram();
    std::vector<int> entries = tau.filling().entries();
    for (int c = 1; c <= d.columns(); ++c) {
        int lo = d.index_of({1, c});
        int hi = lo + d.height(c);
        std::sort(entries.begin() + lo, entries.begin() + hi, std::greater<int>());
    }
    return StandardFilling(Filling(d, std::move(entries)));
}

}  // namespace qmac
