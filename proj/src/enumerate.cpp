#include "qmac/enumerate.hpp"

#include <algorithm>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

void check_bound(const Composition& gamma, int max_n) {
    if (!is_strong(gamma)) throw PreconditionViolated("enumeration needs a strong composition");
    if (comp_size(gamma) > max_n)
        throw SizeLimitExceeded("composition size " + std::to_string(comp_size(gamma)) +
                                " exceeds the bound " + std::to_string(max_n));
}

// For each cell in fill order, the diagram indices of attacking cells filled
// before it (prefilled cells count as filled first).
std::vector<std::vector<int>> earlier_attackers(const Diagram& d, const std::vector<Cell>& order,
                                                const std::vector<Cell>& prefilled) {
    std::vector<std::vector<int>> out(order.size());
    for (size_t p = 0; p < order.size(); ++p) {
        for (Cell v : prefilled)
            if (d.attacks(order[p], v)) out[p].push_back(d.index_of(v));
        for (size_t q = 0; q < p; ++q)
            if (d.attacks(order[p], order[q])) out[p].push_back(d.index_of(order[q]));
    }
    return out;
}

// Shared state for the bottom-row pattern: entries must be distinct and
// order-equivalent to beta, checked as each bottom cell is placed.
struct BottomPattern {
    Permutation beta;
    std::vector<int> placed;  // bottom entries so far, left to right

    bool admits(int value) const {
        size_t k = placed.size();
        for (size_t i = 0; i < k; ++i) {
            if (placed[i] == value) return false;
            if ((placed[i] < value) != (beta[i] < beta[k])) return false;
        }
        return true;
    }
};

}  // namespace

void for_each_packed_nat(const Composition& gamma, const std::function<void(const Filling&)>& fn,
                         int max_n) {
    check_bound(gamma, max_n);
    Diagram d(inc_sort(gamma));
    const int n = d.size();
    const auto& order = d.reading_cells();
    auto attackers = earlier_attackers(d, order, {});
    BottomPattern bottom{beta_perm(gamma), {}};

    std::vector<int> entries(size_t(n), 0);
    std::vector<int> counts(size_t(n) + 1, 0);
    int max_used = 0;
    int distinct = 0;

    auto rec = [&](auto&& self, int p) -> void {
        if (p == n) {
            fn(Filling(d, entries));
            return;
        }
        Cell u = order[p];
        int idx = d.index_of(u);
        for (int v = 1; v <= n; ++v) {
            // Packed fillings use exactly 1..m: every value below the running
            // maximum must still fit into the remaining cells.
            int new_max = std::max(max_used, v);
            int new_distinct = distinct + (counts[v] == 0 ? 1 : 0);
            if (new_max - new_distinct > n - p - 1) {
                if (v > max_used) break;  // larger v only widens the gap
                continue;
            }
            bool clash = false;
            for (int a : attackers[p])
                if (entries[a] == v) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            if (u.row == 1 && !bottom.admits(v)) continue;

            entries[idx] = v;
            ++counts[v];
            std::swap(max_used, new_max);
            std::swap(distinct, new_distinct);
            if (u.row == 1) bottom.placed.push_back(v);

            self(self, p + 1);

            if (u.row == 1) bottom.placed.pop_back();
            std::swap(max_used, new_max);
            std::swap(distinct, new_distinct);
            --counts[v];
            entries[idx] = 0;
        }
    };
    rec(rec, 0);
}

std::vector<Filling> enumerate_packed_nat(const Composition& gamma, int max_n) {
    std::vector<Filling> out;
    for_each_packed_nat(gamma, [&](const Filling& f) { out.push_back(f); }, max_n);
    return out;
}

void for_each_standard(const Composition& gamma, StandardClass cls,
                       const std::function<void(const StandardFilling&)>& fn, int max_n) {
    check_bound(gamma, max_n);
    Diagram d(inc_sort(gamma));
    const int n = d.size();
    const auto& order = d.reading_cells();
    BottomPattern bottom{beta_perm(gamma), {}};

    std::vector<int> entries(size_t(n), 0);
    std::vector<bool> used(size_t(n) + 1, false);

    auto rec = [&](auto&& self, int p) -> void {
        if (p == n) {
            fn(StandardFilling(Filling(d, entries)));
            return;
        }
        Cell u = order[p];
        int idx = d.index_of(u);
        // The cell above u was filled earlier, so u decides whether it is a
        // descent; distinct entries make attack checks unnecessary.
        Cell north{u.row + 1, u.col};
        int above = d.contains(north) ? entries[d.index_of(north)] : 0;
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            if (above != 0 && above > v) {
                if (cls == StandardClass::NoDescents) continue;
                if (cls == StandardClass::UnitDescents && above != v + 1) continue;
            }
            if (u.row == 1 && !bottom.admits(v)) continue;

            entries[idx] = v;
            used[v] = true;
            if (u.row == 1) bottom.placed.push_back(v);

            self(self, p + 1);

            if (u.row == 1) bottom.placed.pop_back();
            used[v] = false;
            entries[idx] = 0;
        }
    };
    rec(rec, 0);
}

namespace {

std::vector<StandardFilling> collect_standard(const Composition& gamma, StandardClass cls,
                                              int max_n) {
    std::vector<StandardFilling> out;
    for_each_standard(gamma, cls, [&](const StandardFilling& f) { out.push_back(f); }, max_n);
    return out;
}

}  // namespace

std::vector<StandardFilling> enumerate_st(const Composition& gamma, int max_n) {
    return collect_standard(gamma, StandardClass::All, max_n);
}

std::vector<StandardFilling> enumerate_st0(const Composition& gamma, int max_n) {
    return collect_standard(gamma, StandardClass::NoDescents, max_n);
}

std::vector<StandardFilling> enumerate_st1(const Composition& gamma, int max_n) {
    return collect_standard(gamma, StandardClass::UnitDescents, max_n);
}

void for_each_nat_bounded(const Diagram& d, const std::vector<int>& bottom_row, int m,
                          const std::function<void(const Filling&)>& fn) {
    if (int(bottom_row.size()) != d.columns())
        throw PreconditionViolated("bottom row length does not match the diagram");
    std::vector<Cell> prefilled;
    for (int c = 1; c <= d.columns(); ++c) prefilled.push_back({1, c});
    const auto& order = d.hat_cells();
    auto attackers = earlier_attackers(d, order, prefilled);

    std::vector<int> entries(size_t(d.size()), 0);
    for (int c = 1; c <= d.columns(); ++c) {
        if (bottom_row[c - 1] < 1 || bottom_row[c - 1] > m)
            throw PreconditionViolated("bottom row entry out of range");
        entries[d.index_of({1, c})] = bottom_row[c - 1];
    }
    for (size_t i = 0; i < prefilled.size(); ++i)
        for (size_t j = i + 1; j < prefilled.size(); ++j)
            if (entries[d.index_of(prefilled[i])] == entries[d.index_of(prefilled[j])])
                throw PreconditionViolated("bottom row entries attack each other");

    const int cells = int(order.size());
    auto rec = [&](auto&& self, int p) -> void {
        if (p == cells) {
            fn(Filling(d, entries));
            return;
        }
        int idx = d.index_of(order[p]);
        for (int v = 1; v <= m; ++v) {
            bool clash = false;
            for (int a : attackers[p])
                if (entries[a] == v) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            entries[idx] = v;
            self(self, p + 1);
            entries[idx] = 0;
        }
    };
    rec(rec, 0);
}

}  // namespace qmac
