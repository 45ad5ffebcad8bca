#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qmac/composition.hpp"
#include "qmac/diagram.hpp"
#include "qmac/errors.hpp"

using namespace qmac;

TEST_CASE("collapse") {
    CHECK(collapse({2, 1, 0, 0, 3, 0, 1}) == Composition{2, 1, 3, 1});
    CHECK(collapse({0, 4, 0, 3, 1, 0, 0, 3}) == Composition{4, 3, 1, 3});
    CHECK(collapse({3, 2}) == Composition{3, 2});
    CHECK(collapse({0, 0}) == Composition{});
}

TEST_CASE("inc_sort") {
    CHECK(inc_sort({2, 1, 0, 0, 3, 0, 1}) == Composition{0, 0, 0, 1, 1, 2, 3});
    CHECK(inc_sort({0, 4, 0, 3, 1, 0, 0, 3}) == Composition{0, 0, 0, 0, 1, 3, 3, 4});
    CHECK(inc_sort({1, 2, 3}) == Composition{1, 2, 3});
}

TEST_CASE("beta_perm") {
    CHECK(beta_perm({2, 1, 0, 0, 3, 0, 1}) == Permutation{6, 4, 3, 7, 2, 1, 5});
    CHECK(beta_perm({0, 4, 0, 3, 1, 0, 0, 3}) == Permutation{7, 6, 3, 1, 5, 8, 4, 2});
    CHECK(beta_perm({1, 2}) == Permutation{1, 2});
    CHECK(beta_perm({4, 3, 1, 3}) == Permutation{3, 4, 2, 1});
}

TEST_CASE("beta_perm sorts and maximizes inversions") {
    // Brute force: over all weak alpha with length <= 6 and parts <= 3,
    // every permutation sorting alpha has at most as many inversions as beta.
    std::vector<Composition> stack{{}};
    while (!stack.empty()) {
        Composition alpha = stack.back();
        stack.pop_back();
        if (alpha.size() < 6)
            for (int part = 0; part <= 3; ++part) {
                Composition next = alpha;
                next.push_back(part);
                stack.push_back(next);
            }
        if (alpha.empty()) continue;

        Permutation beta = beta_perm(alpha);
        Composition sorted = inc_sort(alpha);
        const int m = int(alpha.size());
        REQUIRE(int(beta.size()) == m);
        for (int i = 0; i < m; ++i) REQUIRE(alpha[beta[i] - 1] == sorted[i]);

        int best = 0;
        Permutation perm(m);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            bool sorts = true;
            for (int i = 0; i < m && sorts; ++i) sorts = alpha[perm[i] - 1] == sorted[i];
            if (sorts) best = std::max(best, inversion_count(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(inversion_count(beta) == best);
    }
}

TEST_CASE("composition subset bijection") {
    CHECK(comp_subset({2, 1, 3, 2}) == SubsetMask::from_members(8, {2, 3, 6}));
    CHECK(comp_subset({5}) == SubsetMask::from_members(5, {}));
    CHECK(comp_subset({1, 1, 1}) == SubsetMask::from_members(3, {1, 2}));
    CHECK(subset_comp(SubsetMask::from_members(8, {2, 3, 6})) == Composition{2, 1, 3, 2});
    CHECK(subset_comp(SubsetMask::from_members(5, {})) == Composition{5});
}

TEST_CASE("subset bijection is exhaustive through degree 12") {
    for (int n = 1; n <= 12; ++n) {
        auto all = strong_compositions(n);
        CHECK(int(all.size()) == (1 << (n - 1)));
        for (const Composition& gamma : all) {
            SubsetMask s = comp_subset(gamma);
            CHECK(subset_comp(s) == gamma);
        }
        for (uint64_t bits = 0; bits < (uint64_t(1) << (n - 1)); ++bits) {
            SubsetMask s(n, bits);
            CHECK(comp_subset(subset_comp(s)) == s);
        }
    }
}

TEST_CASE("subset mask basics") {
    SubsetMask s = SubsetMask::from_members(7, {2, 3, 6});
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<int>{2, 3, 6});
    CHECK(s.contains(2));
    CHECK(!s.contains(1));
    CHECK(s.str() == "{2,3,6}");
    CHECK(s.subset_of(SubsetMask::from_members(7, {1, 2, 3, 6})));
    CHECK(!SubsetMask::from_members(7, {1, 2}).subset_of(s));
    CHECK(s.unioned(SubsetMask::from_members(7, {1})) ==
          SubsetMask::from_members(7, {1, 2, 3, 6}));
    CHECK_THROWS_AS(SubsetMask(4, 0b1000), PreconditionViolated);
    CHECK_THROWS_AS(SubsetMask::from_members(3, {3}), PreconditionViolated);
}

TEST_CASE("composition parsing") {
    CHECK(parse_composition("1,4,3") == Composition{1, 4, 3});
    CHECK(parse_composition("7") == Composition{7});
    CHECK(composition_str({1, 4, 3}) == "(1,4,3)");
    CHECK_THROWS_AS(parse_composition(""), PreconditionViolated);
    CHECK_THROWS_AS(parse_composition("1,,2"), PreconditionViolated);
    CHECK_THROWS_AS(parse_composition("1,-2"), PreconditionViolated);
    CHECK_THROWS_AS(parse_composition("1,x"), PreconditionViolated);
}

TEST_CASE("figure-style arm and leg") {
    Diagram d(Composition{3, 1, 4, 2, 1, 4, 3, 5, 4});
    Cell u{3, 6};
    CHECK(d.leg(u) == 1);
    CHECK(d.arm(u) == 4);

    Diagram small(Composition{1, 2});
    CHECK(small.leg({2, 2}) == 0);
    CHECK(small.arm({2, 2}) == 1);
    CHECK(small.arm_cells({2, 2}) == std::vector<Cell>{{1, 1}});

    // Top cell of any column has leg 0.
    for (int c = 1; c <= d.columns(); ++c) CHECK(d.leg({d.height(c), c}) == 0);

    CHECK_THROWS_AS(d.leg({6, 1}), CellOutOfDiagram);
    CHECK_THROWS_AS(d.arm({1, 10}), CellOutOfDiagram);
}

TEST_CASE("south") {
    Diagram d(Composition{1, 3});
    CHECK(d.south({2, 2}) == Cell{1, 2});
    CHECK(d.south({3, 2}) == Cell{2, 2});
    CHECK(!d.south({1, 1}).has_value());
    CHECK(!d.south({1, 2}).has_value());
}

TEST_CASE("attack relation") {
    Diagram d(Composition{1, 2});
    CHECK(d.attacks({1, 1}, {1, 2}));
    CHECK(d.attacks({2, 2}, {1, 1}));
    CHECK(!d.attacks({2, 2}, {1, 2}));
    CHECK(!d.attacks({1, 1}, {1, 1}));
}

TEST_CASE("attack relation is symmetric") {
    for (Composition heights :
         {Composition{1, 3, 4}, Composition{2, 2, 2}, Composition{1, 1, 5}}) {
        Diagram d(heights);
        for (Cell u : d.reading_cells())
            for (Cell v : d.reading_cells())
                CHECK(d.attacks(u, v) == d.attacks(v, u));
    }
}

TEST_CASE("reading order") {
    Diagram d(Composition{1, 3, 4});
    std::vector<Cell> expected{{4, 3}, {3, 2}, {3, 3}, {2, 2}, {2, 3},
                               {1, 1}, {1, 2}, {1, 3}};
    CHECK(d.reading_cells() == expected);

    Diagram column(Composition{4});
    CHECK(column.reading_cells() == std::vector<Cell>{{4, 1}, {3, 1}, {2, 1}, {1, 1}});

    Diagram row(Composition{1, 1, 1});
    CHECK(row.reading_cells() == std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}});

    // Hat cells are the reading cells above the bottom row.
    std::vector<Cell> hat{{4, 3}, {3, 2}, {3, 3}, {2, 2}, {2, 3}};
    CHECK(d.hat_cells() == hat);
}

TEST_CASE("cell index round trip") {
    Diagram d(Composition{1, 3, 4});
    for (int i = 0; i < d.size(); ++i) CHECK(d.index_of(d.cell_at(i)) == i);
    CHECK(d.index_of({1, 1}) == 0);
    CHECK(d.index_of({1, 2}) == 1);
    CHECK(d.index_of({3, 2}) == 3);
    CHECK(d.index_of({1, 3}) == 4);
    CHECK_THROWS_AS(d.cell_at(8), CellOutOfDiagram);
    CHECK_THROWS_AS(d.index_of({2, 1}), CellOutOfDiagram);
}

TEST_CASE("h statistic") {
    CHECK(h_stat({1, 4, 3}) == 5);
    CHECK(h_stat({1, 2}) == 1);
    CHECK(h_stat({6}) == 5);
    CHECK(h_stat({1, 1, 1, 1}) == 0);
    CHECK(int(Diagram(inc_sort({1, 4, 3})).hat_cells().size()) == h_stat({1, 4, 3}));
    CHECK_THROWS_AS(h_stat({1, 0, 2}), PreconditionViolated);
}

TEST_CASE("arm and leg ignore zero columns") {
    // Statistics on dg(inc(alpha)) with zero columns match dg(inc(alpha+))
    // under the column shift that drops the zero columns.
    std::vector<Composition> stack{{}};
    while (!stack.empty()) {
        Composition alpha = stack.back();
        stack.pop_back();
        if (alpha.size() < 5)
            for (int part = 0; part <= 3; ++part) {
                Composition next = alpha;
                next.push_back(part);
                stack.push_back(next);
            }
        if (comp_size(alpha) == 0) continue;

        Diagram weak(inc_sort(alpha));
        Diagram strong(inc_sort(collapse(alpha)));
        int zeros = weak.columns() - strong.columns();
        for (Cell u : strong.reading_cells()) {
            Cell shifted{u.row, u.col + zeros};
            CHECK(weak.leg(shifted) == strong.leg(u));
            CHECK(weak.arm(shifted) == strong.arm(u));
        }
    }
}

TEST_CASE("strong composition enumeration order") {
    auto all = strong_compositions(3);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == Composition{3});
    CHECK(all[1] == Composition{1, 2});
    CHECK(all[2] == Composition{2, 1});
    CHECK(all[3] == Composition{1, 1, 1});
    CHECK_THROWS_AS(strong_compositions(21), PreconditionViolated);
}
