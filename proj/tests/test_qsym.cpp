#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qmac/errors.hpp"
#include "qmac/qsym.hpp"

using namespace qmac;

namespace {

QSymExpr unit(int n, Basis b, const std::vector<int>& members) {
    QSymExpr e(n, b);
    e.add(SubsetMask::from_members(n, members), RatExpr(1));
    return e;
}

}  // namespace

TEST_CASE("fundamental to monomial") {
    // F_{1,4} expands over every superset; at degree 5 those are exactly the
    // four subsets obtained by refining the middle part of (1,3,1).
    QSymExpr m = f_to_m(unit(5, Basis::Fundamental, {1, 4}));
    CHECK(m.basis() == Basis::Monomial);
    CHECK(m.coeffs().size() == 4);
    for (auto members : std::vector<std::vector<int>>{
             {1, 4}, {1, 2, 4}, {1, 3, 4}, {1, 2, 3, 4}})
        CHECK(m.coefficient(SubsetMask::from_members(5, members)) == RatExpr(1));
    CHECK(m.coefficient(SubsetMask::from_members(5, {4})) == RatExpr(0));

    // At degree 8 the same subset has 2^5 supersets, each with coefficient 1.
    QSymExpr big = f_to_m(unit(8, Basis::Fundamental, {1, 4}));
    CHECK(big.coeffs().size() == 32);
    SubsetMask base = SubsetMask::from_members(8, {1, 4});
    for (const auto& [bits, coeff] : big.coeffs()) {
        CHECK(base.subset_of(SubsetMask(8, bits)));
        CHECK(coeff == RatExpr(1));
    }

    // The full set has no proper supersets.
    CHECK(f_to_m(unit(4, Basis::Fundamental, {1, 2, 3})) ==
          unit(4, Basis::Monomial, {1, 2, 3}));

    QSymExpr f_empty = f_to_m(unit(2, Basis::Fundamental, {}));
    CHECK(f_empty.coefficient(SubsetMask::from_members(2, {})) == RatExpr(1));
    CHECK(f_empty.coefficient(SubsetMask::from_members(2, {1})) == RatExpr(1));
}

TEST_CASE("monomial to fundamental") {
    QSymExpr f = m_to_f(unit(2, Basis::Monomial, {}));
    CHECK(f.basis() == Basis::Fundamental);
    CHECK(f.coefficient(SubsetMask::from_members(2, {})) == RatExpr(1));
    CHECK(f.coefficient(SubsetMask::from_members(2, {1})) == RatExpr(-1));

    CHECK(m_to_f(unit(5, Basis::Monomial, {1, 2, 3, 4})) ==
          unit(5, Basis::Fundamental, {1, 2, 3, 4}));
}

TEST_CASE("basis conversions invert each other on all basis elements") {
    for (int n = 1; n <= 10; ++n)
        for (uint64_t bits = 0; bits < (uint64_t(1) << (n - 1)); ++bits) {
            SubsetMask s(n, bits);
            QSymExpr f(n, Basis::Fundamental);
            f.add(s, RatExpr(1));
            CHECK(m_to_f(f_to_m(f)) == f);
            QSymExpr m(n, Basis::Monomial);
            m.add(s, RatExpr(1));
            CHECK(f_to_m(m_to_f(m)) == m);
        }
}

TEST_CASE("basis conversions invert each other on random expressions") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng() % 8);
        QSymExpr e(n, trial % 2 == 0 ? Basis::Fundamental : Basis::Monomial);
        for (int k = 0; k < 4; ++k) {
            SubsetMask s(n, rng() & ((uint64_t(1) << (n - 1)) - 1));
            Poly coeff = Poly::term({unsigned(rng() % 3), unsigned(rng() % 3), 0},
                                    Rational(int(rng() % 9) - 4));
            e.add(s, RatExpr(coeff));
        }
        if (e.basis() == Basis::Fundamental)
            CHECK(m_to_f(f_to_m(e)) == e);
        else
            CHECK(f_to_m(m_to_f(e)) == e);
    }
}

TEST_CASE("conversions are linear") {
    QSymExpr a = unit(4, Basis::Fundamental, {1});
    QSymExpr b = unit(4, Basis::Fundamental, {2, 3});
    RatExpr c(Poly::var_t() - Poly(2));
    CHECK(f_to_m(a.scaled(c) + b) == f_to_m(a).scaled(c) + f_to_m(b));
}

TEST_CASE("degree and basis mismatches are rejected") {
    QSymExpr e(3, Basis::Monomial);
    CHECK_THROWS_AS(e.add(SubsetMask::from_members(4, {2}), RatExpr(1)),
                    PreconditionViolated);
    QSymExpr other(4, Basis::Monomial);
    CHECK_THROWS_AS(e += other, PreconditionViolated);
    QSymExpr fb(3, Basis::Fundamental);
    CHECK_THROWS_AS(e += fb, PreconditionViolated);
    CHECK_THROWS_AS((void)f_to_m(e), PreconditionViolated);
    CHECK_THROWS_AS((void)m_to_f(fb), PreconditionViolated);
}

TEST_CASE("zero coefficients are pruned") {
    QSymExpr e(3, Basis::Monomial);
    SubsetMask s = SubsetMask::from_members(3, {1});
    e.add(s, RatExpr(Poly::var_t()));
    e.add(s, RatExpr(-Poly::var_t()));
    CHECK(e.coeffs().empty());
    CHECK(e == QSymExpr(3, Basis::Monomial));
}

TEST_CASE("monomial expansion") {
    // M_{1} at degree 3 is the composition (1,2): sum over i<j of x_i x_j^2.
    XPoly two_vars = expand_vars(unit(3, Basis::Monomial, {1}), 2);
    CHECK(two_vars.terms().size() == 1);
    CHECK(two_vars.coefficient({1, 2}) == RatExpr(1));

    XPoly three_vars = expand_vars(unit(3, Basis::Monomial, {1}), 3);
    CHECK(three_vars.terms().size() == 3);
    CHECK(three_vars.coefficient({1, 2, 0}) == RatExpr(1));
    CHECK(three_vars.coefficient({1, 0, 2}) == RatExpr(1));
    CHECK(three_vars.coefficient({0, 1, 2}) == RatExpr(1));
    CHECK(three_vars.coefficient({2, 1, 0}) == RatExpr(0));

    // Fewer variables than parts leaves nothing.
    CHECK(expand_vars(unit(3, Basis::Monomial, {1, 2}), 2).terms().empty());
}

TEST_CASE("fundamental expansion") {
    XPoly f1 = expand_vars(unit(2, Basis::Fundamental, {1}), 2);
    CHECK(f1.terms().size() == 1);
    CHECK(f1.coefficient({1, 1}) == RatExpr(1));

    // F with empty subset in 2 variables: all weak words of length 2.
    XPoly f_empty = expand_vars(unit(2, Basis::Fundamental, {}), 2);
    CHECK(f_empty.coefficient({2, 0}) == RatExpr(1));
    CHECK(f_empty.coefficient({1, 1}) == RatExpr(1));
    CHECK(f_empty.coefficient({0, 2}) == RatExpr(1));
}

TEST_CASE("the two expansion routes agree") {
    for (int n = 1; n <= 6; ++n)
        for (uint64_t bits = 0; bits < (uint64_t(1) << (n - 1)); ++bits)
            for (int m = 1; m <= 4; ++m) {
                QSymExpr f(n, Basis::Fundamental);
                f.add(SubsetMask(n, bits), RatExpr(1));
                CHECK(expand_vars(f, m) == expand_vars(f_to_m(f), m));
            }
}

TEST_CASE("expansion is linear") {
    QSymExpr e(3, Basis::Monomial);
    e.add(SubsetMask::from_members(3, {1}), RatExpr(Poly::var_q()));
    e.add(SubsetMask::from_members(3, {2}), RatExpr(-3));
    XPoly direct = expand_vars(e, 3);
    XPoly sum = expand_vars(unit(3, Basis::Monomial, {1}).scaled(RatExpr(Poly::var_q())), 3);
    sum += expand_vars(unit(3, Basis::Monomial, {2}).scaled(RatExpr(-3)), 3);
    CHECK(direct == sum);
}

TEST_CASE("symmetry detection") {
    QSymExpr orbit(3, Basis::Monomial);
    orbit.add(comp_subset({1, 2}), RatExpr(1));
    orbit.add(comp_subset({2, 1}), RatExpr(1));
    CHECK(is_symmetric(orbit));

    CHECK(is_symmetric(unit(3, Basis::Monomial, {})));  // M_{(3)} alone

    QSymExpr half(3, Basis::Monomial);
    half.add(comp_subset({1, 2}), RatExpr(1));
    CHECK(!is_symmetric(half));

    QSymExpr uneven(3, Basis::Monomial);
    uneven.add(comp_subset({1, 2}), RatExpr(1));
    uneven.add(comp_subset({2, 1}), RatExpr(Poly::var_t()));
    CHECK(!is_symmetric(uneven));

    CHECK_THROWS_AS((void)is_symmetric(unit(3, Basis::Fundamental, {})),
                    PreconditionViolated);
}

TEST_CASE("qsym rendering") {
    QSymExpr e(3, Basis::Monomial);
    e.add(SubsetMask::from_members(3, {}), RatExpr(1));
    RatExpr c(Poly(1) - Poly::var_t());
    c.divide_by(DenFactor::qt_binomial(1, 2));
    e.add(SubsetMask::from_members(3, {1, 2}), c);
    CHECK(e.str() == "M_{} + (1 - t) / (1 - q t^2)·M_{1,2}");
    CHECK(e.latex() ==
          "M_{\\{\\}} + \\frac{1-t}{(1-qt^{2})} M_{\\{1,2\\}}");
}

TEST_CASE("xpoly arithmetic and rendering") {
    XPoly p(2);
    p.add({1, 2}, RatExpr(1));
    p.add({1, 2}, RatExpr(2));
    CHECK(p.coefficient({1, 2}) == RatExpr(3));
    XPoly q(2);
    q.add({1, 2}, RatExpr(-3));
    q.add({0, 1}, RatExpr(Poly::var_q()));
    p += q;
    CHECK(p.coefficient({1, 2}) == RatExpr(0));
    CHECK(p.terms().size() == 1);
    CHECK(p.str() == "q·x2");
    CHECK_THROWS_AS(p.add({1}, RatExpr(1)), PreconditionViolated);
    XPoly three(3);
    CHECK_THROWS_AS(p += three, PreconditionViolated);
}
