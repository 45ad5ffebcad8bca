#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmac/composition.hpp"
#include "qmac/ratexpr.hpp"

namespace qmac {

enum class Basis { Monomial, Fundamental };

std::string basis_letter(Basis b);  // "M" or "F"

// Degree-graded quasisymmetric expression: coefficients indexed by subsets of
// [n-1] in a fixed basis. Subsets iterate as ascending bitmasks, zero
// coefficients are pruned, so equal expressions have equal representations.
class QSymExpr {
public:
    QSymExpr(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<uint64_t, RatExpr>& coeffs() const { return coeffs_; }

    void add(const SubsetMask& s, const RatExpr& coeff);
    RatExpr coefficient(const SubsetMask& s) const;

    QSymExpr& operator+=(const QSymExpr& rhs);
    friend QSymExpr operator+(QSymExpr lhs, const QSymExpr& rhs) { return lhs += rhs; }
    QSymExpr scaled(const RatExpr& factor) const;

    QSymExpr specialized(const Assignment& values) const;

    bool operator==(const QSymExpr&) const = default;

    std::string str() const;
    std::string latex() const;

private:
    int degree_;
    Basis basis_;
    std::map<uint64_t, RatExpr> coeffs_;
};

// F_S = sum of M_S' over supersets S' of S.
QSymExpr f_to_m(const QSymExpr& e);
// M_S = sum over supersets of (-1)^|S'\S| F_S'; inverse of f_to_m.
QSymExpr m_to_f(const QSymExpr& e);

// True iff coefficients agree on every pair of subsets whose compositions are
// rearrangements of each other (Monomial basis only).
bool is_symmetric(const QSymExpr& e);

// Exact polynomial in x_1..x_m; the expansion target for truncations.
class XPoly {
public:
    explicit XPoly(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<std::vector<int>, RatExpr>& terms() const { return terms_; }

    void add(const std::vector<int>& exponents, const RatExpr& coeff);
    RatExpr coefficient(const std::vector<int>& exponents) const;

    XPoly& operator+=(const XPoly& rhs);

    bool operator==(const XPoly&) const = default;

    std::string str() const;

private:
    int vars_;
    std::map<std::vector<int>, RatExpr> terms_;
};

// Sums the defining monomials of each basis element over indices up to m.
XPoly expand_vars(const QSymExpr& e, int m);

}  // namespace qmac
