#pragma once

#include <compare>
#include <map>
#include <string>

#include "qmac/poly.hpp"

namespace qmac {

// Denominator factor kept in factored form. Two shapes arise:
//   QtBinomial  1 - scale * q^c1 * t^c2   (scale is 1 until a variable is
//                                          specialized to a constant)
//   JackLinear  c1 * a + c2               (c1 >= 1, c2 >= 1)
struct DenFactor {
    enum class Kind { QtBinomial, JackLinear };

    Kind kind = Kind::QtBinomial;
    unsigned c1 = 0;
    unsigned c2 = 0;
    Rational scale = 1;

    static DenFactor qt_binomial(unsigned q_exp, unsigned t_exp);
    static DenFactor jack_linear(unsigned a_coeff, unsigned constant);

    Poly to_poly() const;
    Rational eval(const Rational& q, const Rational& t, const Rational& a) const;

    // True when no variable remains (the factor is the constant value()).
    bool is_constant() const;
    Rational constant_value() const;

    bool operator==(const DenFactor&) const = default;
    bool operator<(const DenFactor& rhs) const;

    std::string str() const;
    std::string latex() const;
};

// Quotient of a polynomial by a multiset of denominator factors. The numerator
// is cancelled against the factors by exact division whenever possible, so a
// value equal to a polynomial always has an empty denominator.
class RatExpr {
public:
    using DenMap = std::map<DenFactor, unsigned>;

    RatExpr() = default;
    RatExpr(int constant) : num_(constant) {}
    RatExpr(const Rational& constant) : num_(constant) {}
    RatExpr(Poly numerator) : num_(std::move(numerator)) {}
    RatExpr(Poly numerator, DenMap denominator);

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    const Poly& num() const { return num_; }
    const DenMap& den() const { return den_; }
    Poly den_poly() const;

    RatExpr& operator+=(const RatExpr& rhs);
    RatExpr& operator-=(const RatExpr& rhs);
    RatExpr& operator*=(const RatExpr& rhs);
    friend RatExpr operator+(RatExpr lhs, const RatExpr& rhs) { return lhs += rhs; }
    friend RatExpr operator-(RatExpr lhs, const RatExpr& rhs) { return lhs -= rhs; }
    friend RatExpr operator*(const RatExpr& lhs, const RatExpr& rhs);
    RatExpr operator-() const;

    // Multiplies the denominator by one more copy of the factor.
    RatExpr& divide_by(const DenFactor& factor);

    // Substitutes constants for variables. Fully specialized factors fold into
    // the numerator; a factor that becomes zero throws ZeroDenominator naming
    // the factor.
    RatExpr specialized(const Assignment& values) const;
    Rational eval(const Rational& q, const Rational& t, const Rational& a) const;

    // Equality of the represented rational functions (cross multiplication),
    // independent of how each side happens to be factored.
    bool operator==(const RatExpr& rhs) const;

    std::string str() const;
    std::string latex() const;

private:
    void normalize();

    Poly num_;
    DenMap den_;
};

}  // namespace qmac
