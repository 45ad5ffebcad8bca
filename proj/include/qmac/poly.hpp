#pragma once

#include "qmac/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace qmac {

// Exponent triple of one monomial in the variables q, t and the Jack
// parameter a.
struct Monomial {
    unsigned eq = 0;
    unsigned et = 0;
    unsigned ea = 0;

    unsigned degree() const { return eq + et + ea; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with q > t > a.
struct MonomialOrder {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
        if (lhs.eq != rhs.eq) return lhs.eq < rhs.eq;
        if (lhs.et != rhs.et) return lhs.et < rhs.et;
        return lhs.ea < rhs.ea;
    }
};

// Partial assignment of rational values to the variables.
struct Assignment {
    std::optional<Rational> q;
    std::optional<Rational> t;
    std::optional<Rational> a;

    bool empty() const { return !q && !t && !a; }
};

// Exact multivariate polynomial in q, t, a with Rational coefficients.
// Terms are stored in graded-lex order with no zero coefficients, so equal
// polynomials have identical representations.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Poly() = default;
    Poly(int constant);          // NOLINT(google-explicit-constructor)
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static Poly term(Monomial m, Rational coefficient);
    static Poly var_q() { return term({1, 0, 0}, 1); }
    static Poly var_t() { return term({0, 1, 0}, 1); }
    static Poly var_a() { return term({0, 0, 1}, 1); }
    // q^eq * t^et
    static Poly qt_monomial(unsigned eq, unsigned et) { return term({eq, et, 0}, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    unsigned total_degree() const;  // 0 for the zero polynomial

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& scalar) { return lhs *= scalar; }
    Poly operator-() const;

    Poly pow(unsigned exponent) const;

    // Exact division; std::nullopt when the divisor does not divide exactly.
    std::optional<Poly> divided_by(const Poly& divisor) const;

    // Substitutes the assigned variables, leaving the rest symbolic.
    Poly substituted(const Assignment& values) const;
    Rational eval(const Rational& q, const Rational& t, const Rational& a) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const;    // e.g. "1 - t^2 + q t - q t^2"
    std::string latex() const;  // e.g. "1-t^{2}+qt-qt^{2}"

private:
    void prune(const Monomial& m);
    TermMap terms_;
};

}  // namespace qmac
