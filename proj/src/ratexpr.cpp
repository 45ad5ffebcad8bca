#include "qmac/ratexpr.hpp"

#include <sstream>
#include <tuple>
#include <utility>

#include "qmac/errors.hpp"

namespace qmac {

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
    Rational out(1);
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

Poly poly_pow(const Poly& base, unsigned e) {
    Poly out(1);
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

DenFactor DenFactor::qt_binomial(unsigned q_exp, unsigned t_exp) {
    DenFactor f;
    f.kind = Kind::QtBinomial;
    f.c1 = q_exp;
    f.c2 = t_exp;
    return f;
}

DenFactor DenFactor::jack_linear(unsigned a_coeff, unsigned constant) {
    if (a_coeff == 0) throw PreconditionViolated("jack_linear needs a positive a coefficient");
    DenFactor f;
    f.kind = Kind::JackLinear;
    f.c1 = a_coeff;
    f.c2 = constant;
    return f;
}

Poly DenFactor::to_poly() const {
    if (kind == Kind::QtBinomial)
        return Poly(1) - Poly::term({c1, c2, 0}, scale);
    return Poly::term({0, 0, 1}, c1) + Poly(int(c2));
}

Rational DenFactor::eval(const Rational& q, const Rational& t, const Rational& a) const {
    if (kind == Kind::QtBinomial) return 1 - scale * rational_pow(q, c1) * rational_pow(t, c2);
    return Rational(c1) * a + c2;
}

bool DenFactor::is_constant() const {
    return kind == Kind::QtBinomial && c1 == 0 && c2 == 0;
}

Rational DenFactor::constant_value() const { return 1 - scale; }

bool DenFactor::operator<(const DenFactor& rhs) const {
    return std::tie(kind, c1, c2, scale) < std::tie(rhs.kind, rhs.c1, rhs.c2, rhs.scale);
}

std::string DenFactor::str() const { return to_poly().str(); }

std::string DenFactor::latex() const { return to_poly().latex(); }

RatExpr::RatExpr(Poly numerator, DenMap denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    std::erase_if(den_, [](const auto& e) { return e.second == 0; });
    normalize();
}

Poly RatExpr::den_poly() const {
    Poly out(1);
    for (const auto& [f, mult] : den_) out *= poly_pow(f.to_poly(), mult);
    return out;
}

void RatExpr::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    // Cancelling one factor cannot make another factor start dividing the
    // numerator, so a single pass suffices.
    for (auto it = den_.begin(); it != den_.end();) {
        Poly f = it->first.to_poly();
        while (it->second > 0) {
            auto quotient = num_.divided_by(f);
            if (!quotient) break;
            num_ = std::move(*quotient);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

RatExpr& RatExpr::operator+=(const RatExpr& rhs) {
    DenMap common = den_;
    for (const auto& [f, mult] : rhs.den_) {
        auto& m = common[f];
        if (mult > m) m = mult;
    }
    Poly lhs_num = num_;
    Poly rhs_num = rhs.num_;
    for (const auto& [f, mult] : common) {
        auto lit = den_.find(f);
        auto rit = rhs.den_.find(f);
        unsigned lhave = lit == den_.end() ? 0 : lit->second;
        unsigned rhave = rit == rhs.den_.end() ? 0 : rit->second;
        lhs_num *= poly_pow(f.to_poly(), mult - lhave);
        rhs_num *= poly_pow(f.to_poly(), mult - rhave);
    }
    num_ = lhs_num + rhs_num;
    den_ = std::move(common);
    normalize();
    return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& rhs) { return *this += -rhs; }

RatExpr operator*(const RatExpr& lhs, const RatExpr& rhs) {
    RatExpr out;
    out.num_ = lhs.num_ * rhs.num_;
    out.den_ = lhs.den_;
    for (const auto& [f, mult] : rhs.den_) out.den_[f] += mult;
    out.normalize();
    return out;
}

RatExpr& RatExpr::operator*=(const RatExpr& rhs) {
    *this = *this * rhs;
    return *this;
}

RatExpr RatExpr::operator-() const {
    RatExpr out = *this;
    out.num_ = -out.num_;
    return out;
}

RatExpr& RatExpr::divide_by(const DenFactor& factor) {
    ++den_[factor];
    normalize();
    return *this;
}

RatExpr RatExpr::specialized(const Assignment& values) const {
    RatExpr out;
    out.num_ = num_.substituted(values);
    Rational fold = 1;
    for (const auto& [f, mult] : den_) {
        DenFactor g = f;
        if (g.kind == DenFactor::Kind::QtBinomial) {
            if (values.q && g.c1 > 0) {
                g.scale *= rational_pow(*values.q, g.c1);
                g.c1 = 0;
            }
            if (values.t && g.c2 > 0) {
                g.scale *= rational_pow(*values.t, g.c2);
                g.c2 = 0;
            }
            if (g.is_constant()) {
                Rational v = g.constant_value();
                if (v == 0)
                    throw ZeroDenominator("denominator factor " + f.str() +
                                          " vanishes at the given point");
                fold *= rational_pow(v, mult);
                continue;
            }
            if (g.scale == 0) continue;  // factor collapsed to 1
        } else if (values.a) {
            Rational v = Rational(g.c1) * (*values.a) + g.c2;
            if (v == 0)
                throw ZeroDenominator("denominator factor " + f.str() +
                                      " vanishes at the given point");
            fold *= rational_pow(v, mult);
            continue;
        }
        out.den_[g] += mult;
    }
    if (fold != 1) out.num_ *= Rational(1) / fold;
    out.normalize();
    return out;
}

Rational RatExpr::eval(const Rational& q, const Rational& t, const Rational& a) const {
    Rational den_value = 1;
    for (const auto& [f, mult] : den_) {
        Rational v = f.eval(q, t, a);
        if (v == 0)
            throw ZeroDenominator("denominator factor " + f.str() + " vanishes at the given point");
        den_value *= rational_pow(v, mult);
    }
    return num_.eval(q, t, a) / den_value;
}

bool RatExpr::operator==(const RatExpr& rhs) const {
    DenMap all = den_;
    for (const auto& [f, mult] : rhs.den_) {
        auto& m = all[f];
        if (mult > m) m = mult;
    }
    Poly lhs_num = num_;
    Poly rhs_num = rhs.num_;
    for (const auto& [f, mult] : all) {
        auto lit = den_.find(f);
        auto rit = rhs.den_.find(f);
        unsigned lhave = lit == den_.end() ? 0 : lit->second;
        unsigned rhave = rit == rhs.den_.end() ? 0 : rit->second;
        lhs_num *= poly_pow(f.to_poly(), mult - lhave);
        rhs_num *= poly_pow(f.to_poly(), mult - rhave);
    }
    return lhs_num == rhs_num;
}

std::string RatExpr::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream os;
    std::string num_str = num_.str();
    if (num_.terms().size() > 1)
        os << '(' << num_str << ')';
    else
        os << num_str;
    os << " / ";
    for (const auto& [f, mult] : den_) {
        os << '(' << f.str() << ')';
        if (mult > 1) os << '^' << mult;
    }
    return os.str();
}

std::string RatExpr::latex() const {
    if (den_.empty()) return num_.latex();
    std::ostringstream os;
    os << "\\frac{" << num_.latex() << "}{";
    for (const auto& [f, mult] : den_) {
        os << '(' << f.latex() << ')';
        if (mult > 1) os << "^{" << mult << '}';
    }
    os << '}';
    return os.str();
}

}  // namespace qmac
