#include "qmac/poly.hpp"

#include <sstream>

namespace qmac {

Poly::Poly(int constant) {
    if (constant != 0) terms_[{0, 0, 0}] = constant;
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) terms_[{0, 0, 0}] = constant;
}

Poly Poly::term(Monomial m, Rational coefficient) {
    Poly p;
    if (coefficient != 0) p.terms_[m] = std::move(coefficient);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
}

void Poly::prune(const Monomial& m) {
    auto it = terms_.find(m);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        terms_[m] += c;
        prune(m);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    for (const auto& [m, c] : rhs.terms_) {
        terms_[m] -= c;
        prune(m);
    }
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly out;
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            Monomial m{ml.eq + mr.eq, ml.et + mr.et, ml.ea + mr.ea};
            out.terms_[m] += cl * cr;
            out.prune(m);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= *this;
    return result;
}

std::optional<Poly> Poly::divided_by(const Poly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return Poly();
    // Exact single-divisor division: if divisor | remainder then the leading
    // term of the divisor divides the leading term of the remainder, so a
    // failed leading-term step proves inexactness.
    const auto& [dm, dc] = *divisor.terms_.rbegin();
    Poly remainder = *this;
    Poly quotient;
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = *remainder.terms_.rbegin();
        if (rm.eq < dm.eq || rm.et < dm.et || rm.ea < dm.ea) return std::nullopt;
        Monomial qm{rm.eq - dm.eq, rm.et - dm.et, rm.ea - dm.ea};
        Poly step = term(qm, rc / dc);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
    Rational out(1);
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

Poly Poly::substituted(const Assignment& values) const {
    if (values.empty()) return *this;
    Poly out;
    for (const auto& [m, c] : terms_) {
        Rational factor = c;
        Monomial rest = m;
        if (values.q) {
            factor *= rational_pow(*values.q, m.eq);
            rest.eq = 0;
        }
        if (values.t) {
            factor *= rational_pow(*values.t, m.et);
            rest.et = 0;
        }
        if (values.a) {
            factor *= rational_pow(*values.a, m.ea);
            rest.ea = 0;
        }
        out += term(rest, factor);
    }
    return out;
}

Rational Poly::eval(const Rational& q, const Rational& t, const Rational& a) const {
    Rational out(0);
    for (const auto& [m, c] : terms_)
        out += c * rational_pow(q, m.eq) * rational_pow(t, m.et) * rational_pow(a, m.ea);
    return out;
}

namespace {

void append_var(std::ostringstream& os, const char* name, unsigned e, bool latex, bool& first_var) {
    if (e == 0) return;
    if (!latex && !first_var) os << ' ';
    first_var = false;
    os << name;
    if (e > 1) {
        if (latex)
            os << "^{" << e << "}";
        else
            os << '^' << e;
    }
}

std::string render(const Poly::TermMap& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? (latex ? "-" : " - ") : (latex ? "+" : " + "));
        }
        first = false;
        const bool has_vars = m.degree() > 0;
        if (abs_c != 1 || !has_vars) {
            if (latex && denominator(abs_c) != 1)
                os << "\\tfrac{" << numerator(abs_c).str() << "}{" << denominator(abs_c).str() << "}";
            else
                os << rational_str(abs_c);
            if (has_vars && !latex) os << ' ';
        }
        bool first_var = true;
        append_var(os, latex ? "q" : "q", m.eq, latex, first_var);
        append_var(os, latex ? "t" : "t", m.et, latex, first_var);
        append_var(os, latex ? "a" : "a", m.ea, latex, first_var);
    }
    return os.str();
}

}  // namespace

std::string Poly::str() const { return render(terms_, false); }

std::string Poly::latex() const { return render(terms_, true); }

}  // namespace qmac
