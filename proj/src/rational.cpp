#include "qmac/rational.hpp"

#include "qmac/errors.hpp"

namespace qmac {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw PreconditionViolated("empty rational literal");
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw PreconditionViolated("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw PreconditionViolated("malformed rational literal: " + text);
    }
}

std::string rational_pair_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return rational_pair_str(r);
}

}  // namespace qmac
