#include "qmac/io.hpp"

#include "qmac/errors.hpp"

using nlohmann::json;

namespace qmac {

json ratexpr_json(const RatExpr& r) {
    json num = json::array();
    for (const auto& [m, c] : r.num().terms())
        num.push_back(json::array({m.eq, m.et, m.ea, rational_pair_str(c)}));
    json den = json::array();
    for (const auto& [f, mult] : r.den()) {
        json entry = json::array(
            {f.kind == DenFactor::Kind::QtBinomial ? "qt" : "jack", f.c1, f.c2, mult});
        if (f.kind == DenFactor::Kind::QtBinomial && f.scale != 1)
            entry.push_back(rational_pair_str(f.scale));
        den.push_back(entry);
    }
    return json{{"num", num}, {"den", den}};
}

RatExpr ratexpr_from_json(const json& j) {
    Poly num;
    for (const auto& term : j.at("num")) {
        Monomial m{term.at(0).get<unsigned>(), term.at(1).get<unsigned>(),
                   term.at(2).get<unsigned>()};
        num += Poly::term(m, parse_rational(term.at(3).get<std::string>()));
    }
    RatExpr::DenMap den;
    for (const auto& entry : j.at("den")) {
        std::string kind = entry.at(0).get<std::string>();
        unsigned c1 = entry.at(1).get<unsigned>();
        unsigned c2 = entry.at(2).get<unsigned>();
        unsigned mult = entry.at(3).get<unsigned>();
        DenFactor f;
        if (kind == "qt") {
            f = DenFactor::qt_binomial(c1, c2);
            if (entry.size() > 4) f.scale = parse_rational(entry.at(4).get<std::string>());
        } else if (kind == "jack") {
            f = DenFactor::jack_linear(c1, c2);
        } else {
            throw PreconditionViolated("unknown denominator kind '" + kind + "'");
        }
        den[f] += mult;
    }
    return RatExpr(std::move(num), std::move(den));
}

json qsym_json(const QSymExpr& e) {
    json terms = json::array();
    for (const auto& [bits, coeff] : e.coeffs()) {
        SubsetMask s(e.degree(), bits);
        terms.push_back(json{{"subset", s.members()},
                             {"composition", subset_comp(s)},
                             {"coeff", ratexpr_json(coeff)}});
    }
    return json{{"degree", e.degree()}, {"basis", basis_letter(e.basis())}, {"terms", terms}};
}

QSymExpr qsym_from_json(const json& j) {
    int degree = j.at("degree").get<int>();
    std::string basis = j.at("basis").get<std::string>();
    if (basis != "M" && basis != "F") throw PreconditionViolated("unknown basis '" + basis + "'");
    QSymExpr out(degree, basis == "M" ? Basis::Monomial : Basis::Fundamental);
    for (const auto& term : j.at("terms")) {
        SubsetMask s =
            SubsetMask::from_members(degree, term.at("subset").get<std::vector<int>>());
        out.add(s, ratexpr_from_json(term.at("coeff")));
    }
    return out;
}

json filling_json(const Filling& f) {
    return json{{"shape", f.diagram().heights()}, {"cols", f.columns()}};
}

Filling filling_from_json(const json& j) {
    auto cols = j.at("cols").get<std::vector<std::vector<int>>>();
    Filling f = Filling::from_columns(cols);
    if (j.contains("shape") && j.at("shape").get<Composition>() != f.diagram().heights())
        throw PreconditionViolated("shape does not match the column lengths");
    return f;
}

json xpoly_json(const XPoly& p) {
    json terms = json::array();
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(json{{"exponents", exps}, {"coeff", ratexpr_json(coeff)}});
    return json{{"vars", p.vars()}, {"terms", terms}};
}

XPoly xpoly_from_json(const json& j) {
    XPoly out(j.at("vars").get<int>());
    for (const auto& term : j.at("terms"))
        out.add(term.at("exponents").get<std::vector<int>>(),
                ratexpr_from_json(term.at("coeff")));
    return out;
}

}  // namespace qmac
