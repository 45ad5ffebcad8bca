#pragma once

#include "json.hpp"

#include "qmac/filling.hpp"
#include "qmac/qsym.hpp"

namespace qmac {

// {"num":[[eq,et,ea,"p/q"],...],
//  "den":[["qt"|"jack",c1,c2,mult(,"scale")],...]}
// The scale entry appears only when a specialization folded a constant into a
// binomial factor.
nlohmann::json ratexpr_json(const RatExpr& r);
RatExpr ratexpr_from_json(const nlohmann::json& j);

// {"degree":n,"basis":"M"|"F","terms":[{"subset":[...],"composition":[...],"coeff":...}]}
nlohmann::json qsym_json(const QSymExpr& e);
QSymExpr qsym_from_json(const nlohmann::json& j);

// {"shape":[1,3,4],"cols":[[1],[4,5,3],[2,3,1,2]]}
nlohmann::json filling_json(const Filling& f);
Filling filling_from_json(const nlohmann::json& j);

// {"vars":m,"terms":[{"exponents":[...],"coeff":...}]}
nlohmann::json xpoly_json(const XPoly& p);
XPoly xpoly_from_json(const nlohmann::json& j);

}  // namespace qmac
