#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmac/enumerate.hpp"
#include "qmac/qsym.hpp"

namespace qmac {

enum class FormulaTag {
    Direct,           // packed fillings, Monomial basis
    Fundamental,      // standard fillings, Fundamental basis
    HLDirect,         // q=0, no-descent fillings, Fundamental basis
    HLFundamental,    // q=0, unit-descent fillings, Fundamental basis
    JackDirect,       // packed fillings, a-coefficients, Monomial basis
    JackFundamental,  // standard fillings, a-coefficients, Fundamental basis
};

std::optional<FormulaTag> parse_formula(const std::string& name);
std::string formula_name(FormulaTag tag);
Basis native_basis(FormulaTag tag);

// Sum over packed non-attacking fillings of weight(T) times M_{content(T)}.
QSymExpr g_direct(const Composition& gamma, int max_n = kDefaultMaxN);

// Sum over standard fillings tau of
//   t^coinv q^maj * prod over hat cells outside W(tau) of
//   (1-t)/(1-q^(leg+1) t^(arm+1))
//   * sum over U inside W(tau) of (-t)^|U| *
//     prod over u in U of (1-q^(leg+1) t^arm)/(1-q^(leg+1) t^(arm+1))
//     * F_{V(tau) union U},
// arm and leg taken at the cell holding the value u.
QSymExpr g_fundamental(const Composition& gamma, int max_n = kDefaultMaxN);

// q=0 expansion over no-descent standard fillings:
//   t^coinv (1-t)^(h-|W|) * sum over U inside W of (-t)^|U| F_{V union U}.
QSymExpr g_hl_direct(const Composition& gamma, int max_n = kDefaultMaxN);

// q=0 expansion over unit-descent standard fillings:
//   (1-t)^omega (-t)^|Des| t^(coinv - coinv_des) F_{Nu}.
QSymExpr g_hl_fundamental(const Composition& gamma, int max_n = kDefaultMaxN);

// The permuted-basement polynomial attached to a weak composition alpha of
// length m: sum over non-attacking fillings of dg(inc(alpha+)) with entries
// in 1..m and bottom row fixed to the last l(alpha+) entries of
// beta_perm(alpha), of weight(T) x^T.
XPoly e_sigma(const Composition& alpha, int max_n = kDefaultMaxN);

// Defining sum in m variables: e_sigma over all weak alpha of length m that
// collapse to gamma. Zero when m < length(gamma).
XPoly g_truncated(const Composition& gamma, int m, int max_n = kDefaultMaxN);

// Sum over packed fillings of prod over repeated vertical pairs of
// (a(leg+1)+arm+1) times M_{content}.
QSymExpr jack_direct(const Composition& gamma, int max_n = kDefaultMaxN);

// Sum over standard fillings of prod over W(tau) of (a(leg+1)+arm+1) times
// sum over U inside W(tau) of (-1)^|U| prod over U of
// (a(leg+1)+arm)/(a(leg+1)+arm+1) * F_{V union U}.
QSymExpr jack_fundamental(const Composition& gamma, int max_n = kDefaultMaxN);

// Checks prod (1-t)/(1-q^(leg+1) t^(arm+1)) over the factors against its
// subset expansion sum (-t)^|U| prod over U of
// (1-q^(leg+1) t^arm)/(1-q^(leg+1) t^(arm+1)).
bool binomial_lemma_check(const std::vector<std::pair<int, int>>& leg_arm_factors);

// Dispatches to the formula's implementation, in its native basis.
QSymExpr compute(FormulaTag tag, const Composition& gamma, int max_n = kDefaultMaxN);

}  // namespace qmac
