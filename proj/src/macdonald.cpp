#include "qmac/macdonald.hpp"

#include <algorithm>

#include "qmac/errors.hpp"

namespace qmac {

std::optional<FormulaTag> parse_formula(const std::string& name) {
    if (name == "direct") return FormulaTag::Direct;
    if (name == "fundamental") return FormulaTag::Fundamental;
    if (name == "hl-direct") return FormulaTag::HLDirect;
    if (name == "hl-fundamental") return FormulaTag::HLFundamental;
    if (name == "jack-direct") return FormulaTag::JackDirect;
    if (name == "jack-fundamental") return FormulaTag::JackFundamental;
    return std::nullopt;
}

std::string formula_name(FormulaTag tag) {
    switch (tag) {
        case FormulaTag::Direct: return "direct";
        case FormulaTag::Fundamental: return "fundamental";
        case FormulaTag::HLDirect: return "hl-direct";
        case FormulaTag::HLFundamental: return "hl-fundamental";
        case FormulaTag::JackDirect: return "jack-direct";
        case FormulaTag::JackFundamental: return "jack-fundamental";
    }
    return "";
}

Basis native_basis(FormulaTag tag) {
    return (tag == FormulaTag::Direct || tag == FormulaTag::JackDirect) ? Basis::Monomial
                                                                        : Basis::Fundamental;
}

QSymExpr g_direct(const Composition& gamma, int max_n) {
    const int n = comp_size(gamma);
    QSymExpr out(n, Basis::Monomial);
    for_each_packed_nat(
        gamma, [&](const Filling& T) { out.add(comp_subset(T.content()), T.weight()); }, max_n);
    return out;
}

namespace {

// Iterates subsets of the value set W, passing each subset's members.
template <typename Fn>
void for_each_value_subset(const SubsetMask& w, Fn&& fn) {
    uint64_t sub = 0;
    while (true) {
        fn(SubsetMask(w.n, sub));
        if (sub == w.bits) break;
        sub = (sub - w.bits) & w.bits;
    }
}

}  // namespace

QSymExpr g_fundamental(const Composition& gamma, int max_n) {
    const int n = comp_size(gamma);
    QSymExpr out(n, Basis::Fundamental);
    Poly one_minus_t = Poly(1) - Poly::var_t();
    for_each_standard(
        gamma, StandardClass::All,
        [&](const StandardFilling& tau) {
            const Diagram& d = tau.diagram();
            SubsetMask v = tau.v_set();
            SubsetMask w = tau.w_set();
            RatExpr prefactor(Poly::qt_monomial(unsigned(tau.filling().maj()),
                                                unsigned(tau.filling().coinv())));
            for (Cell u : d.hat_cells()) {
                if (w.contains(tau.at(u))) continue;
                prefactor *= RatExpr(one_minus_t);
                prefactor.divide_by(
                    DenFactor::qt_binomial(unsigned(d.leg(u) + 1), unsigned(d.arm(u) + 1)));
            }
            for_each_value_subset(w, [&](const SubsetMask& u_set) {
                RatExpr term = prefactor;
                for (int value : u_set.members()) {
                    Cell cell = tau.cell_of(value);
                    unsigned l = unsigned(d.leg(cell) + 1);
                    unsigned a = unsigned(d.arm(cell));
                    term *= RatExpr(Poly(1) - Poly::qt_monomial(l, a));
                    term.divide_by(DenFactor::qt_binomial(l, a + 1));
                    term *= RatExpr(-Poly::var_t());
                }
                out.add(v.unioned(u_set), term);
            });
        },
        max_n);
    return out;
}

QSymExpr g_hl_direct(const Composition& gamma, int max_n) {
    const int n = comp_size(gamma);
    const int h = h_stat(gamma);
    QSymExpr out(n, Basis::Fundamental);
    Poly one_minus_t = Poly(1) - Poly::var_t();
    for_each_standard(
        gamma, StandardClass::NoDescents,
        [&](const StandardFilling& tau) {
            SubsetMask v = tau.v_set();
            SubsetMask w = tau.w_set();
            Poly prefactor = Poly::qt_monomial(0, unsigned(tau.filling().coinv())) *
                             one_minus_t.pow(unsigned(h - w.size()));
            for_each_value_subset(w, [&](const SubsetMask& u_set) {
                Poly term = prefactor * (-Poly::var_t()).pow(unsigned(u_set.size()));
                out.add(v.unioned(u_set), RatExpr(term));
            });
        },
        max_n);
    return out;
}

QSymExpr g_hl_fundamental(const Composition& gamma, int max_n) {
    const int n = comp_size(gamma);
    QSymExpr out(n, Basis::Fundamental);
    Poly one_minus_t = Poly(1) - Poly::var_t();
    for_each_standard(
        gamma, StandardClass::UnitDescents,
        [&](const StandardFilling& tau) {
            int des = int(tau.filling().descent_cells().size());
            int tpow = tau.filling().coinv() - tau.coinv_des();
            Poly term = one_minus_t.pow(unsigned(tau.omega())) *
                        (-Poly::var_t()).pow(unsigned(des)) *
                        Poly::qt_monomial(0, unsigned(tpow));
            out.add(tau.nu_set(), RatExpr(term));
        },
        max_n);
    return out;
}

XPoly e_sigma(const Composition& alpha, int max_n) {
    const int m = int(alpha.size());
    Composition strong = collapse(alpha);
    if (strong.empty()) throw PreconditionViolated("alpha must have a nonzero part");
    if (comp_size(alpha) > max_n)
        throw SizeLimitExceeded("composition size " + std::to_string(comp_size(alpha)) +
                                " exceeds the bound " + std::to_string(max_n));
    Permutation beta = beta_perm(alpha);
    const int l = int(strong.size());
    std::vector<int> bottom(beta.end() - l, beta.end());
    Diagram d(inc_sort(strong));
    XPoly out(m);
    for_each_nat_bounded(d, bottom, m, [&](const Filling& T) {
        std::vector<int> exps(size_t(m), 0);
        for (int e : T.entries()) ++exps[e - 1];
        out.add(exps, T.weight());
    });
    return out;
}

XPoly g_truncated(const Composition& gamma, int m, int max_n) {
    if (!is_strong(gamma)) throw PreconditionViolated("g_truncated needs a strong composition");
    if (m < 1) throw PreconditionViolated("variable count must be positive");
    XPoly out(m);
    const int l = int(gamma.size());
    if (m < l) return out;
    // Place the parts of gamma, in order, on each l-subset of the m slots.
    std::vector<int> slots(size_t(l), 0);
    auto rec = [&](auto&& self, int part, int min_slot) -> void {
        if (part == l) {
            Composition alpha(size_t(m), 0);
            for (int i = 0; i < l; ++i) alpha[slots[i] - 1] = gamma[i];
            out += e_sigma(alpha, max_n);
            return;
        }
        for (int s = min_slot; s <= m - (l - part - 1); ++s) {
            slots[part] = s;
            self(self, part + 1, s + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

QSymExpr jack_direct(const Composition& gamma, int max_n) {
    const int n = comp_size(gamma);
    QSymExpr out(n, Basis::Monomial);
    for_each_packed_nat(
        gamma,
        [&](const Filling& T) {
            const Diagram& d = T.diagram();
            Poly coeff(1);
            for (Cell u : d.hat_cells()) {
                if (T.at(u) != T.at(*d.south(u))) continue;
                coeff *= DenFactor::jack_linear(unsigned(d.leg(u) + 1), unsigned(d.arm(u) + 1))
                             .to_poly();
            }
            out.add(comp_subset(T.content()), RatExpr(coeff));
        },
        max_n);
    return out;
}

QSymExpr jack_fundamental(const Composition& gamma, int max_n) {
    const int n = comp_size(gamma);
    QSymExpr out(n, Basis::Fundamental);
    for_each_standard(
        gamma, StandardClass::All,
        [&](const StandardFilling& tau) {
            const Diagram& d = tau.diagram();
            SubsetMask v = tau.v_set();
            SubsetMask w = tau.w_set();
            RatExpr prefactor(1);
            for (int value : w.members()) {
                Cell cell = tau.cell_of(value);
                prefactor *= RatExpr(
                    DenFactor::jack_linear(unsigned(d.leg(cell) + 1), unsigned(d.arm(cell) + 1))
                        .to_poly());
            }
            for_each_value_subset(w, [&](const SubsetMask& u_set) {
                RatExpr term = prefactor;
                for (int value : u_set.members()) {
                    Cell cell = tau.cell_of(value);
                    unsigned l = unsigned(d.leg(cell) + 1);
                    unsigned a = unsigned(d.arm(cell));
                    term *= RatExpr(Poly::term({0, 0, 1}, l) + Poly(int(a)));
                    term.divide_by(DenFactor::jack_linear(l, a + 1));
                    term *= RatExpr(-1);
                }
                out.add(v.unioned(u_set), term);
            });
        },
        max_n);
    return out;
}

bool binomial_lemma_check(const std::vector<std::pair<int, int>>& leg_arm_factors) {
    if (leg_arm_factors.size() > 12)
        throw PreconditionViolated("factor list too long for the subset expansion");
    Poly one_minus_t = Poly(1) - Poly::var_t();
    RatExpr lhs(1);
    for (auto [leg, arm] : leg_arm_factors) {
        lhs *= RatExpr(one_minus_t);
        lhs.divide_by(DenFactor::qt_binomial(unsigned(leg + 1), unsigned(arm + 1)));
    }
    RatExpr rhs;
    const size_t k = leg_arm_factors.size();
    for (uint64_t sub = 0; sub < (uint64_t(1) << k); ++sub) {
        RatExpr term(1);
        for (size_t i = 0; i < k; ++i) {
            if (!((sub >> i) & 1)) continue;
            auto [leg, arm] = leg_arm_factors[i];
            term *= RatExpr(Poly(1) - Poly::qt_monomial(unsigned(leg + 1), unsigned(arm)));
            term.divide_by(DenFactor::qt_binomial(unsigned(leg + 1), unsigned(arm + 1)));
            term *= RatExpr(-Poly::var_t());
        }
        rhs += term;
    }
    return lhs == rhs;
}

QSymExpr compute(FormulaTag tag, const Composition& gamma, int max_n) {
    switch (tag) {
        case FormulaTag::Direct: return g_direct(gamma, max_n);
        case FormulaTag::Fundamental: return g_fundamental(gamma, max_n);
        case FormulaTag::HLDirect: return g_hl_direct(gamma, max_n);
        case FormulaTag::HLFundamental: return g_hl_fundamental(gamma, max_n);
        case FormulaTag::JackDirect: return jack_direct(gamma, max_n);
        case FormulaTag::JackFundamental: return jack_fundamental(gamma, max_n);
    }
    throw PreconditionViolated("unknown formula");
}

}  // namespace qmac
