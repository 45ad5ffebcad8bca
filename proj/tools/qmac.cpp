#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmac/errors.hpp"
#include "qmac/io.hpp"
#include "qmac/macdonald.hpp"
#include "qmac/verify.hpp"

namespace {

using namespace qmac;

Assignment parse_spec(const std::string& text) {
    Assignment out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw PreconditionViolated("bad assignment '" + item + "', expected var=value");
        std::string var = item.substr(0, eq);
        Rational value = parse_rational(item.substr(eq + 1));
        if (var == "q")
            out.q = value;
        else if (var == "t")
            out.t = value;
        else if (var == "a")
            out.a = value;
        else
            throw PreconditionViolated("unknown variable '" + var + "'");
    }
    return out;
}

FormulaTag formula_or_throw(const std::string& name) {
    auto tag = parse_formula(name);
    if (!tag)
        throw PreconditionViolated(
            "unknown formula '" + name +
            "' (expected direct, fundamental, hl-direct, hl-fundamental, jack-direct or "
            "jack-fundamental)");
    return *tag;
}

int effective_bound(const Composition& gamma, int default_bound, int unsafe_n) {
    int bound = unsafe_n > 0 ? unsafe_n : default_bound;
    if (comp_size(gamma) > bound)
        throw SizeLimitExceeded("composition size " + std::to_string(comp_size(gamma)) +
                                " exceeds the guard " + std::to_string(bound) +
                                " (raise with --unsafe-n)");
    return bound;
}

QSymExpr in_basis(const QSymExpr& e, Basis basis) {
    if (e.basis() == basis) return e;
    return basis == Basis::Monomial ? f_to_m(e) : m_to_f(e);
}

int run_compute(const std::string& gamma_text, const std::string& formula_text,
                const std::string& basis_text, const std::string& spec_text,
                const std::string& format, int unsafe_n) {
    Composition gamma = parse_composition(gamma_text);
    if (!is_strong(gamma)) throw PreconditionViolated("gamma must have positive parts");
    FormulaTag tag = formula_or_throw(formula_text);
    int bound = effective_bound(gamma, kDefaultMaxN, unsafe_n);
    QSymExpr e = compute(tag, gamma, bound);
    if (!basis_text.empty())
        e = in_basis(e, basis_text == "M" ? Basis::Monomial : Basis::Fundamental);
    Assignment spec = parse_spec(spec_text);
    if (!spec.empty()) e = e.specialized(spec);
    if (format == "json")
        std::cout << qsym_json(e).dump(2) << '\n';
    else if (format == "latex")
        std::cout << e.latex() << '\n';
    else
        std::cout << e.str() << '\n';
    return 0;
}

int run_compare(const std::string& gamma_text, const std::string& lhs_text,
                const std::string& rhs_text, const std::string& spec_text, int unsafe_n) {
    Composition gamma = parse_composition(gamma_text);
    if (!is_strong(gamma)) throw PreconditionViolated("gamma must have positive parts");
    int bound = effective_bound(gamma, kDefaultMaxN, unsafe_n);
    Assignment spec = parse_spec(spec_text);
    auto evaluate = [&](const std::string& name) {
        QSymExpr e = in_basis(compute(formula_or_throw(name), gamma, bound), Basis::Monomial);
        return spec.empty() ? e : e.specialized(spec);
    };
    QSymExpr lhs = evaluate(lhs_text);
    QSymExpr rhs = evaluate(rhs_text);
    if (lhs == rhs) {
        std::cout << "PASS: " << lhs_text << " = " << rhs_text << " on gamma "
                  << composition_str(gamma) << '\n';
        return 0;
    }
    // Report the smallest subset whose coefficients differ.
    const int n = comp_size(gamma);
    for (uint64_t bits = 0; bits < (uint64_t(1) << (n - 1)); ++bits) {
        SubsetMask s(n, bits);
        RatExpr cl = lhs.coefficient(s);
        RatExpr cr = rhs.coefficient(s);
        if (!(cl == cr)) {
            std::cout << "FAIL: first difference at M_" << s.str() << "\n  " << lhs_text << ": "
                      << cl.str() << "\n  " << rhs_text << ": " << cr.str() << '\n';
            return 1;
        }
    }
    std::cout << "FAIL: expressions differ\n";
    return 1;
}

int run_expand(const std::string& gamma_text, const std::string& formula_text, int vars,
               const std::string& spec_text, const std::string& format, int unsafe_n) {
    Composition gamma = parse_composition(gamma_text);
    if (!is_strong(gamma)) throw PreconditionViolated("gamma must have positive parts");
    FormulaTag tag = formula_or_throw(formula_text);
    int bound = effective_bound(gamma, kDefaultMaxN, unsafe_n);
    QSymExpr e = compute(tag, gamma, bound);
    Assignment spec = parse_spec(spec_text);
    if (!spec.empty()) e = e.specialized(spec);
    XPoly expansion = expand_vars(e, vars);
    if (format == "json")
        std::cout << xpoly_json(expansion).dump(2) << '\n';
    else
        std::cout << expansion.str() << '\n';
    return 0;
}

int run_verify(int max_n, int hl_max_n, unsigned seed, int unsafe_n) {
    if (unsafe_n > 0) {
        max_n = std::max(max_n, unsafe_n);
    } else if (max_n > 8 || hl_max_n > 8) {
        throw SizeLimitExceeded("verify beyond n=8 needs --unsafe-n");
    }
    VerifyOptions opts;
    opts.max_n = max_n;
    opts.hl_max_n = std::max(max_n, hl_max_n);
    opts.rng_seed = seed;
    bool all_pass = true;
    for (const CheckResult& r : run_verification(opts)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass) std::cout << "  [" << r.detail << "]";
        std::cout << '\n';
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES above") << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasisymmetric Macdonald polynomial calculator"};
    app.require_subcommand(1);

    std::string gamma_text, formula_text = "direct", basis_text, spec_text, format = "text";
    std::string lhs_text, rhs_text;
    int vars = 1;
    int unsafe_n = 0;
    int max_n = 6, hl_max_n = 6;
    unsigned seed = VerifyOptions{}.rng_seed;

    auto add_unsafe = [&](CLI::App* cmd) {
        cmd->add_option("--unsafe-n", unsafe_n, "override the degree guard");
    };

    CLI::App* compute_cmd = app.add_subcommand("compute", "print one expansion of G_gamma");
    compute_cmd->add_option("--gamma", gamma_text, "strong composition, e.g. 1,2")->required();
    compute_cmd->add_option("--formula", formula_text,
                            "direct|fundamental|hl-direct|hl-fundamental|jack-direct|jack-"
                            "fundamental");
    compute_cmd->add_option("--basis", basis_text, "M or F (default: the formula's own basis)")
        ->check(CLI::IsMember({"M", "F"}));
    compute_cmd->add_option("--spec", spec_text, "specialization, e.g. q=0,t=1/2");
    compute_cmd->add_option("--format", format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    add_unsafe(compute_cmd);

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "diff two formulas in the monomial basis");
    compare_cmd->add_option("--gamma", gamma_text, "strong composition")->required();
    compare_cmd->add_option("--lhs", lhs_text, "formula name")->required();
    compare_cmd->add_option("--rhs", rhs_text, "formula name")->required();
    compare_cmd->add_option("--spec", spec_text, "specialization applied to both sides");
    add_unsafe(compare_cmd);

    CLI::App* expand_cmd = app.add_subcommand("expand", "expand into x variables");
    expand_cmd->add_option("--gamma", gamma_text, "strong composition")->required();
    expand_cmd->add_option("--formula", formula_text, "formula name");
    expand_cmd->add_option("--vars", vars, "variable count")->required();
    expand_cmd->add_option("--spec", spec_text, "specialization, e.g. q=0");
    expand_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    add_unsafe(expand_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full identity suite");
    verify_cmd->add_option("--max-n", max_n, "sweep strong compositions up to this size");
    verify_cmd->add_option("--hl-max-n", hl_max_n, "extend the q=0 chain to this size");
    verify_cmd->add_option("--seed", seed, "seed for the randomized identity check");
    add_unsafe(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute_cmd->parsed())
            return run_compute(gamma_text, formula_text, basis_text, spec_text, format, unsafe_n);
        if (compare_cmd->parsed())
            return run_compare(gamma_text, lhs_text, rhs_text, spec_text, unsafe_n);
        if (expand_cmd->parsed())
            return run_expand(gamma_text, formula_text, vars, spec_text, format, unsafe_n);
        if (verify_cmd->parsed()) return run_verify(max_n, hl_max_n, seed, unsafe_n);
    } catch (const ZeroDenominator& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CellOutOfDiagram& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
