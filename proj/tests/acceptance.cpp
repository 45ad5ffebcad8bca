// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "qmac/enumerate.hpp"
#include "qmac/macdonald.hpp"
#include "qmac/standard.hpp"
#include "qmac/verify.hpp"

using namespace qmac;

namespace {

struct Criterion {
    std::string name;
    std::function<std::string()> run;  // empty string on pass
};

std::string from_check(const CheckResult& r) { return r.pass ? std::string() : r.detail; }

// Wraps a sub-second budget around a block of golden checks.
std::string timed(const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail = body();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (detail.empty() && ms >= 1000) detail = "took " + std::to_string(ms) + "ms";
    return detail;
}

void expect(bool ok, const std::string& label, std::string& fails) {
    if (ok) return;
    if (!fails.empty()) fails += "; ";
    fails += label;
}

RatExpr over_qt2(Poly num) {
    RatExpr r(std::move(num));
    r.divide_by(DenFactor::qt_binomial(1, 2));
    return r;
}

std::string degree3_closed_form() {
    std::string fails;
    Poly q = Poly::var_q();
    Poly t = Poly::var_t();

    QSymExpr expected(3, Basis::Monomial);
    expected.add(comp_subset({1, 2}), RatExpr(1));
    expected.add(comp_subset({1, 1, 1}), over_qt2((Poly(1) - t) * (Poly(1) + t + q * t)));
    expect(g_direct({1, 2}) == expected, "expansion of (1,2)", fails);

    std::map<Filling, RatExpr> weights{
        {Filling::parse("1;2,2"), RatExpr(1)},
        {Filling::parse("1;2,3"), over_qt2(q * t * (Poly(1) - t))},
        {Filling::parse("1;3,2"), over_qt2(Poly(1) - t)},
        {Filling::parse("2;3,1"), over_qt2(t * (Poly(1) - t))},
    };
    auto fillings = enumerate_packed_nat({1, 2});
    expect(fillings.size() == 4, "filling count", fails);
    for (const Filling& T : fillings) {
        auto it = weights.find(T);
        if (it == weights.end()) {
            expect(false, "unexpected filling " + T.str(), fails);
            continue;
        }
        expect(T.weight() == it->second, "weight of " + T.str(), fails);
        weights.erase(it);
    }
    expect(weights.empty(), "missing fillings", fails);
    return fails;
}

std::string worked_examples() {
    std::string fails;

    Filling packed = Filling::parse("1;4,5,3;2,3,1,2");
    Filling standard = Filling::parse("2;7,8,5;4,6,1,3");
    expect(standardize(packed).filling() == standard, "standardization image", fails);

    StandardFilling tau(standard);
    expect(destandardize(tau, SubsetMask::from_members(8, {1, 2, 3, 4, 5, 6, 7})) == standard,
           "destandardization at the full subset", fails);
    expect(destandardize(tau, SubsetMask::from_members(8, {1, 2, 4, 5, 6, 7})) ==
               Filling::parse("2;6,7,4;3,5,1,3"),
           "destandardization dropping 3", fails);
    expect(destandardize(tau, SubsetMask::from_members(8, {2, 4, 6, 7})) == packed,
           "destandardization at V", fails);

    expect(beta_perm({2, 1, 0, 0, 3, 0, 1}) == Permutation{6, 4, 3, 7, 2, 1, 5},
           "sorting permutation, first display", fails);
    expect(beta_perm({0, 4, 0, 3, 1, 0, 0, 3}) == Permutation{7, 6, 3, 1, 5, 8, 4, 2},
           "sorting permutation, second display", fails);
    expect(beta_perm({4, 3, 1, 3}) == Permutation{3, 4, 2, 1}, "sorting permutation of (4,3,1,3)",
           fails);

    Diagram d(inc_sort({4, 3, 1, 3}));
    std::vector<int> entries(size_t(d.size()), 1);
    entries[size_t(d.index_of({1, 1}))] = 5;
    entries[size_t(d.index_of({1, 2}))] = 8;
    entries[size_t(d.index_of({1, 3}))] = 4;
    entries[size_t(d.index_of({1, 4}))] = 2;
    expect(bottom_row_ok(Filling(d, entries), {4, 3, 1, 3}), "bottom row order-equivalence",
           fails);
    entries[size_t(d.index_of({1, 4}))] = 9;
    expect(!bottom_row_ok(Filling(d, entries), {4, 3, 1, 3}), "bottom row rejection", fails);

    StandardFilling prime(Filling::from_columns({{6}, {8, 2, 1}, {7, 3, 4, 5}}));
    expect(prime.coinv_des() == 2, "descent coinversions", fails);
    expect(prime.omega() == 2, "omega", fails);
    expect(prime.inverse_descents() == SubsetMask::from_members(8, {3, 4, 7}),
           "inverse descent set", fails);
    expect(prime.nu_set() == SubsetMask::from_members(8, {2, 3, 4, 5, 6, 7}), "nu set", fails);

    Diagram wide(Composition{3, 1, 4, 2, 1, 4, 3, 5, 4});
    expect(wide.arm({3, 6}) == 4, "arm", fails);
    expect(wide.leg({3, 6}) == 1, "leg", fails);
    return fails;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"direct formula reproduces the degree-3 closed form and filling weights",
         [] { return timed(degree3_closed_form); }},
        {"fundamental expansion converts to the direct expansion through n=6",
         [] { return from_check(check_main_equivalence(6)); }},
        {"hall-littlewood formulas agree with the q=0 specialization through n=7",
         [] { return from_check(check_hl_chain(7)); }},
        {"jack formulas agree in both bases through n=5",
         [] { return from_check(check_jack_chain(5)); }},
        {"truncated sums match the monomial expansions through n=5",
         [] { return from_check(check_truncation(5)); }},
        {"destandardization is a weighted bijection through n=6",
         [] { return from_check(check_destandardization(6)); }},
        {"run reversal bookkeeping holds through n=6",
         [] { return from_check(check_iota_bookkeeping(6)); }},
        {"rearrangement sums are symmetric through n=5",
         [] { return from_check(check_symmetry(5)); }},
        {"binomial subset expansion holds on random factor multisets",
         [] { return from_check(check_binomial_identity(VerifyOptions{}.rng_seed)); }},
        {"worked examples reproduce bit-exactly", [] { return timed(worked_examples); }},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("threw: ") + e.what();
        }
        if (detail.empty()) {
            std::cout << "PASS: " << c.name << "\n";
        } else {
            std::cout << "FAIL: " << c.name << " (" << detail << ")\n";
            ++failures;
        }
        std::cout.flush();
    }
    std::cout << (int(criteria.size()) - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
