#include "qmac/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "qmac/macdonald.hpp"
#include "qmac/standard.hpp"

namespace qmac {

int thread_cap() {
    if (const char* env = std::getenv("QMAC_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    int workers = std::min<size_t>(size_t(thread_cap()), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

std::vector<Composition> all_strong_up_to(int max_n) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_n; ++n) {
        auto batch = strong_compositions(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

// Sweeps every strong composition up to the bound in parallel; fn returns an
// empty string on success and a short reason otherwise.
CheckResult sweep(const std::string& name, int max_n,
                  const std::function<std::string(const Composition&)>& fn) {
    auto cases = all_strong_up_to(max_n);
    std::vector<std::string> failures(cases.size());
    parallel_for(cases.size(), [&](size_t i) {
        std::string reason = fn(cases[i]);
        if (!reason.empty()) failures[i] = composition_str(cases[i]) + ": " + reason;
    });
    CheckResult result{name, true, ""};
    std::ostringstream detail;
    for (const auto& f : failures) {
        if (f.empty()) continue;
        result.pass = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << f;
    }
    result.detail = detail.str();
    return result;
}

template <typename Fn>
void for_each_superset(const SubsetMask& base, Fn&& fn) {
    const uint64_t full =
        base.n >= 64 ? ~uint64_t(0) : (uint64_t(1) << (base.n - 1)) - 1;
    uint64_t rest = full & ~base.bits;
    uint64_t extra = 0;
    while (true) {
        fn(SubsetMask(base.n, base.bits | extra));
        if (extra == rest) break;
        extra = (extra - rest) & rest;
    }
}

template <typename Fn>
void for_each_subset(const SubsetMask& base, Fn&& fn) {
    uint64_t sub = 0;
    while (true) {
        fn(SubsetMask(base.n, sub));
        if (sub == base.bits) break;
        sub = (sub - base.bits) & base.bits;
    }
}

}  // namespace

CheckResult check_main_equivalence(int max_n) {
    return sweep("main-equivalence", max_n, [&](const Composition& gamma) -> std::string {
        if (!(f_to_m(g_fundamental(gamma, max_n)) == g_direct(gamma, max_n)))
            return "fundamental and direct expansions differ";
        return "";
    });
}

CheckResult check_hl_chain(int max_n) {
    return sweep("hl-chain", max_n, [&](const Composition& gamma) -> std::string {
        QSymExpr by_st0 = g_hl_direct(gamma, max_n);
        QSymExpr by_st1 = g_hl_fundamental(gamma, max_n);
        if (!(by_st1 == by_st0)) return "unit-descent and no-descent expansions differ";
        Assignment q_zero;
        q_zero.q = Rational(0);
        if (!(g_fundamental(gamma, max_n).specialized(q_zero) == by_st0))
            return "q=0 specialization differs from the no-descent expansion";
        return "";
    });
}

CheckResult check_jack_chain(int max_n) {
    return sweep("jack-chain", std::min(max_n, 5), [&](const Composition& gamma) -> std::string {
        if (!(f_to_m(jack_fundamental(gamma)) == jack_direct(gamma)))
            return "fundamental and direct expansions differ";
        return "";
    });
}

CheckResult check_truncation(int max_n) {
    return sweep("truncation", std::min(max_n, 5), [&](const Composition& gamma) -> std::string {
        QSymExpr direct = g_direct(gamma);
        int l = int(gamma.size());
        for (int m : {l, l + 1}) {
            if (m > 4) continue;
            if (!(g_truncated(gamma, m) == expand_vars(direct, m)))
                return "defining sum differs in " + std::to_string(m) + " variables";
        }
        return "";
    });
}

CheckResult check_destandardization(int max_n) {
    return sweep("destandardization", max_n, [&](const Composition& gamma) -> std::string {
        std::map<Filling, int> remaining;
        for (const Filling& T : enumerate_packed_nat(gamma, max_n)) ++remaining[T];
        std::string failure;
        for_each_standard(
            gamma, StandardClass::All,
            [&](const StandardFilling& tau) {
                if (!failure.empty()) return;
                SubsetMask v = tau.v_set();
                for_each_superset(v, [&](const SubsetMask& s) {
                    if (!failure.empty()) return;
                    Filling T = destandardize(tau, s);
                    auto it = remaining.find(T);
                    if (it == remaining.end() || it->second == 0) {
                        failure = "image " + T.str() + " not available (subset " + s.str() + ")";
                        return;
                    }
                    --it->second;
                    if (!(standardize(T) == tau)) {
                        failure = "round trip broke at " + T.str();
                        return;
                    }
                    if (!(T.weight() == destandardized_weight(tau, s))) {
                        failure = "weight mismatch at " + T.str();
                        return;
                    }
                });
            },
            max_n);
        if (!failure.empty()) return failure;
        for (const auto& [T, count] : remaining)
            if (count != 0) return "filling " + T.str() + " never reached";
        return "";
    });
}

CheckResult check_iota_bookkeeping(int max_n) {
    return sweep("iota-bookkeeping", max_n, [&](const Composition& gamma) -> std::string {
        const int h = h_stat(gamma);
        std::string failure;
        for_each_standard(
            gamma, StandardClass::NoDescents,
            [&](const StandardFilling& tau) {
                if (!failure.empty()) return;
                SubsetMask v = tau.v_set();
                SubsetMask w = tau.w_set();
                for_each_subset(w, [&](const SubsetMask& u) {
                    if (!failure.empty()) return;
                    StandardFilling image = iota(tau, u);
                    std::string at = " at " + tau.filling().str() + " / " + u.str();
                    if (!image.in_st1())
                        failure = "image has a non-unit descent" + at;
                    else if (int(image.filling().descent_cells().size()) != u.size())
                        failure = "descent count differs from |U|" + at;
                    else if (image.omega() != h - w.size())
                        failure = "omega mismatch" + at;
                    else if (!(image.nu_set() == v.unioned(u)))
                        failure = "Nu differs from V union U" + at;
                    else if (!(sort_columns_decreasing(image) == tau))
                        failure = "column sort does not invert" + at;
                });
            },
            max_n);
        return failure;
    });
}

CheckResult check_symmetry(int max_n) {
    // Partitions of n, parts weakly decreasing.
    std::vector<Composition> partitions;
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        std::function<void(int, int, Composition&)> grow = [&](int left, int cap,
                                                               Composition& parts) {
            if (left == 0) {
                partitions.push_back(parts);
                return;
            }
            for (int p = std::min(left, cap); p >= 1; --p) {
                parts.push_back(p);
                grow(left - p, p, parts);
                parts.pop_back();
            }
        };
        Composition parts;
        grow(n, n, parts);
    }
    std::vector<std::string> failures(partitions.size());
    parallel_for(partitions.size(), [&](size_t i) {
        Composition lambda = partitions[i];
        std::sort(lambda.begin(), lambda.end());
        QSymExpr sum(comp_size(lambda), Basis::Monomial);
        do {
            sum += g_direct(lambda);
        } while (std::next_permutation(lambda.begin(), lambda.end()));
        if (!is_symmetric(sum))
            failures[i] = composition_str(partitions[i]) + ": rearrangement sum not symmetric";
    });
    CheckResult result{"symmetry", true, ""};
    std::ostringstream detail;
    for (const auto& f : failures) {
        if (f.empty()) continue;
        result.pass = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << f;
    }
    result.detail = detail.str();
    return result;
}

CheckResult check_binomial_identity(unsigned rng_seed) {
    std::mt19937_64 rng(rng_seed);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, int>> factors(rng() % 6);
        for (auto& [leg, arm] : factors) {
            leg = int(rng() % 4);
            arm = int(rng() % 4);
        }
        if (!binomial_lemma_check(factors)) {
            std::ostringstream detail;
            detail << "trial " << trial << " failed with factors";
            for (auto [leg, arm] : factors) detail << " (" << leg << ',' << arm << ')';
            return {"binomial-identity", false, detail.str()};
        }
    }
    return {"binomial-identity", true, ""};
}

CheckResult check_schur_specialization(int max_n) {
    return sweep("schur-specialization", max_n, [&](const Composition& gamma) -> std::string {
        Assignment zero;
        zero.q = Rational(0);
        zero.t = Rational(0);
        QSymExpr e = g_fundamental(gamma, max_n).specialized(zero);
        for (const auto& [bits, coeff] : e.coeffs()) {
            bool ok = coeff.is_polynomial() && coeff.num().is_constant();
            Rational value = ok ? coeff.num().coefficient({0, 0, 0}) : Rational(0);
            if (!ok || value < 0 || denominator(value) != 1)
                return "non-integer or negative coefficient at subset " +
                       SubsetMask(e.degree(), bits).str();
        }
        return "";
    });
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    results.push_back(check_main_equivalence(opts.max_n));
    results.push_back(check_hl_chain(opts.hl_max_n));
    results.push_back(check_jack_chain(opts.max_n));
    results.push_back(check_truncation(opts.max_n));
    results.push_back(check_destandardization(opts.max_n));
    results.push_back(check_iota_bookkeeping(opts.max_n));
    results.push_back(check_symmetry(opts.max_n));
    results.push_back(check_binomial_identity(opts.rng_seed));
    results.push_back(check_schur_specialization(opts.max_n));
    return results;
}

}  // namespace qmac
