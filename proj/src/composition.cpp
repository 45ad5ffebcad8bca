#include "qmac/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmac/errors.hpp"

namespace qmac {

int comp_size(const Composition& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

bool is_strong(const Composition& alpha) {
    if (alpha.empty()) return false;
    return std::all_of(alpha.begin(), alpha.end(), [](int p) { return p >= 1; });
}

Composition collapse(const Composition& alpha) {
    Composition out;
    for (int p : alpha)
        if (p != 0) out.push_back(p);
    return out;
}

Composition inc_sort(const Composition& alpha) {
    Composition out = alpha;
    std::sort(out.begin(), out.end());
    return out;
}

Permutation beta_perm(const Composition& alpha) {
    const int m = int(alpha.size());
    Permutation beta(m);
    std::iota(beta.begin(), beta.end(), 1);
    std::sort(beta.begin(), beta.end(), [&](int i, int j) {
        if (alpha[i - 1] != alpha[j - 1]) return alpha[i - 1] < alpha[j - 1];
        return i > j;
    });
    return beta;
}

int inversion_count(const Permutation& perm) {
    int count = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++count;
    return count;
}

Composition parse_composition(const std::string& text) {
    Composition out;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        int value;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw PreconditionViolated("bad composition part '" + token + "'");
        }
        if (pos != token.size() || value < 0)
            throw PreconditionViolated("bad composition part '" + token + "'");
        out.push_back(value);
    }
    if (out.empty()) throw PreconditionViolated("empty composition '" + text + "'");
    return out;
}

std::string composition_str(const Composition& alpha) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) os << ',';
        os << alpha[i];
    }
    os << ')';
    return os.str();
}

SubsetMask::SubsetMask(int degree, uint64_t mask) : n(degree), bits(mask) {
    if (degree < 1 || degree > 63) throw PreconditionViolated("subset degree out of range");
    if (degree < 64 && (mask >> (degree - 1)) != 0)
        throw PreconditionViolated("subset member outside [n-1]");
}

SubsetMask SubsetMask::from_members(int degree, const std::vector<int>& members) {
    SubsetMask s(degree, 0);
    for (int i : members) s.insert(i);
    return s;
}

void SubsetMask::insert(int i) {
    if (i < 1 || i >= n) throw PreconditionViolated("subset member outside [n-1]");
    bits |= uint64_t(1) << (i - 1);
}

int SubsetMask::size() const { return __builtin_popcountll(bits); }

std::vector<int> SubsetMask::members() const {
    std::vector<int> out;
    for (int i = 1; i < n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool SubsetMask::subset_of(const SubsetMask& rhs) const { return (bits & ~rhs.bits) == 0; }

SubsetMask SubsetMask::unioned(const SubsetMask& rhs) const {
    return SubsetMask(n, bits | rhs.bits);
}

std::string SubsetMask::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : members()) {
        if (!first) os << ',';
        first = false;
        os << i;
    }
    os << '}';
    return os.str();
}

SubsetMask comp_subset(const Composition& gamma) {
    if (!is_strong(gamma)) throw PreconditionViolated("comp_subset needs a strong composition");
    SubsetMask s(comp_size(gamma), 0);
    int partial = 0;
    for (size_t i = 0; i + 1 < gamma.size(); ++i) {
        partial += gamma[i];
        s.insert(partial);
    }
    return s;
}

Composition subset_comp(const SubsetMask& s) {
    Composition out;
    int prev = 0;
    for (int i : s.members()) {
        out.push_back(i - prev);
        prev = i;
    }
    out.push_back(s.n - prev);
    return out;
}

std::vector<Composition> strong_compositions(int n) {
    if (n < 1 || n > 20) throw PreconditionViolated("composition degree out of range");
    std::vector<Composition> out;
    out.reserve(size_t(1) << (n - 1));
    for (uint64_t bits = 0; bits < (uint64_t(1) << (n - 1)); ++bits)
        out.push_back(subset_comp(SubsetMask(n, bits)));
    return out;
}

}  // namespace qmac
