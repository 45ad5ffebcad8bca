#include "qmac/qsym.hpp"

#include <algorithm>
#include <sstream>

#include "qmac/errors.hpp"

namespace qmac {

std::string basis_letter(Basis b) { return b == Basis::Monomial ? "M" : "F"; }

void QSymExpr::add(const SubsetMask& s, const RatExpr& coeff) {
    if (s.n != degree_) throw PreconditionViolated("subset degree does not match expression");
    auto it = coeffs_.find(s.bits);
    if (it == coeffs_.end()) {
        if (!coeff.is_zero()) coeffs_.emplace(s.bits, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
}

RatExpr QSymExpr::coefficient(const SubsetMask& s) const {
    auto it = coeffs_.find(s.bits);
    return it == coeffs_.end() ? RatExpr() : it->second;
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& rhs) {
    if (rhs.degree_ != degree_ || rhs.basis_ != basis_)
        throw PreconditionViolated("adding expressions of different degree or basis");
    for (const auto& [bits, coeff] : rhs.coeffs_) add(SubsetMask(degree_, bits), coeff);
    return *this;
}

QSymExpr QSymExpr::scaled(const RatExpr& factor) const {
    QSymExpr out(degree_, basis_);
    for (const auto& [bits, coeff] : coeffs_) out.add(SubsetMask(degree_, bits), coeff * factor);
    return out;
}

QSymExpr QSymExpr::specialized(const Assignment& values) const {
    QSymExpr out(degree_, basis_);
    for (const auto& [bits, coeff] : coeffs_)
        out.add(SubsetMask(degree_, bits), coeff.specialized(values));
    return out;
}

namespace {

std::string render_qsym(const QSymExpr& e, bool latex) {
    if (e.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [bits, coeff] : e.coeffs()) {
        if (!first) os << " + ";
        first = false;
        std::string c = latex ? coeff.latex() : coeff.str();
        bool is_one = coeff == RatExpr(1);
        SubsetMask s(e.degree(), bits);
        if (latex) {
            if (!is_one) os << c << ' ';
            os << basis_letter(e.basis()) << "_{\\{";
            auto members = s.members();
            for (size_t i = 0; i < members.size(); ++i) {
                if (i) os << ',';
                os << members[i];
            }
            os << "\\}}";
        } else {
            if (!is_one) {
                bool needs_parens = !coeff.is_polynomial() || coeff.num().terms().size() > 1;
                if (needs_parens && c.front() != '(') os << '(' << c << ')';
                else os << c;
                os << "·";
            }
            os << basis_letter(e.basis()) << '_';
            os << s.str();
        }
    }
    return os.str();
}

}  // namespace

std::string QSymExpr::str() const { return render_qsym(*this, false); }

std::string QSymExpr::latex() const { return render_qsym(*this, true); }

QSymExpr f_to_m(const QSymExpr& e) {
    if (e.basis() != Basis::Fundamental)
        throw PreconditionViolated("f_to_m needs a Fundamental-basis expression");
    const int n = e.degree();
    const uint64_t full = n >= 64 ? ~uint64_t(0) : (uint64_t(1) << (n - 1)) - 1;
    QSymExpr out(n, Basis::Monomial);
    for (const auto& [bits, coeff] : e.coeffs()) {
        uint64_t rest = full & ~bits;
        // Submasks of the complement ascend, so supersets of bits ascend too.
        uint64_t extra = 0;
        while (true) {
            out.add(SubsetMask(n, bits | extra), coeff);
            if (extra == rest) break;
            extra = (extra - rest) & rest;
        }
    }
    return out;
}

QSymExpr m_to_f(const QSymExpr& e) {
    if (e.basis() != Basis::Monomial)
        throw PreconditionViolated("m_to_f needs a Monomial-basis expression");
    const int n = e.degree();
    const uint64_t full = n >= 64 ? ~uint64_t(0) : (uint64_t(1) << (n - 1)) - 1;
    QSymExpr out(n, Basis::Fundamental);
    for (const auto& [bits, coeff] : e.coeffs()) {
        uint64_t rest = full & ~bits;
        uint64_t extra = 0;
        while (true) {
            RatExpr signed_coeff =
                (__builtin_popcountll(extra) % 2 == 0) ? coeff : -coeff;
            out.add(SubsetMask(n, bits | extra), signed_coeff);
            if (extra == rest) break;
            extra = (extra - rest) & rest;
        }
    }
    return out;
}

bool is_symmetric(const QSymExpr& e) {
    if (e.basis() != Basis::Monomial)
        throw PreconditionViolated("is_symmetric needs a Monomial-basis expression");
    const int n = e.degree();
    std::map<Composition, std::vector<uint64_t>> orbits;
    for (uint64_t bits = 0; bits < (uint64_t(1) << (n - 1)); ++bits) {
        Composition parts = subset_comp(SubsetMask(n, bits));
        std::sort(parts.begin(), parts.end());
        orbits[parts].push_back(bits);
    }
    for (const auto& [parts, masks] : orbits) {
        RatExpr reference = e.coefficient(SubsetMask(n, masks.front()));
        for (size_t i = 1; i < masks.size(); ++i)
            if (!(e.coefficient(SubsetMask(n, masks[i])) == reference)) return false;
    }
    return true;
}

void XPoly::add(const std::vector<int>& exponents, const RatExpr& coeff) {
    if (int(exponents.size()) != vars_)
        throw PreconditionViolated("exponent vector length does not match variable count");
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(exponents, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

RatExpr XPoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? RatExpr() : it->second;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    if (rhs.vars_ != vars_) throw PreconditionViolated("adding XPolys in different variables");
    for (const auto& [exps, coeff] : rhs.terms_) add(exps, coeff);
    return *this;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool is_one = coeff == RatExpr(1);
        if (!is_one) {
            std::string c = coeff.str();
            bool needs_parens = !coeff.is_polynomial() || coeff.num().terms().size() > 1;
            if (needs_parens && c.front() != '(') os << '(' << c << ')';
            else os << c;
            os << "·";
        }
        bool any = false;
        for (int i = 0; i < vars_; ++i) {
            if (exps[i] == 0) continue;
            if (any) os << ' ';
            any = true;
            os << 'x' << (i + 1);
            if (exps[i] > 1) os << '^' << exps[i];
        }
        if (!any) os << '1';
    }
    return os.str();
}

namespace {

// All monomials of M_S: strictly increasing variable choices for the parts.
void expand_monomial(const Composition& parts, int m, const RatExpr& coeff, XPoly& out) {
    const int k = int(parts.size());
    std::vector<int> choice(size_t(k), 0);
    auto rec = [&](auto&& self, int slot, int min_var) -> void {
        if (slot == k) {
            std::vector<int> exps(size_t(m), 0);
            for (int i = 0; i < k; ++i) exps[choice[i] - 1] = parts[i];
            out.add(exps, coeff);
            return;
        }
        for (int v = min_var; v <= m - (k - slot - 1); ++v) {
            choice[slot] = v;
            self(self, slot + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
}

// All monomials of F_S: weakly increasing index words, strict at S positions.
void expand_fundamental(const SubsetMask& s, int m, const RatExpr& coeff, XPoly& out) {
    const int n = s.n;
    std::vector<int> word(size_t(n), 0);
    auto rec = [&](auto&& self, int pos, int min_var) -> void {
        if (pos == n) {
            std::vector<int> exps(size_t(m), 0);
            for (int i : word) ++exps[i - 1];
            out.add(exps, coeff);
            return;
        }
        for (int v = min_var; v <= m; ++v) {
            word[pos] = v;
            self(self, pos + 1, s.contains(pos + 1) ? v + 1 : v);
        }
    };
    rec(rec, 0, 1);
}

}  // namespace

XPoly expand_vars(const QSymExpr& e, int m) {
    if (m < 1) throw PreconditionViolated("variable count must be positive");
    XPoly out(m);
    for (const auto& [bits, coeff] : e.coeffs()) {
        SubsetMask s(e.degree(), bits);
        if (e.basis() == Basis::Monomial)
            expand_monomial(subset_comp(s), m, coeff, out);
        else
            expand_fundamental(s, m, coeff, out);
    }
    return out;
}

}  // namespace qmac
