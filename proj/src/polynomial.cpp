#include "sncalc/polynomial.hpp"

#include <algorithm>

namespace sncalc {

namespace {
void trim(ExpVec& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    p.add_term({}, c);
    return p;
}

IntPolynomial IntPolynomial::monomial(ExpVec e, BigInt c) {
    IntPolynomial p;
    p.add_term(std::move(e), c);
    return p;
}

BigInt IntPolynomial::coefficient(const ExpVec& e) const {
    ExpVec key = e;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(ExpVec e, const BigInt& c) {
    if (c == 0) return;
    trim(e);
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    IntPolynomial out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
    IntPolynomial out;
    if (c == 0) return out;
    for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
    return out;
}

IntPolynomial IntPolynomial::swap_vars(int i) const {
    IntPolynomial out;
    for (const auto& [e, c] : terms_) {
        ExpVec s = e;
        if (static_cast<int>(s.size()) < i + 1) s.resize(i + 1, 0);
        std::swap(s[i - 1], s[i]);
        trim(s);
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

std::string IntPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.str();
        if (!it->first.empty()) {
            s += " *";
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                s += " x" + std::to_string(i + 1);
                if (it->first[i] > 1) s += "^" + std::to_string(it->first[i]);
            }
        }
    }
    return s;
}

}  // namespace sncalc
