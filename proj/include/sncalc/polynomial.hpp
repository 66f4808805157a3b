#pragma once

#include <map>
#include <string>
#include <vector>

#include "sncalc/partition.hpp"

namespace sncalc {

// Exponent vector over x_1, x_2, ...; no trailing zeros.
using ExpVec = std::vector<int>;

// Lexicographic order with the x_1 exponent weighing heaviest; vectors are
// compared as if padded with zeros.
struct ExpLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            const int ai = i < a.size() ? a[i] : 0;
            const int bi = i < b.size() ? b[i] : 0;
            if (ai != bi) return ai < bi;
        }
        return false;
    }
};

// Sparse integer polynomial in x_1, x_2, ...; no zero coefficients stored.
class IntPolynomial {
public:
    using TermMap = std::map<ExpVec, BigInt, ExpLexLess>;

    IntPolynomial() = default;
    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(ExpVec e, BigInt c = BigInt(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coefficient(const ExpVec& e) const;

    void add_term(ExpVec e, const BigInt& c);  // normalizes e, drops zeros

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const BigInt& c) const;

    bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

    // Action of the simple transposition s_i (1-based): swap x_i and x_{i+1}.
    IntPolynomial swap_vars(int i) const;

    // "3 * x1^2 x2 + 1 * x3", terms in decreasing lex order; "0" when zero.
    std::string to_string() const;

private:
    TermMap terms_;
};

}  // namespace sncalc
