#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "sncalc/partition.hpp"
#include "sncalc/permutation.hpp"
#include "sncalc/polynomial.hpp"
#include "sncalc/tableaux.hpp"

namespace sncalc {

// (f - s_i f)/(x_i - x_{i+1}), computed monomial pair by monomial pair; no
// polynomial division takes place, so the quotient is exact by construction.
IntPolynomial divided_difference(const IntPolynomial& f, int i);

enum class AscentStrategy { First, Last, Alternate };

// Descent from the staircase monomial of the ambient group of w. Exposed
// without memoization so distinct divided-difference paths can be compared.
IntPolynomial schubert_poly_path(const Permutation& w, AscentStrategy strategy);

using SchurExpansion = std::map<Partition, std::int64_t>;

struct StanleyResult {
    SchurExpansion coefficients;
    int stabilized_at_m = 0;  // smallest m whose expansion equals that of m+1
};

struct GrassmannianShape {
    int descent = 0;  // 0 for the identity
    Partition shape;
};

// Caches Schubert polynomials (keyed by the trimmed permutation) and Schur
// polynomial truncations. Not safe for concurrent use.
class SchubertContext {
public:
    const IntPolynomial& schubert_poly(const Permutation& w);

    // Unique finite expansion f = sum_w a_w S_w by repeated subtraction at
    // the lexicographically minimal monomial, whose exponent vector is the
    // Lehmer code of the permutation it belongs to.
    std::map<Permutation, BigInt> expand_in_schubert_basis(const IntPolynomial& f);

    // C_{u,v}^w = [S_w] S_u S_v; zero unless l(w) = l(u) + l(v).
    std::int64_t structure_constant(const Permutation& u, const Permutation& v,
                                    const Permutation& w);

    // s_lambda(x_1..x_num_vars) as the SSYT generating function.
    const IntPolynomial& schur_polynomial(const Partition& lambda, int num_vars);

    BigInt monomial_coefficient(const Permutation& w, const ExpVec& exponents);

private:
    std::map<Permutation, IntPolynomial> schubert_cache_;
    std::map<std::pair<Partition, int>, IntPolynomial> schur_cache_;
};

// Descent position d and shape lambda with S_w = s_lambda(x_1,...,x_d).
GrassmannianShape grassmannian_to_schur(const Permutation& w);

// Schur coefficients of the Stanley symmetric function F_w, found by
// expanding S_{1^m x w} restricted to x_1..x_{l(w)} for increasing m until
// two consecutive m agree. m is capped at 2*l(w) by default.
StanleyResult stanley_expansion(SchubertContext& ctx, const Permutation& w, int m_cap = -1);

// Skew shape nu/lambda with s_{nu/lambda} = F_w, built by the staircase
// alignment of the runs of the Lehmer code.
SkewShape skew_shape_of_321_avoiding(const Permutation& w);

}  // namespace sncalc
