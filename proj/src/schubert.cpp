#include "sncalc/schubert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sncalc {

IntPolynomial divided_difference(const IntPolynomial& f, int i) {
    if (i < 1) throw std::invalid_argument("divided difference index must be positive");
    IntPolynomial out;
    for (const auto& [e, c] : f.terms()) {
        const int p = i - 1 < static_cast<int>(e.size()) ? e[i - 1] : 0;
        const int q = i < static_cast<int>(e.size()) ? e[i] : 0;
        if (p == q) continue;
        ExpVec base = e;
        if (static_cast<int>(base.size()) < i + 1) base.resize(i + 1, 0);
        if (p > q) {
            for (int t = q; t <= p - 1; ++t) {
                base[i - 1] = t;
                base[i] = p + q - 1 - t;
                out.add_term(base, c);
            }
        } else {
            for (int t = p; t <= q - 1; ++t) {
                base[i - 1] = t;
                base[i] = p + q - 1 - t;
                out.add_term(base, -c);
            }
        }
    }
    return out;
}

namespace {

IntPolynomial staircase(int n) {
    ExpVec e;
    for (int i = n - 1; i >= 1; --i) e.push_back(i);
    return IntPolynomial::monomial(std::move(e));
}

int pick_ascent(const Permutation& v, AscentStrategy strategy, int step) {
    const auto& w = v.one_line();
    std::vector<int> ascents;
    for (int i = 1; i < v.n(); ++i)
        if (w[i - 1] < w[i]) ascents.push_back(i);
    if (ascents.empty()) return 0;
    switch (strategy) {
        case AscentStrategy::First:
            return ascents.front();
        case AscentStrategy::Last:
            return ascents.back();
        case AscentStrategy::Alternate:
            return step % 2 ? ascents.back() : ascents.front();
    }
    return ascents.front();
}

// Indices i_0, i_1, ... of an ascending walk w -> w0 in the ambient group;
// S_w results from applying the divided differences in reverse order to the
// staircase monomial.
std::vector<int> ascent_path(const Permutation& w, AscentStrategy strategy) {
    std::vector<int> ups;
    Permutation v = w;
    for (int step = 0;; ++step) {
        const int i = pick_ascent(v, strategy, step);
        if (i == 0) break;
        ups.push_back(i);
        v = v.swap_positions(i);
    }
    return ups;
}

}  // namespace

IntPolynomial schubert_poly_path(const Permutation& w, AscentStrategy strategy) {
    if (w.n() == 0) return IntPolynomial::constant(1);
    const std::vector<int> ups = ascent_path(w, strategy);
    IntPolynomial poly = staircase(w.n());
    for (auto it = ups.rbegin(); it != ups.rend(); ++it) poly = divided_difference(poly, *it);
    return poly;
}

const IntPolynomial& SchubertContext::schubert_poly(const Permutation& w) {
    const Permutation key = w.trimmed();
    auto it = schubert_cache_.find(key);
    if (it == schubert_cache_.end())
        it = schubert_cache_.emplace(key, schubert_poly_path(key, AscentStrategy::First)).first;
    return it->second;
}

std::map<Permutation, BigInt> SchubertContext::expand_in_schubert_basis(const IntPolynomial& f) {
    std::map<Permutation, BigInt> out;
    IntPolynomial rem = f;
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 500000) throw std::logic_error("schubert basis expansion did not terminate");
        const ExpVec code = rem.terms().begin()->first;  // lex-minimal monomial
        const BigInt coef = rem.terms().begin()->second;
        Permutation w = Permutation::from_code(code);
        out[w] += coef;
        rem -= schubert_poly(w) * coef;
    }
    return out;
}

std::int64_t SchubertContext::structure_constant(const Permutation& u, const Permutation& v,
                                                 const Permutation& w) {
    if (w.length() != u.length() + v.length()) return 0;
    auto expansion = expand_in_schubert_basis(schubert_poly(u) * schubert_poly(v));
    auto it = expansion.find(w.trimmed());
    if (it == expansion.end()) return 0;
    return it->second.convert_to<std::int64_t>();
}

const IntPolynomial& SchubertContext::schur_polynomial(const Partition& lambda, int num_vars) {
    auto key = std::make_pair(lambda, num_vars);
    auto it = schur_cache_.find(key);
    if (it != schur_cache_.end()) return it->second;

    IntPolynomial poly;
    if (lambda.length() <= num_vars) {
        // SSYT of shape lambda with entries <= num_vars, row-major backtracking.
        std::vector<std::vector<int>> grid(lambda.length(), std::vector<int>(lambda.part(0), 0));
        ExpVec content(num_vars, 0);
        std::function<void(int, int)> rec = [&](int r, int c) {
            if (r == lambda.length()) {
                poly.add_term(content, 1);
                return;
            }
            int nr = r, nc = c + 1;
            if (nc == lambda.parts()[r]) {
                nr = r + 1;
                nc = 0;
            }
            const int lo = std::max(c > 0 ? grid[r][c - 1] : 1, r > 0 ? grid[r - 1][c] + 1 : 1);
            for (int v = lo; v <= num_vars; ++v) {
                grid[r][c] = v;
                ++content[v - 1];
                rec(nr, nc);
                --content[v - 1];
            }
            grid[r][c] = 0;
        };
        if (lambda.empty())
            poly = IntPolynomial::constant(1);
        else
            rec(0, 0);
    }
    return schur_cache_.emplace(std::move(key), std::move(poly)).first->second;
}

BigInt SchubertContext::monomial_coefficient(const Permutation& w, const ExpVec& exponents) {
    return schubert_poly(w).coefficient(exponents);
}

GrassmannianShape grassmannian_to_schur(const Permutation& w) {
    const auto descents = w.descents();
    if (descents.size() > 1) throw std::domain_error("not Grassmannian");
    if (descents.empty()) return {0, Partition{}};
    const int d = descents[0];
    const auto code = w.code();
    std::vector<int> shape;
    for (int i = d; i >= 1; --i)
        if (code[i - 1] > 0) shape.push_back(code[i - 1]);
    return {d, Partition(std::move(shape))};
}

namespace {

// Drop monomials that can no longer contribute to the truncation onto
// x_1..x_keep: an exponent at position p survives every remaining operator
// when all of them have index <= p-2.
IntPolynomial prune_truncated(const IntPolynomial& poly, int keep, int max_future_index) {
    IntPolynomial out;
    for (const auto& [e, c] : poly.terms()) {
        bool dead = false;
        for (int p = std::max(keep, max_future_index + 1) + 1; p <= static_cast<int>(e.size());
             ++p) {
            if (e[p - 1] > 0) {
                dead = true;
                break;
            }
        }
        if (!dead) out.add_term(e, c);
    }
    return out;
}

// S_u restricted to monomials supported on x_1..x_keep.
IntPolynomial truncated_schubert(const Permutation& u, int keep) {
    const std::vector<int> ups = ascent_path(u, AscentStrategy::First);
    const std::size_t T = ups.size();
    std::vector<int> prefix_max(T + 1, 0);
    for (std::size_t t = 0; t < T; ++t) prefix_max[t + 1] = std::max(prefix_max[t], ups[t]);

    IntPolynomial poly = staircase(u.n());
    poly = prune_truncated(poly, keep, T ? prefix_max[T] : 0);
    for (std::size_t t = T; t-- > 0;) {
        poly = divided_difference(poly, ups[t]);
        poly = prune_truncated(poly, keep, prefix_max[t]);
    }
    return poly;
}

// Schur expansion of a symmetric polynomial in x_1..x_k by subtraction at the
// lexicographically maximal monomial. Returns nullopt when some leading
// exponent vector is not a partition (input not symmetric).
std::optional<std::map<Partition, BigInt>> expand_symmetric_in_schur(SchubertContext& ctx,
                                                                     const IntPolynomial& f,
                                                                     int k) {
    std::map<Partition, BigInt> out;
    IntPolynomial rem = f;
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 500000) return std::nullopt;
        const ExpVec e = rem.terms().rbegin()->first;
        const BigInt c = rem.terms().rbegin()->second;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) return std::nullopt;
        if (static_cast<int>(e.size()) > k) return std::nullopt;
        Partition alpha = Partition::unchecked(e);
        out[alpha] += c;
        rem -= ctx.schur_polynomial(alpha, k) * c;
    }
    return out;
}

}  // namespace

StanleyResult stanley_expansion(SchubertContext& ctx, const Permutation& w, int m_cap) {
    const int k = w.length();
    if (k == 0) return {{{Partition{}, 1}}, 0};
    if (m_cap < 0) m_cap = 2 * k;
    const Permutation base = w.trimmed();

    std::optional<std::map<Partition, BigInt>> prev;
    for (int m = 1; m <= m_cap; ++m) {
        const IntPolynomial poly = truncated_schubert(base.prepend_identity(m), k);
        auto exp = expand_symmetric_in_schur(ctx, poly, k);
        if (exp && prev && *exp == *prev) {
            StanleyResult result;
            result.stabilized_at_m = m - 1;
            for (const auto& [part, coef] : *exp)
                result.coefficients.emplace(part, coef.convert_to<std::int64_t>());
            return result;
        }
        prev = std::move(exp);
    }
    throw std::domain_error("stanley expansion did not stabilize below the m ceiling");
}

SkewShape skew_shape_of_321_avoiding(const Permutation& w) {
    if (!w.avoids_321()) throw std::domain_error("contains pattern 321");
    const auto code = w.trimmed().code();
    std::vector<int> supports;
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code[i] > 0) supports.push_back(static_cast<int>(i) + 1);
    if (supports.empty()) return SkewShape{};

    // Row t (top to bottom) comes from the t-th largest support i and spans
    // diagonals i .. i + c_i - 1; diagonal d sits in column d + row.
    const int r = static_cast<int>(supports.size());
    std::vector<int> outer(r), inner(r);
    for (int t = 1; t <= r; ++t) {
        const int i = supports[r - t];
        outer[t - 1] = i + code[i - 1] - 1 + t;
        inner[t - 1] = i + t - 1;
    }
    const int shift = inner[r - 1];
    for (int t = 0; t < r; ++t) {
        outer[t] -= shift;
        inner[t] -= shift;
        if (outer[t] <= 0 || inner[t] < 0 || (t > 0 && (outer[t] > outer[t - 1] || inner[t] > inner[t - 1])))
            throw std::logic_error("321-avoiding skew construction produced a non-shape");
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition::unchecked(std::move(outer)), Partition::unchecked(std::move(inner)));
}

}  // namespace sncalc
