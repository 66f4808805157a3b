#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sncalc/characters.hpp"
#include "sncalc/partition.hpp"

namespace sncalc {

// A coefficient-family instance hitting a target value. Every witness is
// re-verified by the corresponding evaluator before it is returned.
struct Witness {
    std::string family;  // "character" | "kostka" | "lr" | "kronecker"
    std::int64_t target = 0;
    std::vector<std::pair<std::string, Partition>> data;  // named index tuple
    std::int64_t verified_value = 0;
    std::vector<std::pair<std::string, std::int64_t>> params;

    std::string to_json() const;
};

// The class mu with chi^{(2,1^{n-2})}(mu) = -k: for k incongruent to n mod 2
// the hook (n-k-1, 1^{k+1}), otherwise (n-k-4, 3, 1^{k+1}) with the parts
// sorted decreasingly (which only matters when k = n-6).
// Domain: k in [1, n-5] union {n-3}.
Partition negative_case_mu(int n, int k);

// chi^{(n-1,1)} resp. chi^{(2,1^{n-2})} witness for any integer z; the index
// j >= 0 shifts n, so distinct j give distinct witnesses.
Witness char_witness(CharEngine& engine, std::int64_t z, int j);

// K_{(1+j,1^{k-1}),(j,1^k)} = k for j >= 1; k = 0 uses a dominance-violating
// pair.
Witness kostka_witness(std::int64_t k, int j);

// Tail-sum embedding of the Kostka witness: a triple with c = k.
Witness lr_witness(std::int64_t k, int j);

// Murnaghan-padded triple with g = k: the first size-compatible LR triple
// with coefficient k (in the enumerate_value_class ordering) is padded at the
// detected stabilization point plus (j - 1).
Witness kron_witness(CharEngine& engine, std::int64_t k, int j, int n_max = 40);

enum class CoefficientFamily { LR, Kronecker };

// First `limit` members of LR_k resp. Kron_k under the documented
// well-ordering: triples are ordered by total size, then (for LR) by |lambda|
// and the canonical partition order on lambda, mu, nu in turn; Kron triples
// share one size n and are ordered by the canonical order on lambda, mu, nu.
// `max_size` bounds |nu| (LR) resp. n (Kron); the scan fails with a domain
// error if the limit is not reached below it.
std::vector<std::array<Partition, 3>> enumerate_value_class(CharEngine& engine,
                                                            CoefficientFamily family,
                                                            std::int64_t k, int limit,
                                                            int max_size = -1);

}  // namespace sncalc
