#pragma once

#include <cstdint>

#include "sncalc/characters.hpp"
#include "sncalc/partition.hpp"

namespace sncalc {

// Murnaghan padding lambda[N] = (N - |lambda|, lambda_1, lambda_2, ...).
struct PaddedPartition {
    Partition base;
    int N = 0;
    Partition value;
};

PaddedPartition pad(const Partition& lambda, int N);

// Smallest N for which lambda[N] is a partition.
inline int min_pad(const Partition& lambda) { return lambda.size() + lambda.part(0); }

// g_{lambda,mu,nu} = (1/n!) sum_{rho |- n} |C_rho| chi^lambda(rho) chi^mu(rho) chi^nu(rho).
// The division by n! is checked to be exact.
std::int64_t kronecker(CharEngine& engine, const Partition& lambda, const Partition& mu,
                       const Partition& nu, int threads = 1);

struct StableKronecker {
    std::int64_t value = 0;
    int stabilized_at = 0;  // smallest N with g(N) == g(N+1)
};

// Stable Kronecker coefficient by empirical stabilization: evaluate
// g_{lambda[N],mu[N],nu[N]} for N = N0, N0+1, ... until two consecutive
// values agree. The returned N is a heuristic certificate, not a proven
// stabilization point.
StableKronecker stable_kronecker(CharEngine& engine, const Partition& lambda, const Partition& mu,
                                 const Partition& nu, int n_max = 40, int threads = 1);

}  // namespace sncalc
