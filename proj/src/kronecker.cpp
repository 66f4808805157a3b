#include "sncalc/kronecker.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

namespace sncalc {

PaddedPartition pad(const Partition& lambda, int N) {
    const int head = N - lambda.size();
    if (head < lambda.part(0))
        throw std::domain_error("first part would violate monotonicity");
    std::vector<int> parts;
    parts.reserve(lambda.length() + 1);
    if (head > 0) parts.push_back(head);
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return {lambda, N, Partition::unchecked(std::move(parts))};
}

std::int64_t kronecker(CharEngine& engine, const Partition& lambda, const Partition& mu,
                       const Partition& nu, int threads) {
    const int n = lambda.size();
    if (mu.size() != n || nu.size() != n) throw std::domain_error("incompatible sizes");
    const auto& classes = engine.partitions_of(n).all();

    threads = std::max(1, threads);
    std::vector<BigInt> partial(threads, BigInt(0));
    std::atomic<std::size_t> next{0};
    auto work = [&](int t) {
        for (std::size_t i = next++; i < classes.size(); i = next++) {
            const Partition& rho = classes[i];
            BigInt term = engine.character_big(lambda, rho);
            if (term == 0) continue;
            term *= engine.character_big(mu, rho);
            if (term == 0) continue;
            term *= engine.character_big(nu, rho);
            if (term == 0) continue;
            partial[t] += term * class_size(rho);
        }
    };
    if (threads == 1 || classes.size() < 32) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    BigInt sum = 0;
    for (auto& p : partial) sum += p;

    const BigInt nf = factorial(n);
    if (sum % nf != 0)
        throw std::logic_error("kronecker: class sum not divisible by n! (character engine bug)");
    BigInt g = sum / nf;
    if (g < 0 || g > std::numeric_limits<std::int64_t>::max())
        throw std::logic_error("kronecker: coefficient out of expected range");
    return g.convert_to<std::int64_t>();
}

StableKronecker stable_kronecker(CharEngine& engine, const Partition& lambda, const Partition& mu,
                                 const Partition& nu, int n_max, int threads) {
    const int n0 = std::max({min_pad(lambda), min_pad(mu), min_pad(nu)});
    std::int64_t prev = 0;
    bool have_prev = false;
    for (int N = n0; N <= n_max; ++N) {
        std::int64_t g = kronecker(engine, pad(lambda, N).value, pad(mu, N).value,
                                   pad(nu, N).value, threads);
        if (have_prev && g == prev) return {g, N - 1};
        prev = g;
        have_prev = true;
    }
    throw std::domain_error("stabilization not detected below N_max");
}

}  // namespace sncalc
