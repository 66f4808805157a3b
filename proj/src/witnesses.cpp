#include "sncalc/witnesses.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "sncalc/kronecker.hpp"
#include "sncalc/tableaux.hpp"

namespace sncalc {

std::string Witness::to_json() const {
    nlohmann::json doc;
    doc["family"] = family;
    doc["target"] = target;
    nlohmann::json d;
    for (const auto& [name, part] : data) d[name] = part.to_string();
    doc["data"] = d;
    doc["verified_value"] = verified_value;
    nlohmann::json p;
    for (const auto& [name, value] : params) p[name] = value;
    doc["params"] = p;
    return doc.dump();
}

namespace {

Partition hook(int arm, int leg_ones) {
    std::vector<int> parts;
    parts.push_back(arm);
    parts.insert(parts.end(), leg_ones, 1);
    return Partition(std::move(parts));
}

void verify(const Witness& w) {
    if (w.verified_value != w.target)
        throw std::logic_error("witness failed self-verification: " + w.to_json());
}

}  // namespace

Partition negative_case_mu(int n, int k) {
    if (!(k >= 1 && (k <= n - 5 || k == n - 3)))
        throw std::domain_error("k outside [1,n-5] u {n-3}");
    std::vector<int> parts;
    if ((k - n) % 2 != 0) {
        parts.push_back(n - k - 1);
    } else {
        parts.push_back(n - k - 4);
        parts.push_back(3);
    }
    parts.insert(parts.end(), k + 1, 1);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Witness char_witness(CharEngine& engine, std::int64_t z, int j) {
    if (j < 0) throw std::domain_error("index must be nonnegative");
    Witness w;
    w.family = "character";
    w.target = z;
    int n;
    Partition lambda, mu;
    if (z >= 0) {
        n = static_cast<int>(z) + 3 + j;
        lambda = hook(n - 1, 1);
        mu = hook(n - static_cast<int>(z) - 1, static_cast<int>(z) + 1);
    } else {
        const int k = static_cast<int>(-z);
        n = k + 5 + j;
        lambda = hook(2, n - 2);
        mu = negative_case_mu(n, k);
    }
    w.data = {{"lambda", lambda}, {"mu", mu}};
    w.params = {{"j", j}, {"n", n}};
    w.verified_value = engine.character(lambda, mu);
    verify(w);
    return w;
}

Witness kostka_witness(std::int64_t k, int j) {
    if (k < 0) throw std::domain_error("kostka targets are nonnegative");
    if (j < 1) throw std::domain_error("index must be positive");
    Witness w;
    w.family = "kostka";
    w.target = k;
    Partition lambda, mu;
    if (k >= 1) {
        lambda = hook(1 + j, static_cast<int>(k) - 1);
        mu = hook(j, static_cast<int>(k));
    } else {
        // Any dominance-violating pair works for k = 0.
        lambda = Partition(std::vector<int>(j + 1, 1));
        mu = Partition(std::vector<int>{j + 1});
    }
    w.data = {{"lambda", lambda}, {"mu", mu}};
    w.params = {{"j", j}};
    w.verified_value = kostka(lambda, mu);
    verify(w);
    return w;
}

Witness lr_witness(std::int64_t k, int j) {
    Witness base = kostka_witness(k, j);
    const Partition& lambda = base.data[0].second;
    const Partition& mu = base.data[1].second;
    auto [sigma, tau] = kostka_as_lr(lambda, mu);
    Witness w;
    w.family = "lr";
    w.target = k;
    w.data = {{"lambda", sigma}, {"mu", lambda}, {"nu", tau}};
    w.params = {{"j", j}};
    w.verified_value = lr_coefficient(sigma, lambda, tau);
    verify(w);
    return w;
}

namespace {

// First size-compatible LR triple with coefficient k, cached: the scan is
// shared by kron_witness calls for different j.
std::array<Partition, 3> first_lr_triple(CharEngine& engine, std::int64_t k) {
    static std::mutex mtx;
    static std::map<std::int64_t, std::array<Partition, 3>> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end()) {
        auto found = enumerate_value_class(engine, CoefficientFamily::LR, k, 1);
        it = cache.emplace(k, found.at(0)).first;
    }
    return it->second;
}

}  // namespace

Witness kron_witness(CharEngine& engine, std::int64_t k, int j, int n_max) {
    if (k < 0) throw std::domain_error("kronecker targets are nonnegative");
    if (j < 1) throw std::domain_error("index must be positive");
    const auto triple = first_lr_triple(engine, k);
    const Partition &a = triple[0], &b = triple[1], &c = triple[2];

    // Scan for the first N with two consecutive padded values equal to k;
    // Murnaghan's theorem makes the stable value c_{a,b}^c = k.
    const int n0 = std::max({min_pad(a), min_pad(b), min_pad(c)});
    int stabilized = -1;
    std::int64_t prev = -1;
    for (int N = n0; N <= n_max; ++N) {
        std::int64_t g = kronecker(engine, pad(a, N).value, pad(b, N).value, pad(c, N).value);
        if (g == k && prev == k) {
            stabilized = N - 1;
            break;
        }
        prev = g;
    }
    if (stabilized < 0) throw std::domain_error("stabilization not detected below N_max");

    const int N = stabilized + (j - 1);
    Witness w;
    w.family = "kronecker";
    w.target = k;
    Partition pa = pad(a, N).value, pb = pad(b, N).value, pc = pad(c, N).value;
    w.data = {{"lambda", pa}, {"mu", pb}, {"nu", pc}};
    w.params = {{"N", N}, {"j", j}, {"stabilized_at_N", stabilized}};
    w.verified_value = kronecker(engine, pa, pb, pc);
    verify(w);
    return w;
}

std::vector<std::array<Partition, 3>> enumerate_value_class(CharEngine& engine,
                                                            CoefficientFamily family,
                                                            std::int64_t k, int limit,
                                                            int max_size) {
    if (limit < 0) throw std::domain_error("limit must be nonnegative");
    if (max_size < 0) max_size = family == CoefficientFamily::LR ? 24 : 12;
    std::vector<std::array<Partition, 3>> out;
    if (limit == 0) return out;

    if (family == CoefficientFamily::LR) {
        for (int n = 0; n <= max_size; ++n) {
            const auto& nus = engine.partitions_of(n).all();
            for (int a = 0; a <= n; ++a) {
                for (const auto& lambda : engine.partitions_of(a).all()) {
                    for (const auto& mu : engine.partitions_of(n - a).all()) {
                        for (const auto& nu : nus) {
                            if (lr_coefficient(lambda, mu, nu, k + 1) != k) continue;
                            out.push_back({lambda, mu, nu});
                            if (static_cast<int>(out.size()) == limit) return out;
                        }
                    }
                }
            }
        }
    } else {
        for (int n = 0; n <= max_size; ++n) {
            const auto& parts = engine.partitions_of(n).all();
            for (const auto& lambda : parts)
                for (const auto& mu : parts)
                    for (const auto& nu : parts) {
                        if (kronecker(engine, lambda, mu, nu) != k) continue;
                        out.push_back({lambda, mu, nu});
                        if (static_cast<int>(out.size()) == limit) return out;
                    }
        }
    }
    throw std::domain_error("value class enumeration exceeded the size ceiling");
}

}  // namespace sncalc
