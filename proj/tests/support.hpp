#pragma once

#include <map>
#include <random>
#include <vector>

#include "semiring_lab/catalog.hpp"
#include "semiring_lab/enumerate.hpp"
#include "semiring_lab/semiring.hpp"

namespace test_support {

/// Enumerated semirings of one order, computed once per process.
inline const std::vector<semiring_lab::FiniteSemiring>& corpus(std::size_t order) {
    static std::map<std::size_t, std::vector<semiring_lab::FiniteSemiring>> cache;
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, semiring_lab::enumerate_semirings(order)).first;
    }
    return it->second;
}

inline std::vector<semiring_lab::FiniteSemiring> corpus_up_to(std::size_t order) {
    std::vector<semiring_lab::FiniteSemiring> out;
    for (std::size_t k = 1; k <= order; ++k) {
        const auto& c = corpus(k);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240517);
    return engine;
}

}  // namespace test_support
