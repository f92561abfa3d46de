// Test-only oracles, kept independent of the implementation paths they check.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "qmut/quiver.hpp"

namespace qmut::oracle {

// factorial-time isomorphism search; frozen maps to frozen
inline std::optional<Perm> brute_force_isomorphism(const WeightedQuiver& a,
                                                   const WeightedQuiver& b) {
    if (a.n != b.n) return std::nullopt;
    Perm p(a.n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (is_isomorphism(a, b, p)) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

// identity on frozen nodes required
inline std::optional<Perm> brute_force_frozen_isomorphism(const WeightedQuiver& a,
                                                          const WeightedQuiver& b) {
    if (a.n != b.n) return std::nullopt;
    int m = a.mutable_count();
    Perm sub(m);
    std::iota(sub.begin(), sub.end(), 0);
    do {
        Perm p(a.n);
        for (int i = 0; i < m; ++i) p[i] = sub[i];
        for (int i = m; i < a.n; ++i) p[i] = i;
        if (is_isomorphism(a, b, p)) return p;
    } while (std::next_permutation(sub.begin(), sub.end()));
    return std::nullopt;
}

inline WeightedQuiver random_quiver(int n, std::mt19937& rng, int max_weight = 3,
                                    int max_mult = 2) {
    WeightedQuiver q(n);
    std::uniform_int_distribution<int> w(1, max_weight), m(-max_mult, max_mult);
    for (int i = 0; i < n; ++i) q.weight[i] = w(rng);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) q.set_arrows(i, j, m(rng));
    return q;
}

inline Perm random_perm(int n, std::mt19937& rng) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// random mutable node
inline int random_mutable(const WeightedQuiver& q, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, q.mutable_count() - 1);
    return d(rng);
}

}  // namespace qmut::oracle
