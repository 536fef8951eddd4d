#ifndef BOXWORLD_TESTS_SUPPORT_HPP
#define BOXWORLD_TESTS_SUPPORT_HPP

#include "boxworld/boxworld.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace boxworld::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20261016);
    return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational small_rational() { return Rational(uniform_int(-9, 9), uniform_int(1, 6)); }

inline RMatrix random_matrix(std::size_t r, std::size_t c) {
    RMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational();
    return m;
}

inline RVector random_vector(std::size_t n) {
    RVector v(n);
    for (auto& x : v) x = small_rational();
    return v;
}

/// Random heterogeneous system with dimension at most `max_dim`.
inline SystemSpec random_system(std::size_t max_dim) {
    while (true) {
        std::vector<std::vector<int>> outcomes;
        const int n = uniform_int(1, 3);
        for (int i = 0; i < n; ++i) {
            std::vector<int> site;
            const int m = uniform_int(1, 3);
            for (int j = 0; j < m; ++j) site.push_back(uniform_int(2, 4));
            outcomes.push_back(site);
        }
        SystemSpec sys = SystemSpec::from_outcomes(outcomes);
        if (sys.dim() <= max_dim) return sys;
    }
}

inline StateVector random_local_pure(const SiteSpec& site) {
    std::vector<int> a;
    for (int m = 0; m < site.measurements(); ++m) a.push_back(uniform_int(0, site.outcomes(m) - 1));
    return local_pure_state(site, a);
}

/// Random convex mixture of pure product states.
inline StateVector random_product_mixture(const SystemSpec& sys, int terms = 3) {
    std::vector<StateVector> states;
    std::vector<Rational> weights;
    Rational total = 0;
    for (int t = 0; t < terms; ++t) {
        std::vector<StateVector> f;
        for (const auto& s : sys.sites()) f.push_back(random_local_pure(s));
        states.push_back(product_state(f));
        weights.emplace_back(uniform_int(1, 7));
        total += weights.back();
    }
    for (auto& w : weights) w /= total;
    return mixture(states, weights);
}

/// Random convex mixture of the given vertices.
inline StateVector random_vertex_mixture(const std::vector<StateVector>& vertices, int terms = 4) {
    std::vector<StateVector> states;
    std::vector<Rational> weights;
    Rational total = 0;
    for (int t = 0; t < terms; ++t) {
        states.push_back(vertices[static_cast<std::size_t>(uniform_int(0, static_cast<int>(vertices.size()) - 1))]);
        weights.emplace_back(uniform_int(1, 9));
        total += weights.back();
    }
    for (auto& w : weights) w /= total;
    return mixture(states, weights);
}

}  // namespace boxworld::testing

#endif  // BOXWORLD_TESTS_SUPPORT_HPP
