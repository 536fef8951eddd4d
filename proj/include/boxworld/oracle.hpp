#ifndef BOXWORLD_ORACLE_HPP
#define BOXWORLD_ORACLE_HPP

// Brute-force cross-checks. Slow and independent of the main algorithms;
// used by the test suites and by the CLI's --oracle flag.

#include "boxworld/state.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

namespace boxworld::oracle {

/// Vertices of the state polytope from every choice of D-1 tight facets:
/// solve the tight system plus normalization exactly and keep feasible
/// unique solutions. Sorted, deduplicated.
inline std::vector<StateVector> brute_force_vertices(const EffectCatalog& cat) {
    const std::size_t d = cat.system().dim();
    const std::size_t n = cat.size();
    const std::size_t pick = d - 1;
    std::set<RVector> found;
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    if (pick > n) return {};
    while (true) {
        RMatrix a(d, d);
        RVector b(d);
        for (std::size_t r = 0; r < pick; ++r)
            for (std::size_t c = 0; c < d; ++c) a(r, c) = cat.coeffs(idx[r]).coeffs[c];
        for (std::size_t c = 0; c < d; ++c) a(pick, c) = cat.identity().coeffs[c];
        b[pick] = 1;
        auto sol = solve_exact(a, b);
        if (sol.kind == SolveResult::Kind::unique) {
            bool feasible = true;
            for (std::size_t e = 0; e < n && feasible; ++e)
                if (dot(cat.coeffs(e).coeffs, sol.solution) < 0) feasible = false;
            if (feasible) found.insert(sol.solution);
        }
        // Next combination in lexicographic order.
        std::size_t i = pick;
        while (i > 0 && idx[i - 1] == n - pick + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::vector<StateVector> out;
    for (const auto& v : found) out.push_back(StateVector{v});
    return out;
}

/// State from a table by marginals: the value on a basis effect is the
/// table probability of its non-identity factors, with identity factors
/// summed out under measurement 0. No linear solve.
inline StateVector state_by_marginals(const SystemSpec& sys, const ProbabilityTable& t) {
    RVector v(sys.dim());
    for (std::size_t idx = 0; idx < sys.dim(); ++idx) {
        std::vector<int> settings(sys.size()), fixed(sys.size(), -1);
        std::size_t rest = idx;
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const SiteSpec& site = sys.site(i);
            std::size_t slot = rest / sys.stride(i);
            rest %= sys.stride(i);
            if (slot == site.identity_slot()) continue;
            int m = 0;
            while (!(slot >= site.slot(m, 0) && slot < site.slot(m, 0) + static_cast<std::size_t>(site.outcomes(m) - 1)))
                ++m;
            settings[i] = m;
            fixed[i] = static_cast<int>(slot - site.slot(m, 0));
        }
        Rational sum = 0;
        for_each_outcome(sys, settings, [&](const std::vector<int>& k) {
            for (std::size_t i = 0; i < sys.size(); ++i)
                if (fixed[i] >= 0 && k[i] != fixed[i]) return;
            sum += t.at(settings, k);
        });
        v[idx] = sum;
    }
    return {v};
}

}  // namespace boxworld::oracle

#endif  // BOXWORLD_ORACLE_HPP
