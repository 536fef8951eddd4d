#ifndef BOXWORLD_TRANSFORMS_HPP
#define BOXWORLD_TRANSFORMS_HPP

#include "boxworld/cone.hpp"
#include "boxworld/state.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace boxworld {

/// A linear map on states. Its adjoint acts on effect coefficients and is
/// the transpose, since the pairing is Σ_j E_j s_j.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(RMatrix m) : m_(std::move(m)) {
        if (!m_.is_square()) throw DimensionError("LinearMap needs a square matrix");
    }
    static LinearMap identity(std::size_t d) { return LinearMap(RMatrix::identity(d)); }
    /// The map whose adjoint (action on effects) is `adjoint_matrix`.
    static LinearMap from_adjoint(const RMatrix& adjoint_matrix) { return LinearMap(adjoint_matrix.transpose()); }

    const RMatrix& matrix() const { return m_; }
    RMatrix adjoint_matrix() const { return m_.transpose(); }
    std::size_t dim() const { return m_.rows(); }

    StateVector apply(const StateVector& s) const { return {m_ * s.values}; }
    /// T†E.
    EffectCoeffs apply_adjoint(const EffectCoeffs& e) const { return {m_.transpose() * e.coeffs}; }

    /// `*this` after `first`: (this ∘ first)(s) = this(first(s)).
    LinearMap after(const LinearMap& first) const { return LinearMap(m_ * first.m_); }

    std::string key() const { return canonical_key(m_); }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;
    friend bool operator<(const LinearMap& a, const LinearMap& b) { return a.m_ < b.m_; }

private:
    RMatrix m_;
};

inline LinearMap adjoint(const LinearMap& t) { return LinearMap(t.matrix().transpose()); }

struct AllowedReport {
    bool ok = true;
    bool identity_fixed = true;
    /// First extremal effect whose adjoint image leaves the effect cone.
    std::optional<ProductEffectLabel> witness;
};

/// T maps states to states iff T†1̄ = 1̄ and T†A lies in the effect cone
/// for every extremal effect A.
inline AllowedReport is_allowed(const EffectCatalog& cat, const LinearMap& t) {
    if (t.dim() != cat.system().dim()) throw DimensionError("is_allowed: map dimension mismatch");
    AllowedReport r;
    const RMatrix adj = t.adjoint_matrix();
    if (!(EffectCoeffs{adj * cat.identity().coeffs} == cat.identity())) {
        r.ok = false;
        r.identity_fixed = false;
        return r;
    }
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EffectCoeffs img{adj * cat.coeffs(i).coeffs};
        if (!cone_member(cat, img).member) {
            r.ok = false;
            r.witness = cat.label(i);
            return r;
        }
    }
    return r;
}

/// For each extremal effect i, the index of T†A_i if it is again an
/// extremal effect (scale exactly 1); nullopt if any image is not, or if
/// two effects share an image.
inline std::optional<std::vector<std::size_t>> label_action(const EffectCatalog& cat, const LinearMap& t) {
    const RMatrix adj = t.adjoint_matrix();
    std::vector<std::size_t> perm(cat.size());
    std::vector<bool> hit(cat.size(), false);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        auto j = cat.find(EffectCoeffs{adj * cat.coeffs(i).coeffs});
        if (!j || hit[*j]) return std::nullopt;
        hit[*j] = true;
        perm[i] = *j;
    }
    return perm;
}

struct ReversibilityReport {
    bool ok = false;
    bool invertible = false;
    AllowedReport forward;
    AllowedReport inverse;
    /// Set when ok: the adjoint permutes the extremal effects with scale 1.
    std::optional<std::vector<std::size_t>> permutation;
};

class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline ReversibilityReport check_reversible(const EffectCatalog& cat, const LinearMap& t) {
    ReversibilityReport r;
    auto inv = try_invert(t.matrix());
    if (!inv) return r;
    r.invertible = true;
    r.forward = is_allowed(cat, t);
    if (!r.forward.ok) return r;
    r.inverse = is_allowed(cat, LinearMap(*inv));
    if (!r.inverse.ok) return r;
    r.ok = true;
    // A reversible adjoint must permute the extremal effects exactly.
    r.permutation = label_action(cat, t);
    if (!r.permutation)
        throw InvariantViolation("reversible map whose adjoint does not permute the extremal effects");
    return r;
}

inline bool is_reversible_allowed(const EffectCatalog& cat, const LinearMap& t) { return check_reversible(cat, t).ok; }

/// The linear map whose adjoint sends extremal effect i to effect perm[i]
/// and fixes the identity, if one exists.
inline std::optional<LinearMap> extend_label_permutation(const EffectCatalog& cat,
                                                         const std::vector<std::size_t>& perm) {
    const std::size_t d = cat.system().dim();
    if (perm.size() != cat.size()) throw Error("label permutation has wrong length");
    std::vector<RVector> domain{cat.identity().coeffs};
    std::vector<RVector> image{cat.identity().coeffs};
    for (std::size_t i = 0; i < cat.size() && domain.size() < d; ++i) {
        domain.push_back(cat.coeffs(i).coeffs);
        if (rank_of(domain, d) < domain.size()) {
            domain.pop_back();
            continue;
        }
        image.push_back(cat.coeffs(perm[i]).coeffs);
    }
    RMatrix adj = RMatrix::from_columns(image, d) * invert(RMatrix::from_columns(domain, d));
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (!(adj * cat.coeffs(i).coeffs == cat.coeffs(perm[i]).coeffs)) return std::nullopt;
    return LinearMap::from_adjoint(adj);
}

// ---------------------------------------------------------------------------
// Trivial generators. Each is built directly from its action on the
// canonical basis, not from the label action.

/// Sends the factor at site i to site perm[i]. Only sites of equal type may
/// be exchanged.
inline LinearMap generator_site_permutation(const SystemSpec& sys, const std::vector<std::size_t>& perm) {
    const std::size_t n = sys.size();
    if (perm.size() != n) throw Error("site permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]]) throw Error("site permutation is not a bijection");
        seen[perm[i]] = true;
        if (!(sys.site(i) == sys.site(perm[i])))
            throw Error("site permutation exchanges sites of different type (" + std::to_string(i) + " -> " +
                        std::to_string(perm[i]) + ")");
    }
    const std::size_t d = sys.dim();
    RMatrix adj(d, d);
    std::vector<std::size_t> digits(n);
    for (std::size_t idx = 0; idx < d; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            digits[i] = rest / sys.stride(i);
            rest %= sys.stride(i);
        }
        std::size_t target = 0;
        for (std::size_t i = 0; i < n; ++i) target += digits[i] * sys.stride(perm[i]);
        adj(target, idx) = 1;
    }
    return LinearMap::from_adjoint(adj);
}

namespace detail {

inline LinearMap embed_local_adjoint(const SystemSpec& sys, std::size_t site, const RMatrix& local_adj) {
    RMatrix adj = RMatrix::identity(1);
    for (std::size_t i = 0; i < sys.size(); ++i)
        adj = tensor_map(adj, i == site ? local_adj : RMatrix::identity(sys.site(i).dim()));
    return LinearMap::from_adjoint(adj);
}

inline void check_bijection(const std::vector<int>& perm, int n, const char* what) {
    if (static_cast<int>(perm.size()) != n) throw Error(std::string(what) + " has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw Error(std::string(what) + " is not a bijection");
        seen[static_cast<std::size_t>(p)] = true;
    }
}

}  // namespace detail

/// Adjoint sends X_m(k) to X_perm[m](k) at `site`.
inline LinearMap generator_relabel_measurements(const SystemSpec& sys, std::size_t site_index,
                                                const std::vector<int>& perm) {
    const SiteSpec& site = sys.site(site_index);
    detail::check_bijection(perm, site.measurements(), "measurement permutation");
    for (int m = 0; m < site.measurements(); ++m)
        if (site.outcomes(m) != site.outcomes(perm[static_cast<std::size_t>(m)]))
            throw Error("measurement permutation mixes measurements with different outcome counts");
    RMatrix local(site.dim(), site.dim());
    for (int m = 0; m < site.measurements(); ++m)
        for (int k = 0; k + 1 < site.outcomes(m); ++k)
            local(site.slot(perm[static_cast<std::size_t>(m)], k), site.slot(m, k)) = 1;
    local(site.identity_slot(), site.identity_slot()) = 1;
    return detail::embed_local_adjoint(sys, site_index, local);
}

/// Adjoint sends X_m(k) to X_m(perm[k]) at `site`, other measurements fixed.
inline LinearMap generator_relabel_outcomes(const SystemSpec& sys, std::size_t site_index, int m,
                                            const std::vector<int>& perm) {
    const SiteSpec& site = sys.site(site_index);
    if (m < 0 || m >= site.measurements()) throw Error("measurement index out of range");
    detail::check_bijection(perm, site.outcomes(m), "outcome permutation");
    RMatrix local = RMatrix::identity(site.dim());
    for (int k = 0; k + 1 < site.outcomes(m); ++k) {
        const std::size_t col = site.slot(m, k);
        for (std::size_t r = 0; r < site.dim(); ++r) local(r, col) = 0;
        auto img = local_effect_coeffs(site, {m, perm[static_cast<std::size_t>(k)]});
        for (std::size_t r = 0; r < site.dim(); ++r) local(r, col) = img.coeffs[r];
    }
    return detail::embed_local_adjoint(sys, site_index, local);
}

/// A generating set for the group of site permutations and local
/// relabellings: adjacent transpositions of equal sites, adjacent
/// transpositions of equal-K measurements, and per measurement an outcome
/// transposition plus (for K > 2) a K-cycle.
inline std::vector<LinearMap> trivial_generators(const SystemSpec& sys) {
    std::vector<LinearMap> gens;
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j)
            if (sys.site(i) == sys.site(j)) {
                bool adjacent = true;
                for (std::size_t l = i + 1; l < j; ++l)
                    if (sys.site(l) == sys.site(i)) adjacent = false;
                if (!adjacent) continue;
                std::vector<std::size_t> p(sys.size());
                for (std::size_t t = 0; t < p.size(); ++t) p[t] = t;
                std::swap(p[i], p[j]);
                gens.push_back(generator_site_permutation(sys, p));
            }
    for (std::size_t s = 0; s < sys.size(); ++s) {
        const SiteSpec& site = sys.site(s);
        const int big_m = site.measurements();
        for (int m = 0; m < big_m; ++m)
            for (int m2 = m + 1; m2 < big_m; ++m2) {
                if (site.outcomes(m) != site.outcomes(m2)) continue;
                bool adjacent = true;
                for (int l = m + 1; l < m2; ++l)
                    if (site.outcomes(l) == site.outcomes(m)) adjacent = false;
                if (!adjacent) continue;
                std::vector<int> p(static_cast<std::size_t>(big_m));
                for (int t = 0; t < big_m; ++t) p[static_cast<std::size_t>(t)] = t;
                std::swap(p[static_cast<std::size_t>(m)], p[static_cast<std::size_t>(m2)]);
                gens.push_back(generator_relabel_measurements(sys, s, p));
            }
        for (int m = 0; m < big_m; ++m) {
            const int k = site.outcomes(m);
            std::vector<int> swap01(static_cast<std::size_t>(k));
            for (int t = 0; t < k; ++t) swap01[static_cast<std::size_t>(t)] = t;
            std::swap(swap01[0], swap01[1]);
            gens.push_back(generator_relabel_outcomes(sys, s, m, swap01));
            if (k > 2) {
                std::vector<int> cycle(static_cast<std::size_t>(k));
                for (int t = 0; t < k; ++t) cycle[static_cast<std::size_t>(t)] = (t + 1) % k;
                gens.push_back(generator_relabel_outcomes(sys, s, m, cycle));
            }
        }
    }
    return gens;
}

}  // namespace boxworld

#endif  // BOXWORLD_TRANSFORMS_HPP
