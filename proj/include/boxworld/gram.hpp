#ifndef BOXWORLD_GRAM_HPP
#define BOXWORLD_GRAM_HPP

#include "boxworld/effects.hpp"

#include <cstddef>
#include <vector>

namespace boxworld {

/// Gram matrix of n+1 unit vectors in Rⁿ with pairwise inner product -1/n
/// (the vertices of a centred regular simplex).
inline RMatrix simplex_gram(int n) {
    if (n < 1) throw Error("simplex_gram: n must be >= 1");
    const auto size = static_cast<std::size_t>(n + 1);
    RMatrix g(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) g(i, j) = (i == j) ? Rational(1) : Rational(-1, n);
    return g;
}

/// Inner product of two local extremal effects in the orthogonal
/// representation, scaled so that ⟨1̄,1̄⟩ = 1:
///   different measurements              1 / (K(m) K(m'))
///   same measurement, different outcome (1 - M) / K(m)²
///   same effect                         (1 + M (K(m) - 1)) / K(m)²
/// For measurement-dependent K this is an extension of the uniform-K
/// constants; it is only used for pruning.
inline Rational gram_local(const SiteSpec& site, const LocalEffectLabel& a, const LocalEffectLabel& b) {
    if (!is_valid(site, a) || !is_valid(site, b))
        throw Error("gram_local: invalid label");
    const int big_m = site.measurements();
    if (a.m != b.m) return Rational(1, site.outcomes(a.m) * site.outcomes(b.m));
    const int k = site.outcomes(a.m);
    if (a.k != b.k) return Rational(1 - big_m, k * k);
    return Rational(1 + big_m * (k - 1), k * k);
}

inline Rational gram_product(const SystemSpec& sys, const ProductEffectLabel& q, const ProductEffectLabel& r) {
    if (q.sites.size() != sys.size() || r.sites.size() != sys.size())
        throw Error("gram_product: label does not match system");
    Rational g = 1;
    for (std::size_t i = 0; i < sys.size(); ++i) g *= gram_local(sys.site(i), q.sites[i], r.sites[i]);
    return g;
}

/// Number of sites where the labels differ.
inline std::size_t hamming(const ProductEffectLabel& q, const ProductEffectLabel& r) {
    if (q.sites.size() != r.sites.size()) throw Error("hamming: labels of different systems");
    std::size_t d = 0;
    for (std::size_t i = 0; i < q.sites.size(); ++i)
        if (!(q.sites[i] == r.sites[i])) ++d;
    return d;
}

/// Per-site Gram tables over local extremal effects (order of local_labels).
struct GramTable {
    std::vector<RMatrix> sites;
};

inline RMatrix gram_local_table(const SiteSpec& site) {
    auto labels = local_labels(site);
    RMatrix g(labels.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j) g(i, j) = gram_local(site, labels[i], labels[j]);
    return g;
}

inline GramTable gram_table(const SystemSpec& sys) {
    GramTable t;
    for (const auto& s : sys.sites()) t.sites.push_back(gram_local_table(s));
    return t;
}

/// Full Gram matrix over an effect catalog, in catalog order.
inline RMatrix gram_matrix(const EffectCatalog& cat) {
    RMatrix g(cat.size(), cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i; j < cat.size(); ++j) {
            g(i, j) = gram_product(cat.system(), cat.label(i), cat.label(j));
            g(j, i) = g(i, j);
        }
    return g;
}

}  // namespace boxworld

#endif  // BOXWORLD_GRAM_HPP
