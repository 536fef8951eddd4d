#ifndef BOXWORLD_EFFECTS_HPP
#define BOXWORLD_EFFECTS_HPP

#include "boxworld/linalg.hpp"
#include "boxworld/system.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace boxworld {

/// A linear functional on states, as coefficients in the canonical basis.
struct EffectCoeffs {
    RVector coeffs;
    std::size_t dim() const { return coeffs.size(); }
    friend bool operator==(const EffectCoeffs&, const EffectCoeffs&) = default;
};

inline EffectCoeffs operator+(const EffectCoeffs& a, const EffectCoeffs& b) { return {a.coeffs + b.coeffs}; }
inline EffectCoeffs operator-(const EffectCoeffs& a, const EffectCoeffs& b) { return {a.coeffs - b.coeffs}; }

inline EffectCoeffs local_identity_coeffs(const SiteSpec& site) {
    RVector v(site.dim());
    v[site.identity_slot()] = 1;
    return {v};
}

inline EffectCoeffs local_effect_coeffs(const SiteSpec& site, const LocalEffectLabel& label) {
    if (!is_valid(site, label))
        throw Error("invalid local label " + to_string(label));
    RVector v(site.dim());
    const int last = site.outcomes(label.m) - 1;
    if (label.k < last) {
        v[site.slot(label.m, label.k)] = 1;
    } else {
        v[site.identity_slot()] = 1;
        for (int k = 0; k < last; ++k) v[site.slot(label.m, k)] = -1;
    }
    return {v};
}

inline EffectCoeffs identity_coeffs(const SystemSpec& sys) {
    RVector v{Rational(1)};
    for (const auto& site : sys.sites()) v = tensor(v, local_identity_coeffs(site).coeffs);
    return {v};
}

inline EffectCoeffs product_effect_coeffs(const SystemSpec& sys, const ProductEffectLabel& label) {
    if (!is_valid(sys, label)) throw Error("invalid product label " + to_string(label));
    RVector v{Rational(1)};
    for (std::size_t i = 0; i < sys.size(); ++i)
        v = tensor(v, local_effect_coeffs(sys.site(i), label.sites[i]).coeffs);
    return {v};
}

/// Local extremal effects of a site, measurement-major then outcome.
inline std::vector<LocalEffectLabel> local_labels(const SiteSpec& site) {
    std::vector<LocalEffectLabel> out;
    for (int m = 0; m < site.measurements(); ++m)
        for (int k = 0; k < site.outcomes(m); ++k) out.push_back({m, k});
    return out;
}

/// All product labels, lexicographic with site 0 most significant.
inline std::vector<ProductEffectLabel> enumerate_extremal_effects(const SystemSpec& sys) {
    std::vector<ProductEffectLabel> out{ProductEffectLabel{}};
    for (const auto& site : sys.sites()) {
        auto locals = local_labels(site);
        std::vector<ProductEffectLabel> next;
        next.reserve(out.size() * locals.size());
        for (const auto& prefix : out)
            for (const auto& l : locals) {
                ProductEffectLabel p = prefix;
                p.sites.push_back(l);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

/// Enumerates every measurement string m_1..m_N in lexicographic order.
template <class Fn>
void for_each_setting(const SystemSpec& sys, Fn&& fn) {
    std::vector<int> settings(sys.size(), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(settings));
        std::size_t i = sys.size();
        while (i > 0) {
            --i;
            if (++settings[i] < sys.site(i).measurements()) break;
            settings[i] = 0;
            if (i == 0) return;
        }
    }
}

/// Enumerates every outcome string for a fixed measurement string.
template <class Fn>
void for_each_outcome(const SystemSpec& sys, const std::vector<int>& settings, Fn&& fn) {
    std::vector<int> outcomes(sys.size(), 0);
    while (true) {
        fn(static_cast<const std::vector<int>&>(outcomes));
        std::size_t i = sys.size();
        while (i > 0) {
            --i;
            if (++outcomes[i] < sys.site(i).outcomes(settings[i])) break;
            outcomes[i] = 0;
            if (i == 0) return;
        }
    }
}

inline ProductEffectLabel make_label(const std::vector<int>& settings, const std::vector<int>& outcomes) {
    ProductEffectLabel l;
    for (std::size_t i = 0; i < settings.size(); ++i) l.sites.push_back({settings[i], outcomes[i]});
    return l;
}

/// Extremal effects of a system with their coefficient vectors and an exact
/// reverse lookup from coefficients to label index.
class EffectCatalog {
public:
    explicit EffectCatalog(SystemSpec sys) : sys_(std::move(sys)) {
        labels_ = enumerate_extremal_effects(sys_);
        coeffs_.reserve(labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            coeffs_.push_back(product_effect_coeffs(sys_, labels_[i]));
            by_key_.emplace(canonical_key(coeffs_.back().coeffs), i);
        }
        identity_ = identity_coeffs(sys_);
    }

    const SystemSpec& system() const { return sys_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<ProductEffectLabel>& labels() const { return labels_; }
    const ProductEffectLabel& label(std::size_t i) const { return labels_[i]; }
    const EffectCoeffs& coeffs(std::size_t i) const { return coeffs_[i]; }
    const std::vector<EffectCoeffs>& all_coeffs() const { return coeffs_; }
    const EffectCoeffs& identity() const { return identity_; }

    std::optional<std::size_t> find(const EffectCoeffs& e) const {
        auto it = by_key_.find(canonical_key(e.coeffs));
        if (it == by_key_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> index_of(const ProductEffectLabel& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || !(*it == l)) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

private:
    SystemSpec sys_;
    std::vector<ProductEffectLabel> labels_;
    std::vector<EffectCoeffs> coeffs_;
    EffectCoeffs identity_;
    std::unordered_map<std::string, std::size_t> by_key_;
};

}  // namespace boxworld

#endif  // BOXWORLD_EFFECTS_HPP
