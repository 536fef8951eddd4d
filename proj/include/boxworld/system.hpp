#ifndef BOXWORLD_SYSTEM_HPP
#define BOXWORLD_SYSTEM_HPP

#include "boxworld/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace boxworld {

/// One subsystem: outcome_counts[m] = K(m) for measurement m.
///
/// Local effect basis (the "canonical-v1" basis): slots X_m(k) for
/// k = 0..K(m)-2, measurement-major, followed by a final identity slot.
/// The last outcome X_m(K(m)-1) is not a basis slot; it equals the
/// identity minus the other outcomes of the same measurement.
class SiteSpec {
public:
    SiteSpec() = default;
    explicit SiteSpec(std::vector<int> outcome_counts) : outcomes_(std::move(outcome_counts)) {
        if (outcomes_.empty()) throw Error("site needs at least one measurement");
        for (std::size_t m = 0; m < outcomes_.size(); ++m)
            if (outcomes_[m] < 2)
                throw Error("measurement " + std::to_string(m) + " has " +
                            std::to_string(outcomes_[m]) + " outcomes; at least 2 required");
        offsets_.resize(outcomes_.size());
        std::size_t off = 0;
        for (std::size_t m = 0; m < outcomes_.size(); ++m) {
            offsets_[m] = off;
            off += static_cast<std::size_t>(outcomes_[m] - 1);
        }
        dim_ = off + 1;
        for (int k : outcomes_) effect_count_ += static_cast<std::size_t>(k);
    }

    int measurements() const { return static_cast<int>(outcomes_.size()); }
    int outcomes(int m) const { return outcomes_.at(static_cast<std::size_t>(m)); }
    const std::vector<int>& outcome_counts() const { return outcomes_; }

    /// D_i = Σ_m (K(m) - 1) + 1.
    std::size_t dim() const { return dim_; }
    /// Number of local extremal effects, Σ_m K(m).
    std::size_t effect_count() const { return effect_count_; }
    bool is_classical() const { return outcomes_.size() == 1; }
    /// Every measurement has the same number of outcomes.
    bool uniform_outcomes() const {
        for (int k : outcomes_)
            if (k != outcomes_.front()) return false;
        return true;
    }

    /// Basis slot of X_m(k); only valid for k <= K(m) - 2.
    std::size_t slot(int m, int k) const { return offsets_[static_cast<std::size_t>(m)] + static_cast<std::size_t>(k); }
    std::size_t identity_slot() const { return dim_ - 1; }

    friend bool operator==(const SiteSpec& a, const SiteSpec& b) { return a.outcomes_ == b.outcomes_; }
    friend auto operator<=>(const SiteSpec& a, const SiteSpec& b) { return a.outcomes_ <=> b.outcomes_; }

private:
    std::vector<int> outcomes_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
    std::size_t effect_count_ = 0;
};

/// An ordered composite of sites. Flattened indices put site 0 most significant.
class SystemSpec {
public:
    SystemSpec() = default;
    explicit SystemSpec(std::vector<SiteSpec> sites) : sites_(std::move(sites)) {
        if (sites_.empty()) throw Error("system needs at least one site");
        strides_.assign(sites_.size(), 1);
        for (std::size_t i = sites_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * sites_[i].dim();
        dim_ = strides_[0] * sites_[0].dim();
    }

    /// Convenience: one vector of outcome counts per site.
    static SystemSpec from_outcomes(const std::vector<std::vector<int>>& outcomes) {
        std::vector<SiteSpec> sites;
        for (const auto& o : outcomes) sites.emplace_back(o);
        return SystemSpec(std::move(sites));
    }

    std::size_t size() const { return sites_.size(); }
    const SiteSpec& site(std::size_t i) const { return sites_.at(i); }
    const std::vector<SiteSpec>& sites() const { return sites_; }

    /// D = Π_i D_i.
    std::size_t dim() const { return dim_; }
    std::size_t stride(std::size_t i) const { return strides_[i]; }

    std::size_t effect_count() const {
        std::size_t n = 1;
        for (const auto& s : sites_) n *= s.effect_count();
        return n;
    }

    /// Every site has measurement-independent outcome counts. The frame
    /// operator of the orthogonal representation is then a multiple of the
    /// identity, so reversible maps preserve the Gram table.
    bool gram_invariant() const {
        for (const auto& s : sites_)
            if (!s.uniform_outcomes()) return false;
        return true;
    }

    /// All sites identical with M >= 2 and uniform K.
    bool homogeneous() const {
        for (const auto& s : sites_)
            if (!(s == sites_.front())) return false;
        return sites_.front().measurements() >= 2 && sites_.front().uniform_outcomes();
    }

    friend bool operator==(const SystemSpec& a, const SystemSpec& b) { return a.sites_ == b.sites_; }

    std::string describe() const {
        std::string out;
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            if (i) out += " x ";
            out += "[";
            for (std::size_t m = 0; m < sites_[i].outcome_counts().size(); ++m) {
                if (m) out += ",";
                out += std::to_string(sites_[i].outcome_counts()[m]);
            }
            out += "]";
        }
        return out;
    }

private:
    std::vector<SiteSpec> sites_;
    std::vector<std::size_t> strides_;
    std::size_t dim_ = 0;
};

/// Measurement m with outcome k on one site.
struct LocalEffectLabel {
    int m = 0;
    int k = 0;
    friend auto operator<=>(const LocalEffectLabel&, const LocalEffectLabel&) = default;
};

/// One local label per site.
struct ProductEffectLabel {
    std::vector<LocalEffectLabel> sites;
    friend auto operator<=>(const ProductEffectLabel&, const ProductEffectLabel&) = default;
    friend bool operator==(const ProductEffectLabel&, const ProductEffectLabel&) = default;
};

inline bool is_valid(const SiteSpec& site, const LocalEffectLabel& l) {
    return l.m >= 0 && l.m < site.measurements() && l.k >= 0 && l.k < site.outcomes(l.m);
}

inline bool is_valid(const SystemSpec& sys, const ProductEffectLabel& l) {
    if (l.sites.size() != sys.size()) return false;
    for (std::size_t i = 0; i < sys.size(); ++i)
        if (!is_valid(sys.site(i), l.sites[i])) return false;
    return true;
}

/// "X0(1)" style name; product labels join sites with '*'.
inline std::string to_string(const LocalEffectLabel& l) {
    return "X" + std::to_string(l.m) + "(" + std::to_string(l.k) + ")";
}

inline std::string to_string(const ProductEffectLabel& l) {
    std::string out;
    for (std::size_t i = 0; i < l.sites.size(); ++i) {
        if (i) out += "*";
        out += to_string(l.sites[i]);
    }
    return out;
}

/// Standard systems used throughout the tests and the CLI.
namespace systems {
inline SystemSpec gbits(std::size_t n) {
    return SystemSpec(std::vector<SiteSpec>(n, SiteSpec({2, 2})));
}
inline SystemSpec gbit_classical_bit() { return SystemSpec::from_outcomes({{2, 2}, {2}}); }
}  // namespace systems

}  // namespace boxworld

#endif  // BOXWORLD_SYSTEM_HPP
