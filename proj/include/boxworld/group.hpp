#ifndef BOXWORLD_GROUP_HPP
#define BOXWORLD_GROUP_HPP

#include "boxworld/transforms.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace boxworld {

enum class Provenance { generated, searched };

inline const char* to_string(Provenance p) { return p == Provenance::generated ? "generated" : "searched"; }

/// A finite group of linear maps, deduplicated by exact matrix.
class TransformGroup {
public:
    TransformGroup() = default;
    TransformGroup(Provenance provenance, std::vector<LinearMap> generators)
        : provenance_(provenance), generators_(std::move(generators)) {}

    /// Adds `t` unless already present; returns true if it was new.
    bool insert(const LinearMap& t) {
        auto [it, fresh] = index_.emplace(t.key(), elements_.size());
        if (fresh) elements_.push_back(t);
        return fresh;
    }

    bool contains(const LinearMap& t) const { return index_.count(t.key()) != 0; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<LinearMap>& elements() const { return elements_; }
    const std::vector<LinearMap>& generators() const { return generators_; }
    Provenance provenance() const { return provenance_; }

    std::set<std::string> keys() const {
        std::set<std::string> k;
        for (const auto& [key, idx] : index_) k.insert(key);
        return k;
    }

    /// Reorders elements by exact matrix order.
    void sort() {
        std::sort(elements_.begin(), elements_.end());
        index_.clear();
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);
    }

private:
    Provenance provenance_ = Provenance::generated;
    std::vector<LinearMap> generators_;
    std::vector<LinearMap> elements_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline bool group_membership(const LinearMap& t, const TransformGroup& g) { return g.contains(t); }

inline bool setwise_equal(const TransformGroup& a, const TransformGroup& b) {
    return a.order() == b.order() && a.keys() == b.keys();
}

class NotAllowedError : public Error {
public:
    using Error::Error;
};

/// Breadth-first closure of the generators under composition. Elements come
/// out in discovery order, which is deterministic for a fixed generator list.
inline TransformGroup generate_group(const EffectCatalog& cat, const std::vector<LinearMap>& generators,
                                     bool check_generators = true) {
    const std::size_t d = cat.system().dim();
    if (check_generators)
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (!is_reversible_allowed(cat, generators[i]))
                throw NotAllowedError("generator " + std::to_string(i) + " is not a reversible allowed map");
    TransformGroup g(Provenance::generated, generators);
    std::deque<LinearMap> frontier{LinearMap::identity(d)};
    g.insert(frontier.front());
    while (!frontier.empty()) {
        LinearMap cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& h : generators) {
            LinearMap next = h.after(cur);
            if (g.insert(next)) frontier.push_back(std::move(next));
        }
    }
    return g;
}

inline Integer factorial(std::size_t n) {
    Integer f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

/// Order of the group of site permutations and local relabellings:
/// Π over classes of equal sites |c|!, times per site the number of
/// measurement permutations preserving the outcome profile and Π_m K(m)!.
inline Integer trivial_group_order(const SystemSpec& sys) {
    Integer order = 1;
    std::map<std::vector<int>, std::size_t> site_classes;
    for (const auto& s : sys.sites()) ++site_classes[s.outcome_counts()];
    for (const auto& [profile, count] : site_classes) order *= factorial(count);
    for (const auto& s : sys.sites()) {
        std::map<int, std::size_t> by_k;
        for (int k : s.outcome_counts()) {
            ++by_k[k];
            order *= factorial(static_cast<std::size_t>(k));
        }
        for (const auto& [k, count] : by_k) order *= factorial(count);
    }
    return order;
}

inline TransformGroup trivial_group(const EffectCatalog& cat) {
    return generate_group(cat, trivial_generators(cat.system()));
}

}  // namespace boxworld

#endif  // BOXWORLD_GROUP_HPP
