#ifndef BOXWORLD_THEOREMS_HPP
#define BOXWORLD_THEOREMS_HPP

#include "boxworld/polytope.hpp"
#include "boxworld/search.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace boxworld {

/// A label action written as a site permutation followed by per-site
/// relabellings: image(l)[site_perm[i]] = local_maps[i][l_i].
struct LabelFactorization {
    std::vector<std::size_t> site_perm;
    /// Per source site, the image of each local label (local_labels order).
    std::vector<std::vector<LocalEffectLabel>> local_maps;
    /// Set when every local map is a relabelling of measurements and of
    /// outcomes per measurement; measurement_perm[i][m] and
    /// outcome_perm[i][m][k] then describe it.
    bool local_relabellings = false;
    std::vector<std::vector<int>> measurement_perm;
    std::vector<std::vector<std::vector<int>>> outcome_perm;
};

/// Splits a permutation of the extremal effects into a site permutation and
/// local label bijections; nullopt if it has no such form.
inline std::optional<LabelFactorization> factorize(const EffectCatalog& cat, const std::vector<std::size_t>& perm) {
    const SystemSpec& sys = cat.system();
    const std::size_t n = sys.size();
    const ProductEffectLabel& base = cat.label(0);
    const ProductEffectLabel& base_img = cat.label(perm[0]);
    LabelFactorization f;
    f.site_perm.assign(n, n);
    f.local_maps.resize(n);

    auto image_of = [&](const ProductEffectLabel& l) -> const ProductEffectLabel& {
        return cat.label(perm[*cat.index_of(l)]);
    };

    std::vector<bool> target_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        auto locals = local_labels(sys.site(i));
        std::size_t target = n;
        for (const auto& a : locals) {
            if (a == base.sites[i]) continue;
            ProductEffectLabel probe = base;
            probe.sites[i] = a;
            const auto& img = image_of(probe);
            if (hamming(img, base_img) != 1) return std::nullopt;
            std::size_t j = 0;
            while (img.sites[j] == base_img.sites[j]) ++j;
            if (target == n)
                target = j;
            else if (target != j)
                return std::nullopt;
        }
        if (target == n || target_used[target]) return std::nullopt;
        target_used[target] = true;
        f.site_perm[i] = target;
        for (const auto& a : locals) {
            ProductEffectLabel probe = base;
            probe.sites[i] = a;
            f.local_maps[i].push_back(image_of(probe).sites[target]);
        }
    }
    // The factorized form must reproduce the whole action.
    for (std::size_t idx = 0; idx < cat.size(); ++idx) {
        const auto& l = cat.label(idx);
        const auto& img = cat.label(perm[idx]);
        for (std::size_t i = 0; i < n; ++i) {
            auto locals = local_labels(sys.site(i));
            auto pos = static_cast<std::size_t>(std::find(locals.begin(), locals.end(), l.sites[i]) - locals.begin());
            if (!(img.sites[f.site_perm[i]] == f.local_maps[i][pos])) return std::nullopt;
        }
    }
    // Relabelling structure: each measurement's outcomes map onto one
    // measurement's outcomes.
    f.local_relabellings = true;
    f.measurement_perm.resize(n);
    f.outcome_perm.resize(n);
    for (std::size_t i = 0; i < n && f.local_relabellings; ++i) {
        const SiteSpec& src = sys.site(i);
        const SiteSpec& dst = sys.site(f.site_perm[i]);
        auto locals = local_labels(src);
        std::vector<bool> m_used(static_cast<std::size_t>(dst.measurements()), false);
        std::size_t pos = 0;
        f.outcome_perm[i].resize(static_cast<std::size_t>(src.measurements()));
        for (int m = 0; m < src.measurements() && f.local_relabellings; ++m) {
            int target_m = f.local_maps[i][pos].m;
            std::vector<int> outs;
            for (int k = 0; k < src.outcomes(m); ++k, ++pos) {
                const auto& t = f.local_maps[i][pos];
                if (t.m != target_m) f.local_relabellings = false;
                outs.push_back(t.k);
            }
            if (!f.local_relabellings) break;
            if (m_used[static_cast<std::size_t>(target_m)] || dst.outcomes(target_m) != src.outcomes(m)) {
                f.local_relabellings = false;
                break;
            }
            m_used[static_cast<std::size_t>(target_m)] = true;
            f.measurement_perm[i].push_back(target_m);
            f.outcome_perm[i][static_cast<std::size_t>(m)] = std::move(outs);
        }
    }
    if (!f.local_relabellings) {
        f.measurement_perm.clear();
        f.outcome_perm.clear();
    }
    return f;
}

enum class VerdictStatus { pass, fail, exception_expected };

inline const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "PASS";
        case VerdictStatus::fail: return "FAIL";
        case VerdictStatus::exception_expected: return "exception-expected";
    }
    return "FAIL";
}

struct Theorem1Options {
    SearchOptions search;
    /// Re-run the search without pruning (only on <= 8 extremal effects).
    bool audit = false;
};

struct Theorem1Report {
    SystemSpec system;
    /// M >= 2 and uniform K at every site, all sites alike.
    bool hypotheses_hold = false;
    Integer formula_order;
    std::size_t generated_order = 0;
    std::size_t searched_order = 0;
    bool setwise_equal = false;
    /// Searched elements outside the generated group.
    std::size_t extra_elements = 0;
    /// Searched elements with no site-permutation × local-relabelling form.
    std::size_t unfactorable = 0;
    std::vector<std::optional<LabelFactorization>> factorizations;
    SearchResult search;
    TransformGroup generated;
    std::optional<bool> audit_agrees;
    VerdictStatus status = VerdictStatus::fail;
};

inline Theorem1Report verify_theorem1(const EffectCatalog& cat, const Theorem1Options& opts = {}) {
    Theorem1Report r;
    r.system = cat.system();
    r.hypotheses_hold = cat.system().homogeneous();
    r.formula_order = trivial_group_order(cat.system());
    r.generated = trivial_group(cat);
    r.generated_order = r.generated.order();
    r.search = search_reversible_group(cat, opts.search);
    r.searched_order = r.search.group.order();
    r.setwise_equal = setwise_equal(r.generated, r.search.group);
    for (std::size_t i = 0; i < r.search.group.order(); ++i) {
        if (!r.generated.contains(r.search.group.elements()[i])) ++r.extra_elements;
        auto f = factorize(cat, r.search.permutations[i]);
        if (!f || !f->local_relabellings) ++r.unfactorable;
        r.factorizations.push_back(std::move(f));
    }
    if (opts.audit && cat.size() <= 8) {
        SearchOptions raw = opts.search;
        raw.pruning = false;
        r.audit_agrees = setwise_equal(search_reversible_group(cat, raw).group, r.search.group);
    }
    const bool formula_ok = r.formula_order == Integer(r.generated_order);
    const bool audit_ok = !r.audit_agrees || *r.audit_agrees;
    if (r.setwise_equal && r.unfactorable == 0 && formula_ok && audit_ok)
        r.status = VerdictStatus::pass;
    else if (!r.hypotheses_hold && formula_ok && audit_ok)
        r.status = VerdictStatus::exception_expected;
    else
        r.status = VerdictStatus::fail;
    return r;
}

/// The controlled relabelling on gbit ⊗ classical bit: the adjoint fixes
/// A⊗Y and sends A⊗¬Y to ¬A⊗¬Y, where Y is outcome 0 of the classical bit
/// and ¬ flips the gbit outcome.
inline LinearMap build_hybrid_cnot(const EffectCatalog& cat) {
    if (!(cat.system() == systems::gbit_classical_bit()))
        throw Error("build_hybrid_cnot needs the system gbit x classical bit, got " + cat.system().describe());
    std::vector<std::size_t> perm(cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        ProductEffectLabel img = cat.label(i);
        if (img.sites[1].k == 1) img.sites[0].k = 1 - img.sites[0].k;
        perm[i] = *cat.index_of(img);
    }
    auto t = extend_label_permutation(cat, perm);
    if (!t) throw InvariantViolation("hybrid CNOT label action has no linear extension");
    return *t;
}

struct Theorem2Report {
    std::size_t group_order = 0;
    std::size_t pure_vertices = 0;
    std::size_t other_vertices = 0;
    /// Every pure-product vertex maps to a pure-product vertex.
    bool pure_to_pure = true;
    /// The non-pure-product vertices map among themselves.
    bool others_closed = true;
    std::vector<std::string> failures;
    VerdictStatus status = VerdictStatus::fail;
};

inline Theorem2Report verify_theorem2(const EffectCatalog& cat, const TransformGroup& group, const PolytopeVRep& vrep) {
    Theorem2Report r;
    r.group_order = group.order();
    std::set<std::string> pure, other;
    for (std::size_t i = 0; i < vrep.vertices.size(); ++i) {
        auto key = canonical_key(vrep.vertices[i].values);
        if (vrep.classes[i] == VertexClass::pure_product)
            pure.insert(key);
        else
            other.insert(key);
    }
    r.pure_vertices = pure.size();
    r.other_vertices = other.size();
    for (std::size_t g = 0; g < group.order(); ++g) {
        const LinearMap& t = group.elements()[g];
        for (std::size_t i = 0; i < vrep.vertices.size(); ++i) {
            StateVector image = t.apply(vrep.vertices[i]);
            auto key = canonical_key(image.values);
            if (vrep.classes[i] == VertexClass::pure_product) {
                bool ok = pure.count(key) && is_pure_product(cat, image);
                if (!ok) {
                    r.pure_to_pure = false;
                    r.failures.push_back("element " + std::to_string(g) + " sends pure vertex " + std::to_string(i) +
                                         " outside the pure-product vertices");
                }
            } else if (!other.count(key)) {
                r.others_closed = false;
                r.failures.push_back("element " + std::to_string(g) + " sends non-local vertex " +
                                     std::to_string(i) + " outside the non-local vertices");
            }
        }
    }
    r.status = (r.pure_to_pure && r.others_closed) ? VerdictStatus::pass : VerdictStatus::fail;
    return r;
}

}  // namespace boxworld

#endif  // BOXWORLD_THEOREMS_HPP
