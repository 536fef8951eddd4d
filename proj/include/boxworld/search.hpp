#ifndef BOXWORLD_SEARCH_HPP
#define BOXWORLD_SEARCH_HPP

#include "boxworld/gram.hpp"
#include "boxworld/group.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace boxworld {

struct SearchOptions {
    /// Refuse systems with more extremal effects than this.
    std::size_t max_effects = 64;
    /// Gram / measurement-block pruning. Disabling it leaves only the exact
    /// linear checks, which is the completeness self-audit.
    bool pruning = true;
    /// Worker threads; 0 means default_thread_count().
    unsigned threads = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned = 0;
    std::uint64_t dependent = 0;
    std::uint64_t leaves = 0;
    std::uint64_t accepted = 0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        pruned += o.pruned;
        dependent += o.dependent;
        leaves += o.leaves;
        accepted += o.accepted;
        return *this;
    }
};

enum class PruningMode { none, gram, measurement_block };

inline const char* to_string(PruningMode p) {
    switch (p) {
        case PruningMode::none: return "none";
        case PruningMode::gram: return "gram";
        case PruningMode::measurement_block: return "measurement-block";
    }
    return "none";
}

struct SearchResult {
    TransformGroup group;
    /// Label action of each element, same order as group.elements().
    std::vector<std::vector<std::size_t>> permutations;
    SearchStats stats;
    PruningMode pruning = PruningMode::none;
};

class SearchBoundError : public Error {
public:
    using Error::Error;
};

/// BOXWORLD_THREADS if set to a positive integer, else the hardware count.
inline unsigned default_thread_count() {
    if (const char* env = std::getenv("BOXWORLD_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace detail {

class ReversibleSearch {
public:
    ReversibleSearch(const EffectCatalog& cat, PruningMode mode) : cat_(cat), mode_(mode) {
        n_ = cat.size();
        d_ = cat.system().dim();

        // Spanning subset: identity plus greedily chosen effects in label order.
        std::vector<RVector> span{cat.identity().coeffs};
        std::vector<bool> in_basis(n_, false);
        for (std::size_t i = 0; i < n_ && span.size() < d_; ++i) {
            span.push_back(cat.coeffs(i).coeffs);
            if (rank_of(span, d_) < span.size()) {
                span.pop_back();
                continue;
            }
            basis_.push_back(i);
            in_basis[i] = true;
        }
        RMatrix basis_inv = invert(RMatrix::from_columns(span, d_));
        basis_inv_ = basis_inv;
        for (std::size_t i = 0; i < n_; ++i)
            if (!in_basis[i]) {
                rest_.push_back(i);
                rest_expansion_.push_back(basis_inv * cat.coeffs(i).coeffs);
            }

        if (mode_ == PruningMode::gram) {
            std::map<Rational, int> ids;
            gram_id_.assign(n_, std::vector<int>(n_));
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) {
                    Rational g = gram_product(cat.system(), cat.label(i), cat.label(j));
                    auto it = ids.emplace(g, static_cast<int>(ids.size())).first;
                    gram_id_[i][j] = it->second;
                }
        }
        if (mode_ == PruningMode::measurement_block) {
            std::map<std::vector<int>, int> ids;
            for (const auto& l : cat.labels()) {
                std::vector<int> settings;
                for (const auto& s : l.sites) settings.push_back(s.m);
                block_.push_back(ids.emplace(settings, static_cast<int>(ids.size())).first->second);
            }
        }
    }

    const std::vector<std::size_t>& basis() const { return basis_; }
    std::size_t candidates() const { return n_; }

    /// Explores the subtree where the first basis effect maps to `first`.
    void run_branch(std::size_t first) {
        std::vector<std::size_t> img;
        std::vector<bool> used(n_, false);
        std::vector<Echelon> ech{Echelon{}};
        ech.back().add(cat_.identity().coeffs);
        try_assign(0, first, img, used, ech);
    }

    std::vector<std::vector<std::size_t>>& found() { return found_; }
    const SearchStats& stats() const { return stats_; }

    /// Adjoint matrix of the map sending basis effects to the images in `perm`.
    RMatrix adjoint_for(const std::vector<std::size_t>& perm) const {
        std::vector<RVector> cols{cat_.identity().coeffs};
        for (auto b : basis_) cols.push_back(cat_.coeffs(perm[b]).coeffs);
        return RMatrix::from_columns(cols, d_) * basis_inv_;
    }

private:
    // Row-echelon set used to keep the assigned images linearly independent.
    struct Echelon {
        std::vector<RVector> rows;
        std::vector<std::size_t> pivots;

        RVector reduce(RVector v) const {
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const Rational& f = v[pivots[r]];
                if (f == 0) continue;
                Rational scale = f;
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (rows[r][j] != 0) v[j] -= scale * rows[r][j];
            }
            return v;
        }
        bool add(const RVector& v) {
            RVector red = reduce(v);
            std::size_t p = 0;
            while (p < red.size() && red[p] == 0) ++p;
            if (p == red.size()) return false;
            Rational inv = 1 / red[p];
            for (auto& x : red) x *= inv;
            rows.push_back(std::move(red));
            pivots.push_back(p);
            return true;
        }
    };

    bool block_compatible(std::size_t a, std::size_t b) {
        auto key = std::minmax(a, b);
        auto it = block_memo_.find(key);
        if (it != block_memo_.end()) return it->second;
        EffectCoeffs rest = cat_.identity() - cat_.coeffs(a) - cat_.coeffs(b);
        bool ok = cone_member(cat_, rest).member;
        block_memo_.emplace(key, ok);
        return ok;
    }

    bool passes_pruning(std::size_t pos, std::size_t cand, const std::vector<std::size_t>& img) {
        const std::size_t q = basis_[pos];
        if (mode_ == PruningMode::gram) {
            if (gram_id_[q][q] != gram_id_[cand][cand]) return false;
            for (std::size_t p = 0; p < pos; ++p)
                if (gram_id_[q][basis_[p]] != gram_id_[cand][img[p]]) return false;
        } else if (mode_ == PruningMode::measurement_block) {
            for (std::size_t p = 0; p < pos; ++p)
                if (block_[q] == block_[basis_[p]] && !block_compatible(cand, img[p])) return false;
        }
        return true;
    }

    void try_assign(std::size_t pos, std::size_t cand, std::vector<std::size_t>& img, std::vector<bool>& used,
                    std::vector<Echelon>& ech) {
        ++stats_.nodes;
        if (used[cand]) return;
        if (!passes_pruning(pos, cand, img)) {
            ++stats_.pruned;
            return;
        }
        Echelon next = ech.back();
        if (!next.add(cat_.coeffs(cand).coeffs)) {
            ++stats_.dependent;
            return;
        }
        img.push_back(cand);
        used[cand] = true;
        ech.push_back(std::move(next));
        if (pos + 1 == basis_.size()) {
            complete(img, used);
        } else {
            for (std::size_t c = 0; c < n_; ++c) try_assign(pos + 1, c, img, used, ech);
        }
        ech.pop_back();
        used[cand] = false;
        img.pop_back();
    }

    // All basis images assigned: the linear extension is fixed. Every other
    // extremal effect must land on a distinct unused extremal effect.
    void complete(const std::vector<std::size_t>& img, const std::vector<bool>& used_in) {
        ++stats_.leaves;
        std::vector<RVector> image_vecs{cat_.identity().coeffs};
        for (auto i : img) image_vecs.push_back(cat_.coeffs(i).coeffs);
        std::vector<bool> used = used_in;
        std::vector<std::size_t> perm(n_);
        for (std::size_t p = 0; p < basis_.size(); ++p) perm[basis_[p]] = img[p];
        for (std::size_t r = 0; r < rest_.size(); ++r) {
            RVector v(d_);
            const RVector& c = rest_expansion_[r];
            for (std::size_t j = 0; j < d_; ++j)
                if (c[j] != 0) v = v + c[j] * image_vecs[j];
            auto hit = cat_.find(EffectCoeffs{v});
            if (!hit || used[*hit]) return;
            used[*hit] = true;
            perm[rest_[r]] = *hit;
        }
        ++stats_.accepted;
        found_.push_back(std::move(perm));
    }

    const EffectCatalog& cat_;
    PruningMode mode_;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::size_t> basis_;
    RMatrix basis_inv_;
    std::vector<std::size_t> rest_;
    std::vector<RVector> rest_expansion_;
    std::vector<std::vector<int>> gram_id_;
    std::vector<int> block_;
    std::map<std::pair<std::size_t, std::size_t>, bool> block_memo_;
    std::vector<std::vector<std::size_t>> found_;
    SearchStats stats_;
};

}  // namespace detail

/// Every bijection of the extremal effects that extends to a reversible
/// linear map fixing the identity.
///
/// Images are assigned to a spanning subset of effects by backtracking;
/// each partial assignment must keep the images linearly independent and
/// pass the pruning invariant (pairwise Gram values when every site has
/// measurement-independent outcome counts, otherwise pairwise
/// measurement-block compatibility). The linear extension then forces the
/// remaining images, and each surviving map is re-checked exactly with
/// check_reversible().
inline SearchResult search_reversible_group(const EffectCatalog& cat, const SearchOptions& opts = {}) {
    if (cat.size() > opts.max_effects)
        throw SearchBoundError("search refused: " + std::to_string(cat.size()) +
                               " extremal effects exceed bound " + std::to_string(opts.max_effects));
    PruningMode mode = PruningMode::none;
    if (opts.pruning) mode = cat.system().gram_invariant() ? PruningMode::gram : PruningMode::measurement_block;

    detail::ReversibleSearch prototype(cat, mode);
    const std::size_t branches = prototype.candidates();
    unsigned threads = opts.threads ? opts.threads : default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, branches));
    if (threads == 0) threads = 1;

    std::vector<detail::ReversibleSearch> workers(threads, prototype);
    auto work = [&](unsigned w) {
        for (std::size_t b = w; b < branches; b += threads) workers[w].run_branch(b);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    SearchResult result;
    result.pruning = mode;
    std::vector<std::vector<std::size_t>> perms;
    for (auto& w : workers) {
        result.stats += w.stats();
        for (auto& p : w.found()) perms.push_back(std::move(p));
    }
    std::sort(perms.begin(), perms.end());

    result.group = TransformGroup(Provenance::searched, {});
    for (auto& perm : perms) {
        LinearMap t = LinearMap::from_adjoint(prototype.adjoint_for(perm));
        auto check = check_reversible(cat, t);
        if (!check.ok || *check.permutation != perm)
            throw InvariantViolation("search produced a map that fails the exact reversibility check");
        result.group.insert(t);
        result.permutations.push_back(std::move(perm));
    }
    return result;
}

}  // namespace boxworld

#endif  // BOXWORLD_SEARCH_HPP
