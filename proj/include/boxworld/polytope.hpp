#ifndef BOXWORLD_POLYTOPE_HPP
#define BOXWORLD_POLYTOPE_HPP

#include "boxworld/state.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace boxworld {

enum class VertexClass { pure_product, non_local };

inline const char* to_string(VertexClass c) {
    return c == VertexClass::pure_product ? "pure-product" : "non-local";
}

/// Vertices of the state polytope, sorted lexicographically by value vector.
struct PolytopeVRep {
    std::vector<StateVector> vertices;
    std::vector<VertexClass> classes;

    std::size_t count(VertexClass c) const {
        return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
    }
};

struct VertexEnumerationOptions {
    /// Refuse systems whose affine dimension D - 1 exceeds this.
    std::size_t max_affine_dim = 16;
};

class DimensionGuardError : public Error {
public:
    using Error::Error;
};

namespace detail {

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
        return r;
    }
    bool contains(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    RVector point;  // first nonzero entry is ±1
    Bits zeros;     // processed constraints that are tight at this ray
};

}  // namespace detail

/// Extreme rays of {s : A·s >= 0 for all rows A}, by incremental double
/// description. Rows must span the space (the cone is then pointed).
/// Each ray is scaled so that `normal`·ray = 1; `normal` must be strictly
/// positive on the cone minus the origin.
inline std::vector<RVector> double_description(const std::vector<RVector>& rows, const RVector& normal) {
    const std::size_t d = normal.size();
    const std::size_t n = rows.size();

    // Greedy initial basis of constraint rows.
    std::vector<std::size_t> initial;
    std::vector<RVector> chosen;
    for (std::size_t i = 0; i < n && initial.size() < d; ++i) {
        chosen.push_back(rows[i]);
        if (rank_of(chosen, d) == chosen.size())
            initial.push_back(i);
        else
            chosen.pop_back();
    }
    if (initial.size() != d) throw Error("double_description: constraints do not span the space");

    // Intermediate cones are larger than the final one, so `normal` need not
    // be positive on their rays; scale by the first nonzero entry instead.
    auto normalize = [](RVector v) {
        for (const auto& x : v)
            if (x != 0) {
                Rational scale = 1 / abs(x);
                return scale * v;
            }
        return v;
    };

    // Initial simplicial cone: rays are the columns of the inverse.
    RMatrix inv = invert(RMatrix::from_rows(chosen, d));
    std::vector<detail::Ray> rays;
    for (std::size_t j = 0; j < d; ++j) {
        detail::Ray r{normalize(inv.column(j)), detail::Bits(n)};
        for (std::size_t t = 0; t < d; ++t)
            if (t != j) r.zeros.set(initial[t]);
        rays.push_back(std::move(r));
    }
    std::vector<bool> processed(n, false);
    for (auto i : initial) processed[i] = true;

    for (std::size_t c = 0; c < n; ++c) {
        if (processed[c]) continue;
        processed[c] = true;
        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<detail::Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(rows[c], rays[r].point);
            if (value[r] > 0)
                pos.push_back(r);
            else if (value[r] < 0)
                neg.push_back(r);
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] < 0) continue;
            detail::Ray kept = rays[r];
            if (value[r] == 0) kept.zeros.set(c);
            next.push_back(std::move(kept));
        }
        for (auto p : pos)
            for (auto q : neg) {
                detail::Bits common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 2 < d) continue;
                // Combinatorial adjacency: no third ray is tight on all of `common`.
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && rays[r].zeros.contains(common)) adjacent = false;
                if (!adjacent) continue;
                RVector combo = value[p] * rays[q].point - value[q] * rays[p].point;
                detail::Ray fresh{normalize(combo), common};
                fresh.zeros.set(c);
                next.push_back(std::move(fresh));
            }
        rays = std::move(next);
    }
    std::vector<RVector> out;
    for (auto& r : rays) {
        Rational scale = dot(normal, r.point);
        if (scale <= 0) throw Error("double_description: normal is not positive on the cone");
        out.push_back(Rational(1 / scale) * r.point);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline PolytopeVRep enumerate_vertices(const EffectCatalog& cat, const VertexEnumerationOptions& opts = {}) {
    const std::size_t affine = cat.system().dim() - 1;
    if (affine > opts.max_affine_dim)
        throw DimensionGuardError("vertex enumeration refused: affine dimension " + std::to_string(affine) +
                                  " exceeds bound " + std::to_string(opts.max_affine_dim) + " (" +
                                  std::to_string(cat.size()) + " facet constraints; raise --bound-dim to force)");
    std::vector<RVector> rows;
    for (const auto& e : cat.all_coeffs()) rows.push_back(e.coeffs);
    PolytopeVRep rep;
    for (auto& v : double_description(rows, cat.identity().coeffs)) rep.vertices.push_back(StateVector{std::move(v)});
    std::sort(rep.vertices.begin(), rep.vertices.end());
    for (const auto& v : rep.vertices)
        rep.classes.push_back(is_pure_product(cat, v) ? VertexClass::pure_product : VertexClass::non_local);
    return rep;
}

inline PolytopeVRep enumerate_vertices(const SystemSpec& sys, const VertexEnumerationOptions& opts = {}) {
    return enumerate_vertices(EffectCatalog(sys), opts);
}

}  // namespace boxworld

#endif  // BOXWORLD_POLYTOPE_HPP
