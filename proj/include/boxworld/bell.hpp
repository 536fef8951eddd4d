#ifndef BOXWORLD_BELL_HPP
#define BOXWORLD_BELL_HPP

#include "boxworld/polytope.hpp"

#include <cstddef>
#include <optional>
#include <map>
#include <utility>
#include <vector>

namespace boxworld {

/// Linear functional on probability tables: Σ c(settings, outcomes)·P.
/// Entries not present have coefficient 0.
struct BellFunctional {
    std::map<TableKey, Rational> coefficients;

    void set(const std::vector<int>& settings, const std::vector<int>& outcomes, Rational c) {
        coefficients[TableKey{settings, outcomes}] = std::move(c);
    }
};

inline void check_functional(const SystemSpec& sys, const BellFunctional& f) {
    for (const auto& [key, c] : f.coefficients) {
        bool ok = key.settings.size() == sys.size() && key.outcomes.size() == sys.size();
        for (std::size_t i = 0; ok && i < sys.size(); ++i)
            ok = key.settings[i] >= 0 && key.settings[i] < sys.site(i).measurements() && key.outcomes[i] >= 0 &&
                 key.outcomes[i] < sys.site(i).outcomes(key.settings[i]);
        if (!ok) throw Error("functional entry outside system: " + describe_context(key.settings, key.outcomes));
    }
}

/// The effect whose value on every state equals the functional.
inline EffectCoeffs functional_effect(const SystemSpec& sys, const BellFunctional& f) {
    check_functional(sys, f);
    RVector v(sys.dim());
    for (const auto& [key, c] : f.coefficients)
        if (c != 0) v = v + c * product_effect_coeffs(sys, make_label(key.settings, key.outcomes)).coeffs;
    return {v};
}

inline Rational evaluate(const SystemSpec& sys, const BellFunctional& f, const StateVector& s) {
    return evaluate(functional_effect(sys, f), s);
}

inline void require_two_gbits(const StateVector& s) {
    if (s.dim() != systems::gbits(2).dim()) throw Error("CHSH quantities are defined on two gbits only");
}

/// E(x, y) = Σ_{a,b} (-1)^(a+b) P(a b | x y) on two gbits.
inline Rational correlator(const StateVector& s, int x, int y) {
    require_two_gbits(s);
    if (x < 0 || x > 1 || y < 0 || y > 1) throw Error("correlator settings must be 0 or 1");
    const SystemSpec sys = systems::gbits(2);
    Rational e = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Rational p = evaluate(product_effect_coeffs(sys, make_label({x, y}, {a, b})), s);
            e += ((a + b) % 2 == 0) ? p : Rational(-p);
        }
    return e;
}

/// E(X,X) + E(X,Z) + E(Z,X) - E(Z,Z) with X = measurement 0, Z = measurement 1.
inline Rational chsh_value(const StateVector& s) {
    return correlator(s, 0, 0) + correlator(s, 0, 1) + correlator(s, 1, 0) - correlator(s, 1, 1);
}

/// CHSH functional with the minus sign on setting pair (x0, y0), times `sign`.
inline BellFunctional chsh_functional(int x0 = 1, int y0 = 1, int sign = 1) {
    BellFunctional f;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            int term = (x == x0 && y == y0) ? -sign : sign;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) f.set({x, y}, {a, b}, Rational(((a + b) % 2 == 0) ? term : -term));
        }
    return f;
}

/// The eight CHSH variants: choice of negated setting pair and overall sign.
inline std::vector<BellFunctional> chsh_family() {
    std::vector<BellFunctional> out;
    for (int sign : {1, -1})
        for (int x0 = 0; x0 < 2; ++x0)
            for (int y0 = 0; y0 < 2; ++y0) out.push_back(chsh_functional(x0, y0, sign));
    return out;
}

struct VertexMaximum {
    Rational value;
    std::size_t index = 0;
};

/// Exact maximum of the functional over the vertices; first argmax in
/// vertex order. `mask`, if given, restricts to vertices with mask[i].
inline VertexMaximum max_over_vertices(const SystemSpec& sys, const BellFunctional& f, const PolytopeVRep& vrep,
                                       const std::vector<bool>* mask = nullptr) {
    EffectCoeffs e = functional_effect(sys, f);
    std::optional<VertexMaximum> best;
    for (std::size_t i = 0; i < vrep.vertices.size(); ++i) {
        if (mask && !(*mask)[i]) continue;
        Rational v = evaluate(e, vrep.vertices[i]);
        if (!best || v > best->value) best = VertexMaximum{v, i};
    }
    if (!best) throw Error("max_over_vertices: no vertices");
    return *best;
}

}  // namespace boxworld

#endif  // BOXWORLD_BELL_HPP
