#ifndef BOXWORLD_STATE_HPP
#define BOXWORLD_STATE_HPP

#include "boxworld/effects.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace boxworld {

/// A state as its values ⟨B_j, s⟩ on the canonical basis effects B_j
/// (identity slots included), in flattened basis order.
struct StateVector {
    RVector values;
    std::size_t dim() const { return values.size(); }
    friend bool operator==(const StateVector&, const StateVector&) = default;
    friend bool operator<(const StateVector& a, const StateVector& b) {
        return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                            b.values.end());
    }
};

/// Σ_j E_j s_j.
inline Rational evaluate(const EffectCoeffs& e, const StateVector& s) {
    if (e.dim() != s.dim())
        throw DimensionError("evaluate: effect has dimension " + std::to_string(e.dim()) +
                             ", state has " + std::to_string(s.dim()));
    return dot(e.coeffs, s.values);
}

struct TableKey {
    std::vector<int> settings;
    std::vector<int> outcomes;
    friend auto operator<=>(const TableKey&, const TableKey&) = default;
    friend bool operator==(const TableKey&, const TableKey&) = default;
};

/// P(outcomes | settings) for every measurement string.
struct ProbabilityTable {
    std::map<TableKey, Rational> entries;

    const Rational& at(const std::vector<int>& settings, const std::vector<int>& outcomes) const {
        return entries.at(TableKey{settings, outcomes});
    }
    void set(const std::vector<int>& settings, const std::vector<int>& outcomes, Rational p) {
        entries[TableKey{settings, outcomes}] = std::move(p);
    }
    friend bool operator==(const ProbabilityTable&, const ProbabilityTable&) = default;
};

class TableError : public Error {
public:
    using Error::Error;
};

inline std::string describe_context(const std::vector<int>& settings, const std::vector<int>& outcomes) {
    std::string out = "settings=(";
    for (std::size_t i = 0; i < settings.size(); ++i) out += (i ? "," : "") + std::to_string(settings[i]);
    out += ") outcomes=(";
    for (std::size_t i = 0; i < outcomes.size(); ++i) out += (i ? "," : "") + std::to_string(outcomes[i]);
    return out + ")";
}

/// Throws TableError unless the table has exactly one entry per
/// (measurement string, outcome string) of the system.
inline void check_table_complete(const SystemSpec& sys, const ProbabilityTable& t) {
    std::size_t expected = 0;
    for_each_setting(sys, [&](const std::vector<int>& m) {
        for_each_outcome(sys, m, [&](const std::vector<int>& k) {
            ++expected;
            if (!t.entries.count(TableKey{m, k}))
                throw TableError("incomplete table: missing entry " + describe_context(m, k));
        });
    });
    if (t.entries.size() != expected) {
        for (const auto& [key, p] : t.entries) {
            bool ok = key.settings.size() == sys.size() && key.outcomes.size() == sys.size();
            for (std::size_t i = 0; ok && i < sys.size(); ++i)
                ok = key.settings[i] >= 0 && key.settings[i] < sys.site(i).measurements() &&
                     key.outcomes[i] >= 0 && key.outcomes[i] < sys.site(i).outcomes(key.settings[i]);
            if (!ok) throw TableError("table entry outside system: " + describe_context(key.settings, key.outcomes));
        }
    }
}

/// Where a table fails the non-signalling condition: the outcome sum over
/// `site` of the context (settings/outcomes of the other sites) differs
/// between the site's settings `setting_a` and `setting_b`.
struct SignallingWitness {
    std::size_t site = 0;
    std::vector<int> settings;  // entry at `site` is meaningless
    std::vector<int> outcomes;  // entry at `site` is meaningless
    int setting_a = 0;
    int setting_b = 0;
    Rational marginal_a;
    Rational marginal_b;
};

struct NonSignallingReport {
    bool ok = true;
    std::optional<SignallingWitness> witness;
};

inline NonSignallingReport is_nonsignalling(const SystemSpec& sys, const ProbabilityTable& t) {
    check_table_complete(sys, t);
    NonSignallingReport report;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const SiteSpec& site = sys.site(i);
        auto marginal = [&](std::vector<int> settings, std::vector<int> outcomes, int mi) {
            settings[i] = mi;
            Rational sum = 0;
            for (int a = 0; a < site.outcomes(mi); ++a) {
                outcomes[i] = a;
                sum += t.at(settings, outcomes);
            }
            return sum;
        };
        std::optional<SignallingWitness> found;
        for_each_setting(sys, [&](const std::vector<int>& m) {
            if (found || m[i] != 0) return;
            for_each_outcome(sys, m, [&](const std::vector<int>& k) {
                if (found || k[i] != 0) return;
                Rational base = marginal(m, k, 0);
                for (int mi = 1; mi < site.measurements(); ++mi) {
                    Rational other = marginal(m, k, mi);
                    if (other != base) {
                        found = SignallingWitness{i, m, k, 0, mi, base, other};
                        return;
                    }
                }
            });
        });
        if (found) {
            report.ok = false;
            report.witness = std::move(found);
            return report;
        }
    }
    return report;
}

/// Throws TableError unless entries lie in [0,1] and each measurement
/// string's distribution sums to 1.
inline void check_table_normalized(const SystemSpec& sys, const ProbabilityTable& t) {
    for (const auto& [key, p] : t.entries)
        if (p < 0 || p > 1)
            throw TableError("probability " + to_string(p) + " outside [0,1] at " +
                             describe_context(key.settings, key.outcomes));
    for_each_setting(sys, [&](const std::vector<int>& m) {
        Rational sum = 0;
        for_each_outcome(sys, m, [&](const std::vector<int>& k) { sum += t.at(m, k); });
        if (sum != 1)
            throw TableError("distribution for " + describe_context(m, {}) + " sums to " + to_string(sum));
    });
}

/// The unique state reproducing a normalized non-signalling table, found
/// by an exact solve over all table entries.
inline StateVector state_from_table(const SystemSpec& sys, const ProbabilityTable& t) {
    check_table_complete(sys, t);
    check_table_normalized(sys, t);
    auto ns = is_nonsignalling(sys, t);
    if (!ns.ok) {
        const auto& w = *ns.witness;
        throw TableError("signalling table at site " + std::to_string(w.site) + ": marginal " +
                         to_string(w.marginal_a) + " under setting " + std::to_string(w.setting_a) +
                         " vs " + to_string(w.marginal_b) + " under setting " + std::to_string(w.setting_b));
    }
    std::vector<RVector> rows;
    RVector rhs;
    for (const auto& [key, p] : t.entries) {
        rows.push_back(product_effect_coeffs(sys, make_label(key.settings, key.outcomes)).coeffs);
        rhs.push_back(p);
    }
    auto sol = solve_exact(RMatrix::from_rows(rows, sys.dim()), rhs);
    if (sol.kind == SolveResult::Kind::inconsistent) throw TableError("inconsistent table");
    if (sol.kind == SolveResult::Kind::underdetermined)
        throw TableError("table does not determine a unique state");
    return {sol.solution};
}

struct StateCheck {
    bool ok = true;
    Rational identity_value;
    /// First extremal effect with a negative value, if any.
    std::optional<ProductEffectLabel> violated;
    Rational violated_value;
};

inline StateCheck is_state(const EffectCatalog& cat, const StateVector& s) {
    StateCheck c;
    c.identity_value = evaluate(cat.identity(), s);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        Rational v = evaluate(cat.coeffs(i), s);
        if (v < 0) {
            c.ok = false;
            c.violated = cat.label(i);
            c.violated_value = v;
            break;
        }
    }
    if (c.identity_value != 1) c.ok = false;
    return c;
}

inline StateCheck is_state(const SystemSpec& sys, const StateVector& s) { return is_state(EffectCatalog(sys), s); }

class InvalidStateError : public Error {
public:
    using Error::Error;
};

inline void require_state(const EffectCatalog& cat, const StateVector& s) {
    if (s.dim() != cat.system().dim())
        throw DimensionError("state has dimension " + std::to_string(s.dim()) + ", system needs " +
                             std::to_string(cat.system().dim()));
    auto c = is_state(cat, s);
    if (c.ok) return;
    if (c.violated)
        throw InvalidStateError("invalid state: " + to_string(*c.violated) + " has value " +
                                to_string(c.violated_value));
    throw InvalidStateError("invalid state: identity value " + to_string(c.identity_value));
}

inline ProbabilityTable table_from_state(const SystemSpec& sys, const StateVector& s) {
    require_state(EffectCatalog(sys), s);
    ProbabilityTable t;
    for_each_setting(sys, [&](const std::vector<int>& m) {
        for_each_outcome(sys, m, [&](const std::vector<int>& k) {
            t.set(m, k, evaluate(product_effect_coeffs(sys, make_label(m, k)), s));
        });
    });
    return t;
}

/// True iff every extremal-effect value is exactly 0 or 1.
inline bool is_pure_product(const EffectCatalog& cat, const StateVector& s) {
    require_state(cat, s);
    for (const auto& e : cat.all_coeffs()) {
        Rational v = evaluate(e, s);
        if (v != 0 && v != 1) return false;
    }
    return true;
}

inline bool is_pure_product(const SystemSpec& sys, const StateVector& s) {
    return is_pure_product(EffectCatalog(sys), s);
}

// ---------------------------------------------------------------------------
// Constructors

/// Deterministic local state: measurement m yields outcome assignment[m].
inline StateVector local_pure_state(const SiteSpec& site, const std::vector<int>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(site.measurements()))
        throw Error("assignment needs one outcome per measurement");
    RVector v(site.dim());
    for (int m = 0; m < site.measurements(); ++m) {
        int k = assignment[static_cast<std::size_t>(m)];
        if (k < 0 || k >= site.outcomes(m))
            throw Error("assignment outcome " + std::to_string(k) + " invalid for measurement " + std::to_string(m));
        if (k < site.outcomes(m) - 1) v[site.slot(m, k)] = 1;
    }
    v[site.identity_slot()] = 1;
    return {v};
}

/// Local state with every outcome equally likely.
inline StateVector local_uniform_state(const SiteSpec& site) {
    RVector v(site.dim());
    for (int m = 0; m < site.measurements(); ++m)
        for (int k = 0; k + 1 < site.outcomes(m); ++k) v[site.slot(m, k)] = Rational(1, site.outcomes(m));
    v[site.identity_slot()] = 1;
    return {v};
}

inline StateVector product_state(const std::vector<StateVector>& factors) {
    RVector v{Rational(1)};
    for (const auto& f : factors) v = tensor(v, f.values);
    return {v};
}

inline StateVector uniform_state(const SystemSpec& sys) {
    std::vector<StateVector> f;
    for (const auto& s : sys.sites()) f.push_back(local_uniform_state(s));
    return product_state(f);
}

/// Σ_i w_i s_i (weights are not required to be normalized).
inline StateVector mixture(const std::vector<StateVector>& states, const std::vector<Rational>& weights) {
    if (states.empty() || states.size() != weights.size()) throw Error("mixture: mismatched inputs");
    RVector v(states.front().dim());
    for (std::size_t i = 0; i < states.size(); ++i) v = v + weights[i] * states[i].values;
    return {v};
}

/// PR box on two gbits: P(a b | x y) = 1/2 when a ⊕ b = x·y, else 0.
inline ProbabilityTable pr_box_table() {
    ProbabilityTable t;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    t.set({x, y}, {a, b}, ((a ^ b) == (x & y)) ? Rational(1, 2) : Rational(0));
    return t;
}

inline StateVector pr_box_state(const SystemSpec& sys = systems::gbits(2)) {
    if (!(sys == systems::gbits(2))) throw Error("pr_box_state is defined on two gbits only");
    return state_from_table(sys, pr_box_table());
}

}  // namespace boxworld

#endif  // BOXWORLD_STATE_HPP
