#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/certified.hpp"
#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/factorization.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/puiseux.hpp"
#include "factorlab/rho.hpp"
#include "factorlab/window.hpp"

namespace factorlab {

/// Largest b <= want with (b+1)^d <= max_points (at least 1).
inline std::int64_t capped_box(const MonoidSpec& spec, std::int64_t want, double max_points) {
    const auto d = static_cast<double>(std::max<std::size_t>(dimension(spec), 1));
    auto cap = static_cast<std::int64_t>(std::floor(std::pow(max_points, 1.0 / d))) - 1;
    return std::max<std::int64_t>(1, std::min(want, cap));
}

// ---------------------------------------------------------------- M(x)

/// Smallest n with m^n inside x + S. B = {s in S : s - x not in S} lies below x + F + 1;
/// m^n is tracked only up to max B. Since m^n + S = m^n, m^{n+1} = m^n + atoms.
inline std::int64_t numerical_m_index(const Numerical& s, std::int64_t x) {
    if (x <= 0 || !s.contains(x)) throw InputError("M needs a non-unit member, got " + std::to_string(x));
    const auto top_bound = x + std::max<std::int64_t>(s.frobenius(), 0);
    std::vector<char> bad(static_cast<std::size_t>(top_bound) + 1, 0);
    std::int64_t top = 0;
    for (std::int64_t v = 0; v <= top_bound; ++v)
        if (s.contains(v) && !s.contains(v - x)) {
            bad[static_cast<std::size_t>(v)] = 1;
            top = v;
        }
    const auto n1 = static_cast<std::size_t>(top) + 1;
    std::vector<char> cur(n1, 0);
    for (std::int64_t v = 1; v <= top; ++v) cur[static_cast<std::size_t>(v)] = s.contains(v) ? 1 : 0;

    auto hits = [&](const std::vector<char>& c) {
        for (std::size_t v = 0; v < n1; ++v)
            if (c[v] && bad[v]) return true;
        return false;
    };
    std::int64_t n = 1;
    while (hits(cur)) {
        std::vector<char> next(n1, 0);
        for (auto g : s.generators())
            for (auto v = static_cast<std::size_t>(g); v < n1; ++v)
                if (cur[v - static_cast<std::size_t>(g)]) next[v] = 1;
        cur = std::move(next);
        ++n;
    }
    return n;
}

/// One element of m^n outside x + H, written as n non-units.
struct PowerWitness {
    std::int64_t n = 0;
    Element product;
    std::vector<Element> factors;
};

struct MIndex {
    /// nullopt: every n <= n_max has a witness (Unknown at the bound).
    std::optional<std::int64_t> value;
    Certification certification = Certification::Unknown;
    std::int64_t n_max = 0;
    /// Box used by the bounded search; 0 for exact computations.
    std::int64_t bound_used = 0;
    std::vector<PowerWitness> witnesses;
};

/// Max lengths over a window with one maximising atom per element, for replayable witnesses.
class MaxLengthTable {
public:
    explicit MaxLengthTable(const Window& w) : w_(&w), len_(w.size(), -1), via_(w.size(), 0) {
        if (w.member(0)) len_[0] = 0;
        for (auto idx : w.members()) {
            if (idx == 0) continue;
            for (auto u : w.atom_indices()) {
                if (u > idx) break;
                if (!w.below(u, idx) || len_[idx - u] < 0) continue;
                if (len_[idx - u] + 1 > len_[idx]) {
                    len_[idx] = len_[idx - u] + 1;
                    via_[idx] = u;
                }
            }
        }
    }
    std::int64_t max_length(std::size_t idx) const { return len_[idx]; }

    /// Atoms of one longest factorization, in the order they are peeled off.
    std::vector<std::size_t> longest(std::size_t idx) const {
        std::vector<std::size_t> out;
        while (idx != 0) {
            out.push_back(via_[idx]);
            idx -= via_[idx];
        }
        return out;
    }

private:
    const Window* w_;
    std::vector<std::int64_t> len_;
    std::vector<std::size_t> via_;
};

namespace detail {

// Smallest n <= n_max without a witness in the box, plus the witnesses found before it.
inline MIndex m_index_in_window(const MonoidSpec& spec, const Window& w, const MaxLengthTable& ml,
                                const Element& x, std::int64_t n_max) {
    MIndex r;
    r.n_max = n_max;
    r.bound_used = w.upper().empty() ? 0 : *std::max_element(w.upper().begin(), w.upper().end());
    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::optional<std::size_t> found;
        for (auto idx : w.members()) {
            if (ml.max_length(idx) < n) continue;
            if (contains(spec, difference(w.element(idx).point(), x.point()))) continue;
            found = idx;
            break;
        }
        if (!found) {
            r.value = n;
            r.certification = Certification::Evidence;
            return r;
        }
        auto atoms = ml.longest(*found);
        PowerWitness pw;
        pw.n = n;
        pw.product = w.element(*found);
        for (std::int64_t i = 0; i + 1 < n; ++i) pw.factors.push_back(w.element(atoms[static_cast<std::size_t>(i)]));
        std::size_t rest = 0;
        for (auto i = static_cast<std::size_t>(n - 1); i < atoms.size(); ++i) rest += atoms[i];
        pw.factors.push_back(w.element(rest));
        r.witnesses.push_back(std::move(pw));
    }
    r.certification = Certification::Unknown;
    return r;
}

inline std::int64_t box_start(const Element& x) {
    std::int64_t b = 8;
    for (auto c : x.coords()) b = std::max(b, c);
    return b;
}

} // namespace detail

/// Point budget for the windows of the bounded M and omega searches.
inline constexpr double search_points = 200'000;

/// M(x). Numerical and puiseux-tail: exact. Single-generator vector monoids: x/g exactly.
/// Otherwise a search over growing boxes (8, 16, ... up to the point budget): Evidence with the
/// first n lacking a witness in the largest box, or Unknown(n_max) with a witness for every n.
inline MIndex m_index(const MonoidSpec& spec, const Element& x, std::int64_t n_max = 8) {
    require_member(spec, x);
    if (x.is_zero()) throw InputError("M is defined for non-units only");
    MIndex r;
    r.n_max = n_max;
    if (auto s = std::get_if<Numerical>(&spec)) {
        r.value = numerical_m_index(*s, x.coords()[0]);
        r.certification = Certification::Exact;
        return r;
    }
    if (is_puiseux(spec)) {
        r.value = puiseux::m_index(x.value());
        r.certification = Certification::Exact;
        return r;
    }
    if (auto f = std::get_if<FinGenVec>(&spec); f && f->generators().size() == 1) {
        const auto& g = f->generators()[0];
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) {
                r.value = x.coords()[i] / g[i];
                break;
            }
        r.certification = Certification::Exact;
        return r;
    }
    const auto cap = capped_box(spec, std::numeric_limits<std::int32_t>::max(), search_points);
    auto box = std::min(detail::box_start(x), cap);
    while (true) {
        Window w(spec, cube(spec, box));
        MaxLengthTable ml(w);
        r = detail::m_index_in_window(spec, w, ml, x, n_max);
        if (!r.value || box >= cap) return r;
        box = std::min(box * 2, cap);
    }
}

// ---------------------------------------------------------------- omega

/// omega over atoms: the largest size of a minimal atom multiset whose product a divides.
inline std::int64_t numerical_omega(const Numerical& s, std::int64_t a) {
    const auto M = numerical_m_index(s, a);
    const auto& gens = s.generators();
    const auto vmax = M * s.largest_generator();
    // Max length of v over the generators in mask, -1 if not representable.
    std::map<std::vector<char>, std::vector<std::int64_t>> tables;
    auto table = [&](const std::vector<char>& mask) -> const std::vector<std::int64_t>& {
        auto it = tables.find(mask);
        if (it != tables.end()) return it->second;
        std::vector<std::int64_t> ml(static_cast<std::size_t>(vmax) + 1, -1);
        ml[0] = 0;
        for (std::int64_t v = 1; v <= vmax; ++v)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (!mask[i] || gens[i] > v) continue;
                auto prev = ml[static_cast<std::size_t>(v - gens[i])];
                if (prev >= 0) ml[static_cast<std::size_t>(v)] = std::max(ml[static_cast<std::size_t>(v)], prev + 1);
            }
        return tables.emplace(mask, std::move(ml)).first->second;
    };
    // A multiset with product v is minimal iff a | v and v - g is not in a + S for every g it uses.
    std::int64_t best = 0;
    for (auto v = a; v <= vmax; ++v) {
        if (!s.contains(v - a)) continue;
        std::vector<char> mask(gens.size(), 0);
        for (std::size_t i = 0; i < gens.size(); ++i) mask[i] = s.contains(v - gens[i] - a) ? 0 : 1;
        best = std::max(best, table(mask)[static_cast<std::size_t>(v)]);
    }
    return best;
}

/// Same quantity inside a window: depth-first search over atom multisets in non-decreasing
/// atom order, deepened one factor at a time so small multisets of every atom are seen before
/// the node budget runs out. A branch stops as soon as a divides its product.
/// Sets exhausted = false when max_nodes is hit.
inline std::int64_t omega_in_window(const Window& w, std::size_t a, std::size_t max_nodes, bool& exhausted) {
    const auto& atoms = w.atom_indices();
    const auto d = w.dim();
    std::vector<std::size_t> chosen;
    std::int64_t best = 0;
    std::size_t nodes = 0;
    exhausted = true;

    auto fits = [&](std::size_t s, std::size_t u) {
        for (std::size_t i = 0; i < d; ++i)
            if (w.coord(s, i) + w.coord(u, i) > w.upper()[i]) return false;
        return true;
    };
    std::size_t depth = 0;
    bool cut = false;
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t s) {
        for (std::size_t j = start; j < atoms.size(); ++j) {
            if (!exhausted) return;
            if (!fits(s, atoms[j])) continue;
            if (++nodes > max_nodes) {
                exhausted = false;
                return;
            }
            const auto next = s + atoms[j];
            chosen.push_back(j);
            if (w.divides(a, next)) {
                bool minimal = true;
                for (std::size_t k = 0; k < chosen.size() && minimal; ++k) {
                    if (k && chosen[k] == chosen[k - 1]) continue;
                    if (w.divides(a, next - atoms[chosen[k]])) minimal = false;
                }
                if (minimal) best = std::max(best, static_cast<std::int64_t>(chosen.size()));
            } else if (chosen.size() < depth) {
                dfs(j, next);
            } else {
                cut = true;
            }
            chosen.pop_back();
        }
    };
    do {
        ++depth;
        cut = false;
        dfs(0, 0);
    } while (cut && exhausted);
    return best;
}

/// omega(a) for a non-unit a. Exact for numerical monoids (capped by M(a)), closed form for
/// puiseux-tail atoms, the length of a for factorial monoids; otherwise a LowerBound from the box
/// [0, element_bound]^d (shrunk to the point budget).
inline Certified<std::int64_t> omega(const MonoidSpec& spec, const Element& a, const Budget& budget = {}) {
    require_member(spec, a);
    if (a.is_zero()) throw InputError("omega is defined for non-units only");
    if (auto s = std::get_if<Numerical>(&spec)) return {numerical_omega(*s, a.coords()[0]), Certification::Exact, 0};
    if (is_puiseux(spec)) {
        if (!puiseux::is_atom(a.value()))
            throw UnsupportedOperation("omega on puiseux-tail is available for atoms only");
        return {puiseux::omega_atom(a.value()), Certification::Exact, 0};
    }
    // factorial: a divides a product only through all of its prime factors
    if (is_factorial(spec)) return {length_set(spec, a).max(), Certification::Exact, 0};
    auto box = capped_box(spec, budget.element_bound, search_points);
    for (auto c : a.coords()) box = std::max(box, c);
    Window w(spec, cube(spec, box));
    bool exhausted = true;
    auto v = omega_in_window(w, w.index(a.coords()), budget.max_nodes, exhausted);
    return {v, Certification::LowerBound, box};
}

/// omega(u) for an atom u; rejects non-atoms.
inline Certified<std::int64_t> omega_atom(const MonoidSpec& spec, const Element& u, const Budget& budget = {}) {
    if (u.is_zero() || !is_atom(spec, u)) throw InputError(to_string(u.point()) + " is not an atom");
    return omega(spec, u, budget);
}

// ---------------------------------------------------------------- tame degree

struct TameDegreeEstimate {
    std::int64_t lower = 0;
    /// nullopt stands for infinity.
    std::optional<std::int64_t> upper;
    bool exact = false;
    std::int64_t bound_used = 0;
    /// Multiples skipped because their factorization count exceeded the budget.
    std::size_t skipped = 0;
    std::string upper_source;
};

/// t(a, u) for one element: max over z in Z(a) of the distance to the nearest factorization
/// containing u. Returns early once the running value cannot beat floor.
inline std::uint32_t tame_at(const FactorizationSet& z, std::size_t pos, std::uint32_t floor = 0) {
    std::vector<std::size_t> with_u;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z.items[i].counts[pos]) with_u.push_back(i);
    std::uint32_t t = floor;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z.items[i].counts[pos]) continue;
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        for (auto j : with_u) {
            best = std::min(best, distance(z.items[i], z.items[j]));
            if (best <= t) break;
        }
        t = std::max(t, best);
    }
    return t;
}

/// Lower bound from every multiple of u inside the box [0, upper] that fits the factorization budget.
inline TameDegreeEstimate tame_lower_in_box(const MonoidSpec& spec, const Element& u, const IntVec& upper,
                                            std::size_t max_factorizations) {
    if (is_puiseux(spec)) throw UnsupportedOperation("puiseux-tail multiples have infinitely many factorizations");
    if (u.is_zero() || !is_atom(spec, u)) throw InputError(to_string(u.point()) + " is not an atom");
    Window w(spec, upper);
    if (!w.in_box(u.coords())) throw InputError(to_string(u.point()) + " lies outside the box");
    const auto ui = w.index(u.coords());
    TameDegreeEstimate e;
    std::uint32_t t = 0;
    for (auto idx : w.members()) {
        if (!w.divides(ui, idx)) continue;
        try {
            auto z = factorizations(w, idx, max_factorizations);
            auto pos = z.atom_position(u);
            if (!pos) throw InvariantBreach("atom " + to_string(u.point()) + " divides but occurs in no factorization");
            t = tame_at(z, *pos, t);
        } catch (const BudgetExceeded&) {
            ++e.skipped;
        }
    }
    e.lower = t;
    return e;
}

/// Lower bound from every multiple a = u + s with s <= radius (componentwise) that fits the
/// factorization budget.
inline TameDegreeEstimate tame_lower(const MonoidSpec& spec, const Element& u, const Budget& budget) {
    if (budget.radius < 0) throw InputError("radius must be >= 0");
    if (is_puiseux(spec)) throw UnsupportedOperation("puiseux-tail multiples have infinitely many factorizations");
    IntVec upper = u.coords();
    for (auto& c : upper) c += budget.radius;
    auto e = tame_lower_in_box(spec, u, upper, budget.max_factorizations);
    e.bound_used = budget.radius;
    return e;
}

/// Interval for t(u). Upper bound: 0 for primes, rho_{omega(u)} when both are exact,
/// else max{omega(u), Lambda + 1} when Lambda is known finite, else infinity.
/// Puiseux-tail has no enumerable multiples, so only the closed-form upper bound is given.
inline TameDegreeEstimate tame_degree(const MonoidSpec& spec, const Element& u, const Budget& budget = {},
                                      std::optional<std::int64_t> lambda_finite = std::nullopt) {
    TameDegreeEstimate e;
    if (is_puiseux(spec)) {
        require_member(spec, u);
        if (u.is_zero() || !puiseux::is_atom(u.value())) throw InputError(to_string(u.point()) + " is not an atom");
        e.upper = puiseux::rho_k(puiseux::omega_atom(u.value()));
        e.upper_source = "rho_omega";
    } else {
        e = tame_lower(spec, u, budget);
        auto w = omega_atom(spec, u, budget);
        if (w.certification == Certification::Exact && w.value == 1) {
            e.upper = 0;
            e.upper_source = "prime";
        } else if (w.certification == Certification::Exact) {
            auto r = rho_k(spec, w.value, budget.element_bound);
            if (r.certification == Certification::Exact) {
                e.upper = r.value;
                e.upper_source = "rho_omega";
            }
        }
        if (!e.upper && lambda_finite && w.certification == Certification::Exact) {
            e.upper = std::max(w.value, *lambda_finite + 1);
            e.upper_source = "omega_lambda";
        }
    }
    if (e.upper && e.lower > *e.upper)
        throw InvariantBreach("tame degree lower bound " + std::to_string(e.lower) + " exceeds upper bound " +
                              std::to_string(*e.upper) + " at " + to_string(u.point()));
    e.exact = e.upper && e.lower == *e.upper && e.skipped == 0;
    return e;
}

// ---------------------------------------------------------------- strong primariness

enum class PrimaryStatus { Certified, Refuted, Evidence };

inline std::string to_string(PrimaryStatus s) {
    switch (s) {
    case PrimaryStatus::Certified: return "Certified";
    case PrimaryStatus::Refuted: return "Refuted-at-bound";
    case PrimaryStatus::Evidence: return "Evidence";
    }
    return "Evidence";
}

struct StrongPrimaryReport {
    PrimaryStatus status = PrimaryStatus::Evidence;
    std::string justification;
    /// Tested atoms with their M index (or Unknown) and witnesses.
    std::vector<std::pair<Element, MIndex>> m_values;
};

/// Numerical: Certified with exact M per generator. Puiseux-tail: Certified by closed form,
/// M listed for sample atoms. Vector families: bounded search for the atoms with every
/// coordinate <= 2; Refuted-at-bound if some atom has a witness for every n <= n_max.
inline StrongPrimaryReport strong_primary_report(const MonoidSpec& spec, const Budget& budget = {}) {
    StrongPrimaryReport r;
    if (auto s = std::get_if<Numerical>(&spec)) {
        r.status = PrimaryStatus::Certified;
        r.justification = "numerical monoid: finite complement, M computed exactly per atom";
        for (auto g : s->generators()) r.m_values.emplace_back(Element::scalar(g), m_index(spec, Element::scalar(g)));
        return r;
    }
    if (is_puiseux(spec)) {
        r.status = PrimaryStatus::Certified;
        r.justification = "closed form M(q) = ceil(q) + 1 for every non-unit q";
        for (auto q : {Rational(1), Rational(3, 2), Rational(7, 4)})
            r.m_values.emplace_back(Element::rat(q), m_index(spec, Element::rat(q)));
        return r;
    }
    if (auto f = std::get_if<FinGenVec>(&spec); f && f->generators().size() == 1) {
        r.status = PrimaryStatus::Certified;
        r.justification = "single generator: isomorphic to N0";
        auto g = Element::vec(f->generators()[0]);
        r.m_values.emplace_back(g, m_index(spec, g));
        return r;
    }
    auto atoms = atoms_up_to(spec, 2);
    bool refuted = false;
    for (const auto& u : atoms) {
        auto m = m_index(spec, u, budget.n_max);
        refuted = refuted || !m.value;
        r.m_values.emplace_back(u, std::move(m));
    }
    if (refuted) {
        r.status = PrimaryStatus::Refuted;
        r.justification = "for some atom x and every n <= " + std::to_string(budget.n_max) +
                          " a product of n non-units outside x + H was found";
    } else {
        r.status = PrimaryStatus::Evidence;
        r.justification = "every tested atom has a bounded M inside the search box";
    }
    return r;
}

} // namespace factorlab
