#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/certified.hpp"
#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/families.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/puiseux.hpp"
#include "factorlab/rho.hpp"
#include "factorlab/tameness.hpp"
#include "factorlab/window.hpp"

namespace factorlab {

// ---------------------------------------------------------------- Delta(H)

struct DeltaResult {
    std::vector<std::int64_t> values;
    Certification certification = Certification::LowerBound;
    std::int64_t bound_used = 0;
};

inline DeltaResult delta_over(const Window& w, const LengthTable& lt) {
    DeltaResult r;
    for (auto idx : w.members())
        for (auto d : delta_of(LengthSet(lt.lengths(idx)))) r.values.push_back(d);
    std::sort(r.values.begin(), r.values.end());
    r.values.erase(std::unique(r.values.begin(), r.values.end()), r.values.end());
    return r;
}

/// Union of Delta(L(a)) over the scanned elements.
inline DeltaResult delta_H(const MonoidSpec& spec, std::int64_t element_bound) {
    if (is_puiseux(spec)) return {{1}, Certification::Exact, 0};
    auto w = scan_window(spec, element_bound);
    LengthTable lt(w);
    auto r = delta_over(w, lt);
    r.bound_used = element_bound;
    return r;
}

// ---------------------------------------------------------------- Lambda(H)

struct LambdaResult {
    /// sup min L(a) over the full bound.
    std::int64_t sup_min_length = 0;
    /// (sub-bound, sup min L) at bound/8, bound/4, bound/2, bound.
    std::vector<std::pair<std::int64_t, std::int64_t>> growth;
    /// Strictly increasing across every sub-bound.
    bool evidence_infinite = false;
    /// Lambda = infinity proved by a closed argument (numerical, puiseux-tail, single generator).
    bool certified_infinite = false;
    std::string argument;
    std::int64_t bound_used = 0;
};

inline std::int64_t sup_min_length(const MonoidSpec& spec, std::int64_t bound) {
    if (is_puiseux(spec)) return floor_of(Rational(bound, 2)) + 1;
    auto w = scan_window(spec, bound);
    LengthTable lt(w);
    std::int64_t best = 0;
    for (auto idx : w.members()) best = std::max(best, lt.min_length(idx));
    return best;
}

inline LambdaResult lambda_H(const MonoidSpec& spec, std::int64_t element_bound) {
    if (element_bound < 8) throw InputError("lambda_H needs an element bound >= 8");
    LambdaResult r;
    r.bound_used = element_bound;
    for (auto div : {8, 4, 2, 1}) {
        auto b = element_bound / div;
        r.growth.emplace_back(b, sup_min_length(spec, b));
    }
    r.sup_min_length = r.growth.back().second;
    r.evidence_infinite = true;
    for (std::size_t i = 1; i < r.growth.size(); ++i)
        r.evidence_infinite = r.evidence_infinite && r.growth[i].second > r.growth[i - 1].second;
    if (auto s = std::get_if<Numerical>(&spec)) {
        r.certified_infinite = true;
        r.argument = "min L(a) >= a / " + std::to_string(s->largest_generator());
    } else if (is_puiseux(spec)) {
        r.certified_infinite = true;
        r.argument = "min L(q) = floor(q/2) + 1";
    } else if (auto f = std::get_if<FinGenVec>(&spec); f && f->generators().size() == 1) {
        r.certified_infinite = true;
        r.argument = "single generator: min L(k g) = k";
    }
    return r;
}

/// min L(m c) for m = 1..count; growth means Lambda over the powers of c is infinite.
inline std::vector<std::int64_t> lambda_over_powers(const MonoidSpec& spec, const Element& c, std::int64_t count) {
    require_member(spec, c);
    std::vector<std::int64_t> out;
    if (is_puiseux(spec)) {
        for (std::int64_t m = 1; m <= count; ++m) out.push_back(puiseux::min_length(c.value() * m));
        return out;
    }
    IntVec top = c.coords();
    for (auto& x : top) x *= count;
    Window w(spec, top);
    LengthTable lt(w);
    for (std::int64_t m = 1; m <= count; ++m) {
        IntVec p = c.coords();
        for (auto& x : p) x *= m;
        out.push_back(lt.min_length(w.index(p)));
    }
    return out;
}

// ---------------------------------------------------------------- BF evidence

struct BfResult {
    bool pass = true;
    Certification certification = Certification::Evidence;
    std::int64_t bound_used = 0;
    std::size_t elements_checked = 0;
    std::string detail;
};

/// Every scanned non-unit a has a finite non-empty L(a), lies in m^{max L(a)} and leaves
/// m^{max L(a)+1}. The powers of m are built by sumsets inside the box, independently of the
/// atom-based length table.
inline BfResult bf_evidence(const MonoidSpec& spec, std::int64_t element_bound) {
    BfResult r;
    if (is_puiseux(spec)) {
        r.certification = Certification::Exact;
        r.detail = "max L(q) = floor(q) is finite for every q";
        return r;
    }
    r.bound_used = element_bound;
    auto w = scan_window(spec, element_bound);
    LengthTable lt(w);
    const auto d = w.dim();
    std::vector<std::size_t> nonunits;
    for (auto idx : w.members())
        if (idx != 0) nonunits.push_back(idx);

    std::int64_t top = 0;
    for (auto idx : nonunits) {
        auto mx = lt.max_length(idx);
        if (mx < 1) {
            r.pass = false;
            r.detail = "no factorization inside the box for " + to_string(w.point(idx));
            return r;
        }
        top = std::max(top, mx);
    }
    // power[n][idx]: idx is a sum of n non-units.
    std::vector<std::vector<char>> power(static_cast<std::size_t>(top) + 2, std::vector<char>(w.size(), 0));
    for (auto idx : nonunits) power[1][idx] = 1;
    for (std::size_t n = 2; n < power.size(); ++n)
        for (auto a : nonunits) {
            if (!power[n - 1][a]) continue;
            for (auto b : nonunits) {
                bool fits = true;
                for (std::size_t i = 0; i < d && fits; ++i) fits = w.coord(a, i) + w.coord(b, i) <= w.upper()[i];
                if (fits) power[n][a + b] = 1;
            }
        }
    for (auto idx : nonunits) {
        ++r.elements_checked;
        auto mx = static_cast<std::size_t>(lt.max_length(idx));
        if (!power[mx][idx] || power[mx + 1][idx]) {
            r.pass = false;
            r.detail = "power membership disagrees with max L at " + to_string(w.point(idx));
            return r;
        }
    }
    r.detail = "every non-unit leaves m^n for n > max L(a)";
    return r;
}

// ---------------------------------------------------------------- root closure

struct RootClosedResult {
    bool pass = true;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
};

/// For every lattice point x of [0, box]^d outside H: n x stays outside H for n = 2..n_max.
inline RootClosedResult root_closed_spot_check(const MonoidSpec& spec, std::int64_t box, std::int64_t n_max) {
    if (is_puiseux(spec)) throw UnsupportedOperation("root-closure spot check needs an integer-vector family");
    RootClosedResult r;
    const auto d = dimension(spec);
    IntVec p(d, 0);
    while (true) {
        if (!contains(spec, Point(p))) {
            ++r.checked;
            for (std::int64_t n = 2; n <= n_max; ++n) {
                IntVec q = p;
                for (auto& c : q) c *= n;
                if (contains(spec, Point(q))) {
                    r.pass = false;
                    r.counterexamples.push_back(std::to_string(n) + "*" + to_string(p));
                    break;
                }
            }
        }
        std::size_t i = d;
        while (i-- > 0) {
            if (++p[i] <= box) break;
            p[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return r;
}

// ---------------------------------------------------------------- intersection of atom ideals

struct AtomIdealIntersection {
    /// An element of every u + H; the smallest one when `smallest` is set.
    std::optional<Element> witness;
    bool smallest = false;
    Certification certification = Certification::Unknown;
};

/// Numerical: every c > F + n_p qualifies, so the scan below F + n_p + 1 is exhaustive.
inline std::int64_t numerical_atom_ideal_min(const Numerical& s) {
    for (std::int64_t c = 0;; ++c) {
        if (!s.contains(c)) continue;
        bool ok = true;
        for (auto g : s.generators()) ok = ok && s.contains(c - g);
        if (ok) return c;
    }
}

inline AtomIdealIntersection intersection_of_atom_ideals(const MonoidSpec& spec) {
    AtomIdealIntersection r;
    if (auto s = std::get_if<Numerical>(&spec)) {
        r.witness = Element::scalar(numerical_atom_ideal_min(*s));
        r.smallest = true;
        r.certification = Certification::Exact;
    } else if (is_puiseux(spec)) {
        r.witness = Element::rat(puiseux::atom_ideal_intersection_min());
        r.smallest = true;
        r.certification = Certification::Exact;
    } else if (auto f = std::get_if<FinGenVec>(&spec)) {
        // The sum of all atoms: removing any one leaves a sum of the others.
        IntVec sum(f->dim(), 0);
        for (const auto& g : f->generators())
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g[i];
        r.witness = Element::vec(sum);
        r.smallest = f->generators().size() == 1;
        r.certification = Certification::Exact;
    }
    return r;
}

// ---------------------------------------------------------------- main theorem report

enum class Verdict { TrueCertified, FalseCertified, EvidenceTrue, EvidenceFalse, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::TrueCertified: return "True-certified";
    case Verdict::FalseCertified: return "False-certified";
    case Verdict::EvidenceTrue: return "Evidence-true";
    case Verdict::EvidenceFalse: return "Evidence-false";
    case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

struct ConditionVerdict {
    int id = 0;
    std::string statement;
    Verdict verdict = Verdict::Unknown;
    std::string justification;
};

struct TheoremReport {
    /// Strongly primary is certified, so the implications between the conditions apply.
    bool hypothesis_certified = false;
    std::string hypothesis;
    bool conductor_nonempty = false;
    std::vector<ConditionVerdict> conditions;
    /// The variant with m^2 in place of f^2 m. Diagnostic only: it can fail while all nine
    /// conditions hold (numerical: [6, 9, 20] at 57 = 45 + 6 + 6), so it takes no part in
    /// the consistency checks.
    ConditionVerdict f_m2_check{0, "f m^2 lies in the intersection of uH over all atoms u", Verdict::Unknown, ""};
    std::vector<std::string> violations;
};

inline const std::vector<std::string>& condition_statements() {
    static const std::vector<std::string> s = {
        "H is globally tame",
        "the intersection of uH over all atoms u is non-empty",
        "rho(H) < infinity",
        "rho_k(H) < infinity for all k",
        "Lambda(H) = infinity",
        "the complete integral closure is a primary valuation monoid",
        "the complete integral closure is a valuation monoid",
        "f m lies in the intersection of u H^ over all atoms u",
        "f^2 m lies in the intersection of uH over all atoms u",
    };
    return s;
}

/// Implication chain and conductor equivalence, applied to certified verdicts only.
inline std::vector<std::string> theorem_violations(const TheoremReport& t) {
    std::vector<std::string> out;
    if (!t.hypothesis_certified) return out;
    auto v = [&](int id) { return t.conditions[static_cast<std::size_t>(id - 1)].verdict; };
    auto certified = [](Verdict x) { return x == Verdict::TrueCertified || x == Verdict::FalseCertified; };
    if (certified(v(1)) && certified(v(2)) && v(1) != v(2)) out.push_back("(1) and (2) disagree");
    const int chain[] = {2, 1, 3, 4, 5};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (v(chain[i]) == Verdict::TrueCertified && v(chain[j]) == Verdict::FalseCertified)
                out.push_back("(" + std::to_string(chain[i]) + ") certified true but (" + std::to_string(chain[j]) +
                              ") certified false");
    if (t.conductor_nonempty) {
        std::optional<Verdict> seen;
        for (const auto& c : t.conditions) {
            if (!certified(c.verdict)) continue;
            if (seen && *seen != c.verdict) {
                out.push_back("conductor is non-empty but certified verdicts differ");
                break;
            }
            seen = c.verdict;
        }
    }
    return out;
}

namespace detail {

inline Verdict from_metadata(const std::optional<bool>& b) {
    if (!b) return Verdict::Unknown;
    return *b ? Verdict::TrueCertified : Verdict::FalseCertified;
}

inline void numerical_conditions(const Numerical& s, TheoremReport& t, const std::string& prefix) {
    const auto F = s.frobenius();
    const auto n1 = s.multiplicity();
    const auto np = s.largest_generator();
    auto& c = t.conditions;
    const auto c2 = numerical_atom_ideal_min(s);
    c[1] = {2, c[1].statement, Verdict::TrueCertified, prefix + "c = " + std::to_string(c2) + " lies in every u + S"};
    c[0] = {1, c[0].statement, Verdict::TrueCertified, prefix + "equivalent to (2), which is exact"};
    c[2] = {3, c[2].statement, Verdict::TrueCertified, prefix + "implied by (1)"};
    c[3] = {4, c[3].statement, Verdict::TrueCertified, prefix + "implied by (3)"};
    c[4] = {5, c[4].statement, Verdict::TrueCertified, prefix + "min L(a) >= a / " + std::to_string(np)};

    // f = {x >= F+1}, f + m = {x >= F+1+n1}; the atoms' ideals in N0 meet in {x >= n_p}.
    const auto fm = F + 1 + n1;
    c[7] = {8, c[7].statement, fm >= np ? Verdict::TrueCertified : Verdict::FalseCertified,
            prefix + "min(f + m) = " + std::to_string(fm) + ", intersection of u + N0 starts at " + std::to_string(np)};
    // f + f + m = {x >= 2F+2+n1}; above F + n_p every x - u is in S, so a finite scan decides.
    auto scan = [&](std::int64_t lo, std::string what) -> ConditionVerdict {
        for (auto x = lo; x <= lo + F + np + 1; ++x)
            for (auto g : s.generators())
                if (!s.contains(x - g))
                    return {9, "", Verdict::FalseCertified,
                            prefix + std::to_string(x) + " lies in " + what + " but not in " + std::to_string(g) + " + S"};
        return {9, "", Verdict::TrueCertified, prefix + "every x >= " + std::to_string(lo) + " lies in every u + S"};
    };
    auto v9 = scan(2 * (F + 1) + n1, "f + f + m");
    v9.statement = c[8].statement;
    c[8] = v9;
    auto lit = scan(F + 1 + 2 * n1, "f + m + m");
    lit.statement = t.f_m2_check.statement;
    t.f_m2_check = lit;
}

} // namespace detail

/// Verdicts for the nine conditions. Conditions are facts about H; the implications between
/// them are only checked when strong primariness is certified.
inline TheoremReport theorem_main_report(const MonoidSpec& spec, const StrongPrimaryReport& sp,
                                         const std::optional<LambdaResult>& lambda = std::nullopt) {
    TheoremReport t;
    const auto meta = metadata(spec);
    t.hypothesis_certified = sp.status == PrimaryStatus::Certified;
    t.hypothesis = "strongly primary: " + to_string(sp.status);
    t.conductor_nonempty = meta.conductor_nonempty.value_or(false);
    const auto& st = condition_statements();
    for (int i = 1; i <= 9; ++i) t.conditions.push_back({i, st[static_cast<std::size_t>(i - 1)], Verdict::Unknown, ""});
    auto& c = t.conditions;

    c[5].verdict = detail::from_metadata(meta.closure_is_primary_valuation);
    c[6].verdict = detail::from_metadata(meta.closure_is_valuation);
    c[5].justification = c[6].justification =
        meta.closure_is_valuation ? "metadata: " + meta.complete_integral_closure : "no metadata";

    if (auto s = std::get_if<Numerical>(&spec)) {
        detail::numerical_conditions(*s, t, "");
    } else if (auto f = std::get_if<FinGenVec>(&spec); f && f->generators().size() == 1) {
        detail::numerical_conditions(Numerical::from_generators({1}), t, "isomorphic to N0: ");
    } else if (is_puiseux(spec)) {
        c[1] = {2, st[1], Verdict::TrueCertified, "3 lies in every u + H for u in [1,2)"};
        c[0] = {1, st[0], Verdict::TrueCertified, "equivalent to (2), which is exact"};
        c[2] = {3, st[2], Verdict::TrueCertified, "rho = lim (2k-1)/k = 2"};
        c[3] = {4, st[3], Verdict::TrueCertified, "rho_k = 2k - 1"};
        c[4] = {5, st[4], Verdict::TrueCertified, "min L(q) = floor(q/2) + 1 is unbounded"};
        c[7] = {8, st[7], Verdict::TrueCertified, "f + m = [2,oo) and every u + Q>=0 with u < 2 contains it"};
        c[8] = {9, st[8], Verdict::TrueCertified, "f + f + m = [3,oo) and x - u >= 1 for x >= 3, u < 2"};
        t.f_m2_check.verdict = Verdict::TrueCertified;
        t.f_m2_check.justification = "f + m + m = [3,oo) as well";
    } else {
        if (std::holds_alternative<FinGenVec>(spec)) {
            c[1].verdict = Verdict::TrueCertified;
            c[1].justification = "finitely many atoms: their sum lies in every u + H";
        } else {
            c[1].justification = "infinitely many atoms; no finite certificate";
        }
        c[0].justification = "hypothesis not certified; bounded tame degrees only";
        c[2].justification = c[3].justification = "no exact elasticity certificate";
        if (lambda) {
            c[4].verdict = lambda->evidence_infinite ? Verdict::EvidenceTrue : Verdict::EvidenceFalse;
            c[4].justification = "sup min L at sub-bounds";
            for (const auto& [b, v] : lambda->growth)
                c[4].justification += " " + std::to_string(b) + ":" + std::to_string(v);
        } else {
            c[4].justification = "not evaluated";
        }
        c[7].justification = c[8].justification = t.f_m2_check.justification = "conductor unknown";
    }
    t.violations = theorem_violations(t);
    return t;
}

inline TheoremReport theorem_main_report(const MonoidSpec& spec, const Budget& budget = {}) {
    std::optional<LambdaResult> lambda;
    if (!is_numerical(spec) && !is_puiseux(spec))
        lambda = lambda_H(spec, std::max<std::int64_t>(8, capped_box(spec, budget.element_bound, 20'000)));
    return theorem_main_report(spec, strong_primary_report(spec, budget), lambda);
}

} // namespace factorlab
