#pragma once

// Verification suites. Each check records both sides of one relation at one place, so a
// failing run shows exactly which instance broke what.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "factorlab/certified.hpp"
#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/factorization.hpp"
#include "factorlab/families.hpp"
#include "factorlab/global_invariants.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/oracle.hpp"
#include "factorlab/parallel.hpp"
#include "factorlab/rho.hpp"
#include "factorlab/tameness.hpp"
#include "factorlab/window.hpp"

namespace factorlab {

struct Check {
    std::string suite;
    std::string instance;
    std::string relation;
    std::string at;
    std::string lhs;
    std::string rhs;
    bool holds = true;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    std::size_t random_instances = 50;
    int max_generators = 4;
    std::int64_t max_value = 30;
    /// Elements (numerical) or box coordinates scanned by the suites.
    std::int64_t element_bound = 200;
    /// Pairs sampled per instance for the sumset laws; 0 checks every pair.
    std::size_t pairs = 200;
    std::size_t lambda_samples = 3;
    std::int64_t k_max = 10;
    /// Elements up to this bound are compared with the oracle and used for the metric laws.
    std::int64_t oracle_bound = 60;
    std::size_t max_factorizations = 20000;
    unsigned jobs = 1;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"omega-m",      "length-omega",      "tame-rho",     "catenary-delta",
                                                   "length-sumset", "lambda-complement", "rho-monotone", "metric",
                                                   "theorem-consistency", "oracle"};
    return names;
}

/// Built-in instances followed by random numerical monoids drawn from seed, seed+1, ...
inline std::vector<MonoidSpec> suite_instances(const SuiteOptions& o) {
    auto out = builtin_specs();
    for (std::size_t i = 0; i < o.random_instances; ++i)
        out.push_back(random_numerical(o.seed + i, o.max_generators, o.max_value));
    return out;
}

namespace detail {

inline std::string str(std::int64_t v) { return std::to_string(v); }

struct SuiteContext {
    const MonoidSpec& spec;
    const SuiteOptions& o;
    std::string suite;
    std::string name;
    std::vector<Check> out;

    void add(std::string relation, std::string at, std::string lhs, std::string rhs, bool holds) {
        out.push_back({suite, name, std::move(relation), std::move(at), std::move(lhs), std::move(rhs), holds});
    }

    std::vector<Element> atoms() const {
        if (auto s = std::get_if<Numerical>(&spec)) {
            std::vector<Element> a;
            for (auto g : s->generators()) a.push_back(Element::scalar(g));
            return a;
        }
        return atoms_up_to(spec, o.element_bound);
    }
};

inline void omega_m(SuiteContext& c) {
    for (const auto& u : c.atoms()) {
        auto w = omega_atom(c.spec, u);
        auto m = m_index(c.spec, u);
        if (w.certification != Certification::Exact || !m.value) continue;
        c.add("omega(u) <= M(u)", to_string(u), str(w.value), str(*m.value), w.value <= *m.value);
    }
}

inline void length_omega(SuiteContext& c) {
    auto w = scan_window(c.spec, c.o.element_bound);
    LengthTable lt(w);
    for (auto idx : w.members()) {
        if (idx == 0) continue;
        auto a = Element::from_point(Point(w.point(idx)));
        auto om = omega(c.spec, a);
        if (om.certification != Certification::Exact) continue;
        c.add("sup L(a) <= omega(a)", to_string(a), str(lt.max_length(idx)), str(om.value), lt.max_length(idx) <= om.value);
    }
}

inline void tame_rho(SuiteContext& c) {
    for (const auto& u : c.atoms()) {
        auto w = omega_atom(c.spec, u);
        if (w.certification != Certification::Exact) continue;
        auto rho = rho_k(c.spec, w.value, c.o.element_bound);
        if (rho.certification != Certification::Exact) continue;
        Budget b;
        b.max_factorizations = c.o.max_factorizations;
        std::int64_t largest = 0;
        for (auto x : u.coords()) largest = std::max(largest, x);
        b.radius = std::max<std::int64_t>(0, c.o.element_bound - largest);
        auto t = tame_lower(c.spec, u, b);
        c.add("t(u) lower <= rho_omega(u)", to_string(u) + " radius " + str(b.radius), str(t.lower), str(rho.value),
              t.lower <= rho.value);
    }
}

inline void catenary_delta(SuiteContext& c) {
    auto w = scan_window(c.spec, c.o.element_bound);
    LengthTable lt(w);
    std::int64_t c_max = 0, d_max = 0;
    for (auto idx : w.members()) {
        auto z = factorizations(w, idx, c.o.max_factorizations);
        std::int64_t ca = catenary_degree(z);
        c_max = std::max(c_max, ca);
        auto deltas = delta_of(LengthSet(lt.lengths(idx)));
        if (deltas.empty()) continue;
        auto d = deltas.back();
        d_max = std::max(d_max, d);
        c.add("2 + max Delta(L(a)) <= c(a)", to_string(w.point(idx)), str(2 + d), str(ca), 2 + d <= ca);
    }
    const auto at = "elements up to " + str(c.o.element_bound);
    if (c_max > 0)
        c.add("2 + sup Delta <= c", at, str(2 + d_max), str(c_max), 2 + d_max <= c_max);
    else
        c.add("c = 0 forces Delta empty", at, str(d_max), "0", d_max == 0);
}

// FNV-1a, so sampled pairs do not depend on the standard library's string hash.
inline std::uint32_t name_hash(const std::string& s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char ch : s) h = (h ^ ch) * 16777619u;
    return h;
}

inline std::mt19937_64 instance_rng(const SuiteContext& c, std::uint64_t salt) {
    std::seed_seq seq{c.o.seed, static_cast<std::uint64_t>(name_hash(c.name)), salt};
    return std::mt19937_64(seq);
}

inline void length_sumset(SuiteContext& c) {
    auto w = scan_window(c.spec, c.o.element_bound);
    LengthTable lt(w);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const auto& m = w.members();
    for (std::size_t i = 1; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j) {
            bool fits = true;
            for (std::size_t k = 0; k < w.dim() && fits; ++k)
                fits = w.coord(m[i], k) + w.coord(m[j], k) <= w.upper()[k];
            if (fits) pairs.emplace_back(m[i], m[j]);
        }
    if (c.o.pairs != 0 && pairs.size() > c.o.pairs) {
        std::vector<std::pair<std::size_t, std::size_t>> pick;
        auto rng = instance_rng(c, 1);
        std::sample(pairs.begin(), pairs.end(), std::back_inserter(pick), c.o.pairs, rng);
        pairs = std::move(pick);
    }
    for (auto [a, b] : pairs) {
        IntVec sum = w.point(a);
        auto pb = w.point(b);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += pb[k];
        auto ab = w.index(sum);
        const auto at = to_string(w.point(a)) + " + " + to_string(pb);
        LengthSet la(lt.lengths(a)), lb(lt.lengths(b)), lab(lt.lengths(ab));
        auto s = sumset(la, lb);
        bool sub = std::all_of(s.values().begin(), s.values().end(), [&](std::int64_t l) { return lab.contains(l); });
        c.add("L(a) + L(b) subset of L(ab)", at, to_string(s), to_string(lab), sub);
        c.add("min L(ab) <= min L(a) + min L(b)", at, str(lab.min()), str(la.min() + lb.min()), lab.min() <= la.min() + lb.min());
    }
}

inline void lambda_complement(SuiteContext& c) {
    std::vector<Element> pool;
    std::int64_t reach = c.o.element_bound;
    if (auto s = std::get_if<Numerical>(&c.spec)) reach = 2 * s->largest_generator();
    {
        auto w = scan_window(c.spec, std::min(reach, c.o.element_bound));
        for (auto idx : w.members())
            if (idx != 0) pool.push_back(Element::from_point(Point(w.point(idx))));
    }
    std::vector<Element> xs;
    auto rng = instance_rng(c, 2);
    std::sample(pool.begin(), pool.end(), std::back_inserter(xs), c.o.lambda_samples, rng);
    for (const auto& x : xs) {
        auto m = m_index(c.spec, x);
        if (!m.value || m.certification != Certification::Exact) continue;
        // H \ xH is finite for numerical monoids: b - x > F lies in S.
        std::int64_t top = c.o.element_bound;
        if (auto s = std::get_if<Numerical>(&c.spec)) top = x.coords()[0] + s->frobenius() + 1;
        auto w = scan_window(c.spec, top);
        LengthTable lt(w);
        const auto xi = w.index(x.coords());
        std::int64_t lam = 0;
        for (auto idx : w.members())
            if (!w.divides(xi, idx)) lam = std::max(lam, lt.min_length(idx));
        c.add("Lambda(H \\ xH) < M(x)", to_string(x) + " scan " + str(top), str(lam), str(*m.value), lam < *m.value);
    }
}

inline void rho_monotone(SuiteContext& c) {
    auto table = rho_table(c.spec, c.o.k_max, c.o.element_bound);
    for (std::size_t k = 0; k + 1 < table.size(); ++k)
        c.add("rho_k <= rho_{k+1}", "k = " + str(static_cast<std::int64_t>(k) + 1), str(table[k].value),
              str(table[k + 1].value), table[k].value <= table[k + 1].value);
    auto e = elasticity(c.spec, c.o.k_max, c.o.element_bound);
    auto w = scan_window(c.spec, c.o.element_bound);
    LengthTable lt(w);
    Rational best(1);
    std::string where = "0";
    for (auto idx : w.members()) {
        if (idx == 0 || static_cast<std::int64_t>(lt.min_length(idx)) > c.o.k_max) continue;
        Rational r(lt.max_length(idx), lt.min_length(idx));
        if (r > best) {
            best = r;
            where = to_string(w.point(idx));
        }
    }
    // Only elements whose min length is within k_max are covered by the rho table.
    c.add("max L(a)/min L(a) <= rho lower bound", "best at " + where, to_string(best), to_string(e.rho_lower),
          best <= e.rho_lower);
}

inline void metric(SuiteContext& c) {
    auto w = scan_window(c.spec, std::min(c.o.oracle_bound, c.o.element_bound));
    for (auto idx : w.members()) {
        auto z = factorizations(w, idx, c.o.max_factorizations);
        const auto n = std::min<std::size_t>(z.size(), 24);
        if (n < 2) continue;
        std::int64_t asym = 0, triangle = 0, min_d = std::numeric_limits<std::int64_t>::max(), length_gap = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t dij = distance(z.items[i], z.items[j]);
                asym = std::max<std::int64_t>(asym, std::abs(dij - static_cast<std::int64_t>(distance(z.items[j], z.items[i]))));
                if (i != j) min_d = std::min(min_d, dij);
                if (i == j) asym = std::max(asym, dij);
                std::int64_t li = z.items[i].length, lj = z.items[j].length;
                if (li != lj) length_gap = std::max(length_gap, std::abs(li - lj) + 2 - dij);
                for (std::size_t k = 0; k < n; ++k)
                    triangle = std::max<std::int64_t>(triangle, dij - distance(z.items[i], z.items[k]) -
                                                                     static_cast<std::int64_t>(distance(z.items[k], z.items[j])));
            }
        const auto at = to_string(w.point(idx)) + " (" + str(static_cast<std::int64_t>(n)) + " factorizations)";
        c.add("d(z,z) = 0 and d symmetric: max defect", at, str(asym), "0", asym == 0);
        c.add("d(z,z') >= 2 for z != z'", at, str(min_d), "2", min_d >= 2);
        c.add("d(x,y) - d(x,z) - d(z,y) <= 0", at, str(triangle), "0", triangle <= 0);
        c.add("||z| - |z'|| + 2 - d(z,z') <= 0 for |z| != |z'|", at, str(length_gap), "0", length_gap <= 0);
    }
}

inline void theorem_consistency(SuiteContext& c) {
    auto t = theorem_main_report(c.spec);
    std::string v;
    for (const auto& x : t.violations) v += (v.empty() ? "" : "; ") + x;
    c.add("no chain or conductor violation", t.hypothesis, v.empty() ? "none" : v, "none", t.violations.empty());
}

inline void oracle_suite(SuiteContext& c) {
    if (is_puiseux(c.spec)) return;
    auto w = scan_window(c.spec, std::min(c.o.oracle_bound, c.o.element_bound));
    oracle::detail::Oracle o(c.spec);
    for (auto idx : w.members()) {
        auto p = w.point(idx);
        auto z = factorizations(w, idx, c.o.max_factorizations);
        const auto& naive = o.factorizations(p);
        auto engine = oracle::as_multisets(z);
        c.add("Z(a) engine = oracle", to_string(p), str(static_cast<std::int64_t>(engine.size())),
              str(static_cast<std::int64_t>(naive.size())), engine == naive);
        auto ce = static_cast<std::int64_t>(catenary_degree(z));
        auto cn = oracle::naive_catenary(naive);
        c.add("c(a) engine = oracle", to_string(p), str(ce), str(cn), ce == cn);
    }
}

} // namespace detail

/// One suite on one instance.
inline std::vector<Check> suite_on(const std::string& suite, const MonoidSpec& spec, const SuiteOptions& o) {
    detail::SuiteContext c{spec, o, suite, render(spec), {}};
    if (suite == "omega-m") detail::omega_m(c);
    else if (suite == "length-omega") detail::length_omega(c);
    else if (suite == "tame-rho") detail::tame_rho(c);
    else if (suite == "catenary-delta") detail::catenary_delta(c);
    else if (suite == "length-sumset") detail::length_sumset(c);
    else if (suite == "lambda-complement") detail::lambda_complement(c);
    else if (suite == "rho-monotone") detail::rho_monotone(c);
    else if (suite == "metric") detail::metric(c);
    else if (suite == "theorem-consistency") detail::theorem_consistency(c);
    else if (suite == "oracle") detail::oracle_suite(c);
    else throw InputError("unknown suite '" + suite + "'");
    return std::move(c.out);
}

/// Runs a suite ("all" runs every suite in order) over suite_instances(o), instances in
/// parallel, checks in instance order.
inline std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& o) {
    std::vector<std::string> names;
    if (suite == "all") names = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) names = {suite};
    else throw InputError("unknown suite '" + suite + "'");
    const auto inst = suite_instances(o);
    std::vector<Check> out;
    for (const auto& name : names) {
        auto parts = run_ordered(inst.size(), o.jobs, [&](std::size_t i) { return suite_on(name, inst[i], o); });
        for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    return out;
}

} // namespace factorlab
