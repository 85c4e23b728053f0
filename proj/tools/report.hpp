#pragma once

// JSON and CSV output for the command-line tool. Field names here are the documented format;
// changing one is a format change.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "factorlab/certified.hpp"
#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/factorization.hpp"
#include "factorlab/families.hpp"
#include "factorlab/global_invariants.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/parallel.hpp"
#include "factorlab/puiseux.hpp"
#include "factorlab/rho.hpp"
#include "factorlab/tameness.hpp"
#include "factorlab/verify.hpp"
#include "factorlab/window.hpp"

namespace factorlab::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* version = "0.1.0";
inline constexpr const char* report_format = "factorlab-report/1";

// Point caps for vector families, so default runs stay in seconds.
inline constexpr double length_points = 20'000;
inline constexpr double catenary_points = 1'000;
inline constexpr double tame_points = 1'331;

struct RunOptions {
    Budget budget;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

inline json entry(const std::string& name, json value, Certification c, std::int64_t bound) {
    return json{{"name", name}, {"value", std::move(value)}, {"certification", to_string(c)}, {"bound_used", bound}};
}

inline json budget_json(const Budget& b) {
    return json{{"element_bound", b.element_bound}, {"max_factorizations", b.max_factorizations}, {"radius", b.radius},
                {"k_max", b.k_max},                 {"n_max", b.n_max},                           {"max_nodes", b.max_nodes}};
}

inline json strings(const std::vector<Element>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(to_string(e));
    return a;
}

inline json ints(const std::vector<std::int64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

/// Atoms whose local invariants are reported.
inline std::vector<Element> tested_atoms(const MonoidSpec& spec) {
    if (is_puiseux(spec)) return {Element::rat(Rational(1)), Element::rat(Rational(3, 2))};
    if (auto f = std::get_if<FinGenVec>(&spec)) {
        std::vector<Element> out;
        for (const auto& g : f->generators()) out.push_back(Element::vec(g));
        return out;
    }
    if (is_numerical(spec)) return atoms_up_to(spec, std::numeric_limits<std::int64_t>::max());
    return atoms_up_to(spec, 2);
}

/// Scan bound for length-based invariants: the element bound itself for numerical monoids,
/// capped to a point budget for vector families.
inline std::int64_t scan_bound(const MonoidSpec& spec, std::int64_t want, double points) {
    if (is_numerical(spec)) return want;
    return capped_box(spec, want, points);
}

inline json lambda_json(const LambdaResult& l) {
    json g = json::array();
    for (const auto& [b, v] : l.growth) g.push_back(json{{"bound", b}, {"sup_min_length", v}});
    json e;
    if (l.certified_infinite)
        e = entry("lambda", "infinity", Certification::Exact, l.bound_used);
    else
        e = entry("lambda", l.sup_min_length, Certification::LowerBound, l.bound_used);
    e["argument"] = l.argument;
    e["growth"] = std::move(g);
    e["evidence_infinite"] = l.evidence_infinite;
    return e;
}

inline json tame_json(const Element& u, const TameDegreeEstimate& t) {
    auto c = t.exact ? Certification::Exact : Certification::LowerBound;
    json e = entry("tame_degree(" + to_string(u) + ")", t.lower, c, t.bound_used);
    e["upper"] = t.upper ? json(*t.upper) : json("infinity");
    e["upper_source"] = t.upper_source.empty() ? "none" : t.upper_source;
    e["skipped_multiples"] = t.skipped;
    return e;
}

inline json m_json(const Element& u, const MIndex& m) {
    json w = json::array();
    for (const auto& p : m.witnesses)
        w.push_back(json{{"n", p.n}, {"product", to_string(p.product)}, {"factors", strings(p.factors)}});
    return json{{"atom", to_string(u)},
                {"value", m.value ? json(*m.value) : json(nullptr)},
                {"certification", to_string(m.certification)},
                {"n_max", m.n_max},
                {"bound_used", m.bound_used},
                {"witnesses", std::move(w)}};
}

inline json metadata_json(const FamilyMetadata& m) {
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    return json{{"family", m.family},
                {"is_reduced", m.is_reduced},
                {"complete_integral_closure", m.complete_integral_closure},
                {"closure_is_valuation", opt(m.closure_is_valuation)},
                {"closure_is_primary_valuation", opt(m.closure_is_primary_valuation)},
                {"conductor", m.conductor_descriptor},
                {"conductor_nonempty", opt(m.conductor_nonempty)},
                {"strongly_primary", opt(m.strongly_primary)},
                {"known_properties", m.known_properties}};
}

inline json condition_json(const ConditionVerdict& c) {
    return json{{"statement", c.statement}, {"verdict", to_string(c.verdict)}, {"justification", c.justification}};
}

inline json theorem_json(const TheoremReport& t) {
    json conds = json::object();
    for (const auto& c : t.conditions) conds[std::to_string(c.id)] = condition_json(c);
    return json{{"hypothesis", t.hypothesis},
                {"hypothesis_certified", t.hypothesis_certified},
                {"conductor_nonempty", t.conductor_nonempty},
                {"conditions", std::move(conds)},
                {"f_m2_check", condition_json(t.f_m2_check)},
                {"violations", t.violations}};
}

inline json reproducibility(std::uint64_t seed, std::optional<double> wall_ms) {
    json r{{"seed", seed}, {"version", version}};
    if (wall_ms) r["wall_time_ms"] = *wall_ms;
    return r;
}

/// Result of the invariants command: the report and whether it passed its own consistency rules.
struct InvariantsResult {
    json report;
    std::vector<std::string> violations;
};

/// Every invariant runs as its own task; the document is assembled afterwards in a fixed order.
inline InvariantsResult invariants_report(const MonoidSpec& spec, const RunOptions& o) {
    const auto& b = o.budget;
    const auto atoms = tested_atoms(spec);
    const bool puiseux = is_puiseux(spec);
    const bool vector_family = !puiseux && !is_numerical(spec);
    const auto len_bound = scan_bound(spec, b.element_bound, length_points);

    std::optional<LambdaResult> lambda;
    std::optional<StrongPrimaryReport> sp;
    std::vector<std::function<json()>> tasks;

    tasks.push_back([&] {
        if (puiseux) return entry("atoms", "[1,2)", Certification::Exact, 0);
        auto c = vector_family && !std::holds_alternative<FinGenVec>(spec) ? Certification::LowerBound : Certification::Exact;
        auto list = std::holds_alternative<FinGenVec>(spec) || is_numerical(spec) ? atoms : atoms_up_to(spec, len_bound);
        return entry("atoms", strings(list), c, c == Certification::Exact ? 0 : len_bound);
    });
    if (auto s = std::get_if<Numerical>(&spec))
        tasks.push_back([s] { return entry("frobenius", s->frobenius(), Certification::Exact, 0); });
    tasks.push_back([&] {
        auto d = delta_H(spec, len_bound);
        return entry("delta", ints(d.values), d.certification, d.bound_used);
    });
    tasks.push_back([&] {
        if (puiseux) {
            auto e = entry("catenary_degree", nullptr, Certification::Unknown, 0);
            e["note"] = "every element beyond 2 has infinitely many factorizations";
            return e;
        }
        auto c = catenary_of_monoid(spec, scan_bound(spec, b.element_bound, catenary_points), b);
        return entry("catenary_degree", c.value, c.certification, c.bound_used);
    });
    tasks.push_back([&] {
        auto table = rho_table(spec, b.k_max, len_bound);
        json v = json::array();
        auto weakest = Certification::Exact;
        std::int64_t bound = 0;
        for (const auto& r : table) {
            v.push_back(r.value);
            if (r.certification != Certification::Exact) weakest = r.certification;
            bound = std::max(bound, r.bound_used);
        }
        return entry("rho_k", std::move(v), weakest, bound);
    });
    tasks.push_back([&] {
        auto e = elasticity(spec, b.k_max, len_bound);
        json seq = json::array();
        for (const auto& r : e.sequence) seq.push_back(to_string(r));
        auto out = entry("elasticity", to_string(e.rho_lower), Certification::LowerBound, len_bound);
        out["sequence"] = std::move(seq);
        return out;
    });
    tasks.push_back([&] {
        lambda = lambda_H(spec, std::max<std::int64_t>(8, len_bound));
        return lambda_json(*lambda);
    });
    tasks.push_back([&] {
        auto r = bf_evidence(spec, len_bound);
        auto e = entry("bf", r.pass, r.certification, r.bound_used);
        e["detail"] = r.detail;
        return e;
    });
    tasks.push_back([&] {
        auto r = intersection_of_atom_ideals(spec);
        auto e = entry("atom_ideal_intersection", r.witness ? json(to_string(*r.witness)) : json(nullptr), r.certification, 0);
        e["smallest"] = r.smallest;
        return e;
    });
    if (vector_family)
        tasks.push_back([&] {
            const std::int64_t box = capped_box(spec, 6, length_points), n_max = 6;
            auto r = root_closed_spot_check(spec, box, n_max);
            auto e = entry("root_closed_spot_check", r.pass, Certification::Evidence, box);
            e["n_max"] = n_max;
            e["points_outside"] = r.checked;
            e["counterexamples"] = r.counterexamples;
            return e;
        });
    if (puiseux)
        tasks.push_back([] {
            auto g = puiseux::grid_enumeration_check(4, 12);
            auto e = entry("grid_enumeration_check", g.pass, Certification::Evidence, 12);
            e["denominator_bound"] = 4;
            e["values_checked"] = g.values_checked;
            return e;
        });
    tasks.push_back([&] {
        sp = strong_primary_report(spec, b);
        return json(nullptr);
    });
    for (const auto& u : atoms) {
        tasks.push_back([&, u] {
            if (puiseux) return entry("omega(" + to_string(u) + ")", puiseux::omega_atom(u.value()), Certification::Exact, 0);
            auto w = omega_atom(spec, u, b);
            return entry("omega(" + to_string(u) + ")", w.value, w.certification, w.bound_used);
        });
        tasks.push_back([&, u] {
            Budget tb = b;
            if (vector_family) {
                std::int64_t top = 0;
                for (auto c : u.coords()) top = std::max(top, c);
                tb.radius = std::max<std::int64_t>(0, std::min(b.radius, capped_box(spec, b.radius + top, tame_points) - top));
            }
            return tame_json(u, tame_degree(spec, u, tb));
        });
    }

    auto results = run_ordered(tasks.size(), o.jobs, [&](std::size_t i) { return tasks[i](); });

    InvariantsResult out;
    json inv = json::array();
    for (auto& r : results)
        if (!r.is_null()) inv.push_back(std::move(r));

    json spj{{"status", to_string(sp->status)}, {"justification", sp->justification}, {"m_values", json::array()}};
    for (const auto& [u, m] : sp->m_values) spj["m_values"].push_back(m_json(u, m));

    auto theorem = theorem_main_report(spec, *sp, vector_family ? lambda : std::nullopt);
    out.violations = theorem.violations;

    json doc;
    doc["format"] = report_format;
    doc["spec"] = json{{"text", render(spec)}, {"family", family_name(spec)}};
    doc["budget"] = budget_json(b);
    doc["invariants"] = std::move(inv);
    doc["strongly_primary"] = std::move(spj);
    doc["theorem_main"] = theorem_json(theorem);
    doc["metadata"] = metadata_json(metadata(spec));
    if (puiseux) {
        json cf = json::array();
        for (const auto& c : puiseux::puiseux_invariants())
            cf.push_back(json{{"name", c.name}, {"value", c.value}, {"derivation", c.derivation}});
        doc["closed_forms"] = std::move(cf);
    }
    out.report = std::move(doc);
    return out;
}

struct VerifyResult {
    json report;
    std::size_t violations = 0;
};

inline json check_json(const Check& c) {
    return json{{"suite", c.suite}, {"instance", c.instance}, {"relation", c.relation}, {"at", c.at},
                {"lhs", c.lhs},     {"rhs", c.rhs},           {"holds", c.holds}};
}

/// The report without the check list; `checks` is kept separately so it can be written one
/// check per line.
inline VerifyResult verify_report(const std::string& suite, const SuiteOptions& o, std::vector<Check>& checks) {
    checks = run_suite(suite, o);
    VerifyResult r;
    json per = json::array();
    for (const auto& name : suite == "all" ? suite_names() : std::vector<std::string>{suite}) {
        std::size_t n = 0, bad = 0;
        for (const auto& c : checks)
            if (c.suite == name) {
                ++n;
                bad += c.holds ? 0 : 1;
            }
        per.push_back(json{{"suite", name}, {"checks", n}, {"violations", bad}});
        r.violations += bad;
    }
    json inst = json::array();
    for (const auto& s : suite_instances(o)) inst.push_back(render(s));
    json doc;
    doc["format"] = report_format;
    doc["suite"] = suite;
    doc["options"] = json{{"seed", o.seed},
                          {"random_instances", o.random_instances},
                          {"max_generators", o.max_generators},
                          {"max_value", o.max_value},
                          {"element_bound", o.element_bound},
                          {"pairs", o.pairs},
                          {"lambda_samples", o.lambda_samples},
                          {"k_max", o.k_max},
                          {"oracle_bound", o.oracle_bound},
                          {"max_factorizations", o.max_factorizations}};
    doc["instances"] = std::move(inst);
    doc["summary"] = json{{"checks", checks.size()}, {"violations", r.violations}, {"pass", r.violations == 0}, {"suites", std::move(per)}};
    r.report = std::move(doc);
    return r;
}

/// Pretty-printed document with `checks` appended as the last key, one check per line.
inline std::string render_verify(const json& doc, const std::vector<Check>& checks) {
    auto head = doc.dump(2);
    head.erase(head.find_last_of('}'));
    while (!head.empty() && (head.back() == '\n' || head.back() == ' ')) head.pop_back();
    std::string s = head + ",\n  \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) s += (i ? ",\n    " : "\n    ") + check_json(checks[i]).dump();
    s += checks.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return s;
}

// ---------------------------------------------------------------- growth

/// Atoms whose tame degree lower bounds are tracked in the growth table.
inline std::vector<Element> tracked_atoms(const MonoidSpec& spec) {
    if (is_puiseux(spec)) return {};
    auto a = tested_atoms(spec);
    if (a.size() > 4) a.resize(4);
    return a;
}

/// CSV: radius, lambda_lower, rho_k/k for k = 1..k_max, t lower per tracked atom. Rows follow
/// the order of the radii given.
inline std::string growth_csv(const MonoidSpec& spec, const std::vector<std::int64_t>& radii, const RunOptions& o) {
    const auto atoms = tracked_atoms(spec);
    const auto k_max = o.budget.k_max;
    std::ostringstream os;
    os << "radius,lambda_lower";
    for (std::int64_t k = 1; k <= k_max; ++k) os << ",rho_" << k << "/" << k;
    for (const auto& u : atoms) {
        auto name = to_string(u);
        if (name.front() != '(') name = "(" + name + ")";
        os << ",\"t_lower" << name << "\"";
    }
    if (is_puiseux(spec)) os << ",t_lower";
    os << "\n";
    auto rows = run_ordered(radii.size(), o.jobs, [&](std::size_t i) {
        const auto r = radii[i];
        std::ostringstream row;
        row << r << "," << sup_min_length(spec, std::max<std::int64_t>(r, 1));
        for (const auto& e : elasticity(spec, k_max, std::max<std::int64_t>(r, 1)).sequence) row << "," << to_string(e);
        for (const auto& u : atoms) {
            Budget b = o.budget;
            b.radius = r;
            row << "," << tame_lower(spec, u, b).lower;
        }
        if (is_puiseux(spec)) row << ",NA";
        row << "\n";
        return row.str();
    });
    for (const auto& r : rows) os << r;
    return os.str();
}

} // namespace factorlab::cli
