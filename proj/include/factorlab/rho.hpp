#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "factorlab/certified.hpp"
#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/puiseux.hpp"
#include "factorlab/window.hpp"

namespace factorlab {

/// rho_1 .. rho_{k_max}; entry k-1 holds rho_k.
///
/// Numerical: k in L(a) forces a <= k n_p, so a scan of [0, k n_p] is exhaustive and Exact.
/// The shortcut sup L(k n_p) is not used for the value; it already fails for
/// numerical: [6, 9, 20] at k = 2 (L(40) = {2}, while 18 = 9+9 = 6+6+6).
/// Vector families: LowerBound from the cube [0, search_bound]^d.
inline std::vector<Certified<std::int64_t>> rho_table(const MonoidSpec& spec, std::int64_t k_max,
                                                      std::int64_t search_bound) {
    if (k_max < 1) throw InputError("rho_k needs k >= 1");
    std::vector<Certified<std::int64_t>> out;
    if (is_puiseux(spec)) {
        for (std::int64_t k = 1; k <= k_max; ++k) out.push_back({puiseux::rho_k(k), Certification::Exact, 0});
        return out;
    }
    if (is_factorial(spec)) {
        for (std::int64_t k = 1; k <= k_max; ++k) out.push_back({k, Certification::Exact, 0});
        return out;
    }
    if (auto s = std::get_if<Numerical>(&spec)) {
        const auto np = s->largest_generator();
        const auto top = std::max(k_max * np, search_bound);
        Window w(spec, {top});
        LengthTable lt(w);
        std::vector<std::int64_t> scan(static_cast<std::size_t>(k_max) + 1, 0);
        for (auto idx : w.members()) {
            auto mx = lt.max_length(idx);
            for (auto l : lt.lengths(idx))
                if (l >= 1 && l <= k_max) scan[static_cast<std::size_t>(l)] = std::max(scan[static_cast<std::size_t>(l)], mx);
        }
        for (std::int64_t k = 1; k <= k_max; ++k) out.push_back({scan[static_cast<std::size_t>(k)], Certification::Exact, top});
        return out;
    }
    if (search_bound < 1) throw InputError("search bound must be >= 1");
    Window w(spec, cube(spec, search_bound));
    LengthTable lt(w);
    std::vector<std::int64_t> scan(static_cast<std::size_t>(k_max) + 1, 0);
    for (auto idx : w.members()) {
        auto mx = lt.max_length(idx);
        for (auto l : lt.lengths(idx))
            if (l >= 1 && l <= k_max) scan[static_cast<std::size_t>(l)] = std::max(scan[static_cast<std::size_t>(l)], mx);
    }
    // If k-1 is in L(a) then k is in L(a+u) and max L(a+u) > max L(a), so rho_k > rho_{k-1};
    // the box can cut off a+u, hence the carry.
    for (std::int64_t k = 1; k <= k_max; ++k) {
        auto v = scan[static_cast<std::size_t>(k)];
        if (k > 1) v = std::max(v, out.back().value + 1);
        out.push_back({v, Certification::LowerBound, search_bound});
    }
    return out;
}

inline Certified<std::int64_t> rho_k(const MonoidSpec& spec, std::int64_t k, std::int64_t search_bound) {
    return rho_table(spec, k, search_bound).back();
}

struct Elasticity {
    /// rho_k / k for k = 1..k_max.
    std::vector<Rational> sequence;
    std::vector<Certification> certifications;
    /// max of the sequence; always a lower bound for rho(H).
    Rational rho_lower{1};
};

inline Elasticity elasticity(const MonoidSpec& spec, std::int64_t k_max, std::int64_t search_bound) {
    Elasticity e;
    auto table = rho_table(spec, k_max, search_bound);
    for (std::size_t i = 0; i < table.size(); ++i) {
        Rational r(table[i].value, static_cast<std::int64_t>(i) + 1);
        e.sequence.push_back(r);
        e.certifications.push_back(table[i].certification);
        e.rho_lower = std::max(e.rho_lower, r);
    }
    return e;
}

} // namespace factorlab
