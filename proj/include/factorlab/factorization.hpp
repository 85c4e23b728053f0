#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "factorlab/certified.hpp"
#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/puiseux.hpp"
#include "factorlab/window.hpp"

namespace factorlab {

/// Multiplicities over the atom list of the owning FactorizationSet.
struct Factorization {
    std::vector<std::uint32_t> counts;
    std::uint32_t length = 0;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Z(a): every factorization of one element, over the atoms dividing it.
struct FactorizationSet {
    Element element;
    /// Atoms dividing the element, in descending lexicographic order.
    std::vector<Element> atoms;
    std::vector<Factorization> items;

    std::size_t size() const noexcept { return items.size(); }

    std::vector<std::pair<Element, std::uint32_t>> parts(std::size_t i) const {
        std::vector<std::pair<Element, std::uint32_t>> out;
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (items[i].counts[j]) out.emplace_back(atoms[j], items[i].counts[j]);
        return out;
    }

    /// Sorted multiset of atoms (ascending).
    std::vector<Element> multiset(std::size_t i) const {
        std::vector<Element> out;
        for (std::size_t j = atoms.size(); j-- > 0;)
            for (std::uint32_t k = 0; k < items[i].counts[j]; ++k) out.push_back(atoms[j]);
        return out;
    }

    Element evaluate(std::size_t i) const {
        Element acc = atoms.empty() ? element : scaled(atoms.front(), 0);
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (items[i].counts[j]) acc = sum(acc, scaled(atoms[j], items[i].counts[j]));
        return acc;
    }

    LengthSet lengths() const {
        std::vector<std::int64_t> v;
        for (const auto& z : items) v.push_back(z.length);
        return LengthSet(std::move(v));
    }

    /// Index of an atom in this set, if it divides the element.
    std::optional<std::size_t> atom_position(const Element& u) const {
        for (std::size_t j = 0; j < atoms.size(); ++j)
            if (atoms[j] == u) return j;
        return std::nullopt;
    }
};

/// d(z, z'): cancel the greatest common divisor, return the larger residual length.
inline std::uint32_t distance(const Factorization& z, const Factorization& w) {
    std::uint32_t common = 0;
    const auto n = std::min(z.counts.size(), w.counts.size());
    for (std::size_t i = 0; i < n; ++i) common += std::min(z.counts[i], w.counts[i]);
    return std::max(z.length, w.length) - common;
}

/// Z(a) for a member of the window, by depth-first search over the dividing atoms in
/// descending order. Each atom's multiplicity is tried from high to low, so every multiset
/// is emitted once and the order is deterministic. A suffix reachability table over the
/// box below a prunes every dead branch.
inline FactorizationSet factorizations(const Window& w, std::size_t a, std::size_t max_factorizations) {
    if (!w.member(a)) throw InputError("element " + to_string(w.point(a)) + " is not in the monoid");
    FactorizationSet out;
    out.element = w.element(a);

    std::vector<std::size_t> atoms;
    const auto& all = w.atom_indices();
    for (auto it = all.rbegin(); it != all.rend(); ++it)
        if (*it <= a && w.divides(*it, a)) atoms.push_back(*it);
    for (auto u : atoms) out.atoms.push_back(w.element(u));
    if (a == 0) {
        out.items.push_back({std::vector<std::uint32_t>(atoms.size(), 0), 0});
        return out;
    }

    // Sub-box [0, a] with its own mixed radix.
    const auto d = w.dim();
    const auto top = w.point(a);
    std::vector<std::size_t> sstride(d, 1);
    std::size_t ssize = 1;
    for (std::size_t i = d; i-- > 0;) {
        sstride[i] = ssize;
        ssize *= static_cast<std::size_t>(top[i] + 1);
    }
    auto sub_index = [&](std::size_t widx) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < d; ++i) s += static_cast<std::size_t>(w.coord(widx, i)) * sstride[i];
        return s;
    };
    std::vector<std::size_t> satom(atoms.size());
    for (std::size_t j = 0; j < atoms.size(); ++j) satom[j] = sub_index(atoms[j]);

    std::vector<std::int64_t> scoords(ssize * d);
    {
        IntVec p(d, 0);
        for (std::size_t s = 0; s < ssize; ++s) {
            std::copy(p.begin(), p.end(), scoords.begin() + static_cast<std::ptrdiff_t>(s * d));
            for (std::size_t i = d; i-- > 0;) {
                if (++p[i] <= top[i]) break;
                p[i] = 0;
            }
        }
    }
    auto sbelow = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < d; ++i)
            if (scoords[x * d + i] > scoords[y * d + i]) return false;
        return true;
    };

    // reach[j][s]: s is a sum of atoms j..n-1.
    const auto n = atoms.size();
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(ssize, 0));
    reach[n][0] = 1;
    for (std::size_t s = 0; s < ssize; ++s) {
        for (std::size_t j = n; j-- > 0;) {
            bool r = reach[j + 1][s];
            if (!r && satom[j] <= s && sbelow(satom[j], s)) r = reach[j][s - satom[j]];
            reach[j][s] = r ? 1 : 0;
        }
    }

    std::vector<std::uint32_t> counts(n, 0);
    std::function<void(std::size_t, std::size_t, std::uint32_t)> dfs = [&](std::size_t j, std::size_t rem,
                                                                           std::uint32_t len) {
        if (rem == 0) {
            if (out.items.size() >= max_factorizations)
                throw BudgetExceeded("factorization budget exceeded at " + to_string(out.element),
                                     out.items.size());
            out.items.push_back({counts, len});
            return;
        }
        if (j == n) return;
        std::uint32_t kmax = 0;
        std::size_t r = rem;
        std::vector<std::size_t> rems{rem};
        while (satom[j] <= r && sbelow(satom[j], r)) {
            r -= satom[j];
            ++kmax;
            rems.push_back(r);
        }
        for (std::uint32_t k = kmax + 1; k-- > 0;) {
            if (!reach[j + 1][rems[k]]) continue;
            counts[j] = k;
            dfs(j + 1, rems[k], len + k);
        }
        counts[j] = 0;
    };
    if (reach[0][ssize - 1]) dfs(0, ssize - 1, 0);
    return out;
}

/// Window covering exactly the box below a.
inline Window window_below(const MonoidSpec& spec, const Element& a) {
    if (is_puiseux(spec))
        throw UnsupportedOperation("puiseux-tail elements have infinitely many factorizations");
    require_member(spec, a);
    return Window(spec, a.coords());
}

inline FactorizationSet factorizations(const MonoidSpec& spec, const Element& a, const Budget& budget = {}) {
    auto w = window_below(spec, a);
    return factorizations(w, w.index(a.coords()), budget.max_factorizations);
}

inline LengthSet length_set(const MonoidSpec& spec, const Element& a, const Budget& budget = {}) {
    if (is_puiseux(spec)) {
        require_member(spec, a);
        return puiseux::length_set_closed(a.value());
    }
    return factorizations(spec, a, budget).lengths();
}

/// Smallest N making {z, z' : d(z,z') <= N} connected on Z(a); 0 when |Z(a)| <= 1.
///
/// Equal to the largest edge of a minimum spanning tree of the complete distance graph,
/// found with dense Prim in O(|Z|^2) time and O(|Z|) memory.
inline std::uint32_t catenary_degree(const FactorizationSet& z) {
    const auto n = z.items.size();
    if (n <= 1) return 0;
    constexpr auto inf = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> best(n, inf);
    std::vector<char> in_tree(n, 0);
    std::uint32_t worst = 0;
    std::size_t cur = 0;
    in_tree[0] = 1;
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t next = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_tree[i]) continue;
            best[i] = std::min(best[i], distance(z.items[cur], z.items[i]));
            if (next == n || best[i] < best[next]) next = i;
        }
        worst = std::max(worst, best[next]);
        in_tree[next] = 1;
        cur = next;
    }
    return worst;
}

inline std::uint32_t catenary_degree(const MonoidSpec& spec, const Element& a, const Budget& budget = {}) {
    return catenary_degree(factorizations(spec, a, budget));
}

/// Element window used by monoid-level scans: [0, bound] for numerical monoids,
/// the cube [0, bound]^d otherwise.
inline Window scan_window(const MonoidSpec& spec, std::int64_t bound) {
    if (bound < 0) throw InputError("element bound must be >= 0");
    return Window(spec, cube(spec, bound));
}

/// max c(a) over a in the window. Propagates BudgetExceeded.
inline std::uint32_t catenary_over(const Window& w, std::size_t max_factorizations) {
    std::uint32_t c = 0;
    for (auto idx : w.members()) c = std::max(c, catenary_degree(factorizations(w, idx, max_factorizations)));
    return c;
}

/// c(H) restricted to the scanned elements. Always a lower bound: no stabilisation
/// certificate is available. Numerical monoids scan at least up to 2 (F + n_p).
inline Certified<std::int64_t> catenary_of_monoid(const MonoidSpec& spec, std::int64_t element_bound,
                                                  const Budget& budget = {}) {
    if (element_bound < 1) throw InputError("element bound must be >= 1");
    if (is_puiseux(spec)) throw UnsupportedOperation("puiseux-tail elements have infinitely many factorizations");
    auto bound = element_bound;
    if (auto s = std::get_if<Numerical>(&spec))
        bound = std::max(bound, 2 * (s->frobenius() + s->largest_generator()));
    auto w = scan_window(spec, bound);
    return {catenary_over(w, budget.max_factorizations), Certification::LowerBound, bound};
}

} // namespace factorlab
