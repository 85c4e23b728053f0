#pragma once

// Slow reference implementations. They share nothing with the engine except the membership
// predicates of the non-numerical families, and stay deliberately unoptimised.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/factorization.hpp"
#include "factorlab/monoid.hpp"

namespace factorlab::oracle {

/// Sorted list of atoms.
using Multiset = std::vector<IntVec>;

namespace detail {

class Oracle {
public:
    explicit Oracle(const MonoidSpec& spec) : spec_(spec) {
        if (is_puiseux(spec)) throw UnsupportedOperation("the oracle works on integer-vector families");
    }

    bool member(const IntVec& p) {
        for (auto c : p)
            if (c < 0) return false;
        auto it = member_memo_.find(p);
        if (it != member_memo_.end()) return it->second;
        bool r = false;
        if (auto s = std::get_if<Numerical>(&spec_)) {
            // x is a sum of generators iff x = 0 or x - g is one for some generator g.
            r = p[0] == 0;
            for (auto g : s->generators()) r = r || member({p[0] - g});
        } else {
            r = contains(spec_, Point(p));
        }
        member_memo_[p] = r;
        return r;
    }

    static bool zero(const IntVec& p) {
        for (auto c : p)
            if (c != 0) return false;
        return true;
    }

    static IntVec minus(const IntVec& a, const IntVec& b) {
        IntVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }

    static IntVec plus(const IntVec& a, const IntVec& b) {
        IntVec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }

    /// Every point of the box [0, top].
    static std::vector<IntVec> box(const IntVec& top) {
        std::vector<IntVec> out;
        IntVec p(top.size(), 0);
        while (true) {
            out.push_back(p);
            std::size_t i = top.size();
            while (i-- > 0) {
                if (++p[i] <= top[i]) break;
                p[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) return out;
        }
    }

    bool divides(const IntVec& a, const IntVec& b) { return member(minus(b, a)); }

    bool atom(const IntVec& b) {
        if (zero(b) || !member(b)) return false;
        for (const auto& c : box(b))
            if (!zero(c) && c != b && member(c) && member(minus(b, c))) return false;
        return true;
    }

    const std::set<Multiset>& factorizations(const IntVec& a) {
        auto it = z_memo_.find(a);
        if (it != z_memo_.end()) return it->second;
        std::set<Multiset> out;
        if (zero(a)) {
            out.insert(Multiset{});
        } else {
            for (const auto& b : box(a)) {
                if (zero(b) || !member(b) || !member(minus(a, b))) continue;
                if (!atom(b)) continue;
                for (auto z : factorizations(minus(a, b))) {
                    z.push_back(b);
                    std::sort(z.begin(), z.end());
                    out.insert(z);
                }
            }
        }
        return z_memo_[a] = out;
    }

private:
    MonoidSpec spec_;
    std::map<IntVec, bool> member_memo_;
    std::map<IntVec, std::set<Multiset>> z_memo_;
};

} // namespace detail

inline std::set<Multiset> naive_factorizations(const MonoidSpec& spec, const Element& a) {
    detail::Oracle o(spec);
    if (!o.member(a.coords())) throw InputError(to_string(a.point()) + " is not in the monoid");
    return o.factorizations(a.coords());
}

/// Engine output in the oracle's representation.
inline std::set<Multiset> as_multisets(const FactorizationSet& z) {
    std::set<Multiset> out;
    for (std::size_t i = 0; i < z.size(); ++i) {
        Multiset m;
        for (const auto& e : z.multiset(i)) m.push_back(e.coords());
        std::sort(m.begin(), m.end());
        out.insert(m);
    }
    return out;
}

/// d(z, z') on sorted multisets.
inline std::int64_t naive_distance(const Multiset& x, const Multiset& y) {
    std::int64_t common = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            ++common;
            ++i;
            ++j;
        } else if (x[i] < y[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<std::int64_t>(std::max(x.size(), y.size())) - common;
}

/// Smallest N for which the graph "distance <= N" on Z(a) is connected.
inline std::int64_t naive_catenary(const std::set<Multiset>& zs) {
    std::vector<Multiset> z(zs.begin(), zs.end());
    if (z.size() <= 1) return 0;
    for (std::int64_t n = 0;; ++n) {
        std::vector<char> seen(z.size(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < z.size(); ++j)
                if (!seen[j] && naive_distance(z[i], z[j]) <= n) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        if (std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; })) return n;
    }
}

/// omega(u) straight from the definition: products of up to n_max arbitrary non-units inside
/// the box [0, top]; for each, the fewest factors whose product u divides. Lower bound.
inline std::int64_t naive_omega(const MonoidSpec& spec, const Element& u, std::int64_t n_max, const IntVec& top) {
    detail::Oracle o(spec);
    std::vector<IntVec> nonunits;
    for (const auto& p : detail::Oracle::box(top))
        if (!detail::Oracle::zero(p) && o.member(p)) nonunits.push_back(p);

    std::int64_t best = 0;
    std::vector<std::size_t> pick;
    auto in_box = [&](const IntVec& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] > top[i]) return false;
        return true;
    };
    auto evaluate = [&]() {
        IntVec prod(top.size(), 0);
        for (auto i : pick) prod = detail::Oracle::plus(prod, nonunits[i]);
        if (!o.divides(u.coords(), prod)) return;
        const auto n = pick.size();
        std::int64_t fewest = static_cast<std::int64_t>(n);
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            IntVec sub(top.size(), 0);
            std::int64_t size = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) {
                    sub = detail::Oracle::plus(sub, nonunits[pick[i]]);
                    ++size;
                }
            if (o.divides(u.coords(), sub)) fewest = std::min(fewest, size);
        }
        best = std::max(best, fewest);
    };
    std::function<void(std::size_t, IntVec)> rec = [&](std::size_t start, IntVec sum) {
        if (!pick.empty()) evaluate();
        if (static_cast<std::int64_t>(pick.size()) == n_max) return;
        for (std::size_t i = start; i < nonunits.size(); ++i) {
            auto next = detail::Oracle::plus(sum, nonunits[i]);
            if (!in_box(next)) continue;
            pick.push_back(i);
            rec(i, next);
            pick.pop_back();
        }
    };
    rec(0, IntVec(top.size(), 0));
    return best;
}

/// Tame degree lower bound from every multiple a of u with a <= u + radius componentwise.
inline std::int64_t naive_tame(const MonoidSpec& spec, const Element& u, std::int64_t radius) {
    detail::Oracle o(spec);
    if (!o.atom(u.coords())) throw InputError(to_string(u.point()) + " is not an atom");
    IntVec top = u.coords();
    for (auto& c : top) c += radius;
    std::int64_t t = 0;
    for (const auto& a : detail::Oracle::box(top)) {
        if (!o.member(a) || !o.divides(u.coords(), a)) continue;
        const auto& zs = o.factorizations(a);
        for (const auto& z : zs) {
            if (std::find(z.begin(), z.end(), u.coords()) != z.end()) continue;
            std::int64_t nearest = -1;
            for (const auto& w : zs) {
                if (std::find(w.begin(), w.end(), u.coords()) == w.end()) continue;
                auto d = naive_distance(z, w);
                if (nearest < 0 || d < nearest) nearest = d;
            }
            t = std::max(t, nearest);
        }
    }
    return t;
}

} // namespace factorlab::oracle
