#pragma once

// Closed forms for the monoid {0} u {q in Q : q >= 1}.
//
// Atoms are exactly the rationals in [1,2): anything >= 2 splits as 1 + (q - 1).
// l atoms sum to a value in [l, 2l), and every value there is reached by l copies of q/l,
// hence L(q) = {l : l <= q < 2l}.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/lengths.hpp"

namespace factorlab::puiseux {

inline void require_member(const Rational& q) {
    if (q < 0 || (q != Rational(0) && q < 1))
        throw InputError("puiseux-tail element must be 0 or >= 1, got " + to_string(q));
}

inline bool is_atom(const Rational& q) { return q >= 1 && q < 2; }

/// floor(q/2) + 1 for q >= 1; 0 for q = 0.
inline std::int64_t min_length(const Rational& q) {
    require_member(q);
    if (q == Rational(0)) return 0;
    return floor_of(q / 2) + 1;
}

/// floor(q) for q >= 1; 0 for q = 0.
inline std::int64_t max_length(const Rational& q) {
    require_member(q);
    return floor_of(q);
}

inline LengthSet length_set_closed(const Rational& q) {
    require_member(q);
    if (q == Rational(0)) return LengthSet({0});
    std::vector<std::int64_t> v;
    for (auto l = min_length(q); l <= max_length(q); ++l) v.push_back(l);
    return LengthSet(std::move(v));
}

/// rho_k = sup{max L(q) : k in L(q)} = sup{floor(q) : k <= q < 2k} = 2k - 1.
inline std::int64_t rho_k(std::int64_t k) {
    if (k < 1) throw InputError("rho_k needs k >= 1");
    return 2 * k - 1;
}

/// Smallest n with m^n = [n, oo) inside q + H = {q} u [q+1, oo); that is n >= q + 1.
inline std::int64_t m_index(const Rational& q) {
    require_member(q);
    if (q == Rational(0)) throw InputError("M is defined for non-units only");
    return ceil_of(q) + 1;
}

/// omega of an atom: 2 for u = 1 (witness {3/2, 3/2}), 3 for u in (1,2) (witness {1,1,1}).
inline std::int64_t omega_atom(const Rational& u) {
    if (!is_atom(u)) throw InputError("omega_atom needs an atom in [1,2)");
    return u == Rational(1) ? 2 : 3;
}

/// Conductor (H : H^) with H^ = Q>=0 is {x : x + Q>=0 inside H} = {x >= 1}.
inline bool in_conductor(const Rational& x) { return x >= 1; }

/// Smallest element of the intersection of all u + H over atoms u in [1,2): c - u must be
/// 0 or >= 1 for every u < 2, forcing c >= 3.
inline Rational atom_ideal_intersection_min() { return Rational(3); }

/// Witnesses: the atoms with denominator dividing N, scaled to integers in [N, 2N).
/// reach[P] holds the bit l when P/N is a sum of l such atoms.
class GridLengths {
public:
    GridLengths(std::int64_t denominator, std::int64_t value_bound) : n_(denominator), vmax_(value_bound) {
        const auto top = static_cast<std::size_t>(n_ * vmax_);
        reach_.assign(top + 1, {});
        reach_[0].push_back(0);
        // Unbounded knapsack over lengths; sets are tiny so sorted vectors suffice.
        for (std::size_t p = 1; p <= top; ++p) {
            std::vector<std::int64_t> ls;
            for (auto a = n_; a < 2 * n_ && static_cast<std::size_t>(a) <= p; ++a)
                for (auto l : reach_[p - static_cast<std::size_t>(a)]) ls.push_back(l + 1);
            std::sort(ls.begin(), ls.end());
            ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
            reach_[p] = std::move(ls);
        }
    }

    std::int64_t denominator() const noexcept { return n_; }

    /// Lengths reachable for q; q * N must be an integer within range.
    LengthSet lengths(const Rational& q) const {
        auto scaled = q * n_;
        if (scaled.denominator() != 1 || scaled.numerator() < 0 || q > vmax_)
            throw InputError("value " + to_string(q) + " not on the grid");
        return LengthSet(reach_[static_cast<std::size_t>(scaled.numerator())]);
    }

private:
    std::int64_t n_;
    std::int64_t vmax_;
    std::vector<std::vector<std::int64_t>> reach_;
};

struct GridCheckResult {
    bool pass = true;
    std::size_t values_checked = 0;
    /// Values where the coarse grid (atom denominators <= bound) found a length outside the closed form.
    std::vector<std::string> unsound;
    /// Values where a closed-form length had no witness on the fine grid.
    std::vector<std::string> unwitnessed;
    /// Closed-form lengths not reachable with atom denominators <= bound (expected near q = 2l).
    std::size_t coarse_gaps = 0;
};

/// Oracle for length_set_closed over every q = p/d with d <= denominator_bound, q <= value_bound.
///
/// Coarse grid: atoms with denominator <= denominator_bound. Its lengths must lie inside the
/// closed form. Fine grid: atoms with denominator dividing lcm(1..D) * value_bound, enough to
/// realise every closed-form length for these q. Its lengths must equal the closed form.
inline GridCheckResult grid_enumeration_check(std::int64_t denominator_bound, std::int64_t value_bound) {
    if (denominator_bound < 1 || value_bound < 1) throw InputError("grid bounds must be >= 1");
    std::int64_t lcm = 1;
    for (std::int64_t d = 1; d <= denominator_bound; ++d) lcm = std::lcm(lcm, d);

    // Coarse grid lengths via a DP over the common denominator lcm, restricted to atoms whose
    // reduced denominator is <= denominator_bound.
    const auto top = static_cast<std::size_t>(lcm * value_bound);
    std::vector<std::int64_t> coarse_atoms;
    for (auto a = lcm; a < 2 * lcm; ++a)
        if (Rational(a, lcm).denominator() <= denominator_bound) coarse_atoms.push_back(a);
    std::vector<std::vector<std::int64_t>> coarse(top + 1);
    coarse[0].push_back(0);
    for (std::size_t p = 1; p <= top; ++p) {
        std::vector<std::int64_t> ls;
        for (auto a : coarse_atoms)
            if (static_cast<std::size_t>(a) <= p)
                for (auto l : coarse[p - static_cast<std::size_t>(a)]) ls.push_back(l + 1);
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        coarse[p] = std::move(ls);
    }

    GridLengths fine(lcm * value_bound, value_bound);

    GridCheckResult r;
    for (std::int64_t d = 1; d <= denominator_bound; ++d) {
        for (std::int64_t p = d; p <= d * value_bound; ++p) {
            Rational q(p, d);
            if (q.denominator() != d) continue;
            ++r.values_checked;
            auto closed = length_set_closed(q);
            auto scaled = q * lcm;
            LengthSet got(coarse[static_cast<std::size_t>(scaled.numerator())]);
            for (auto l : got.values())
                if (!closed.contains(l)) r.unsound.push_back(to_string(q) + ":" + std::to_string(l));
            for (auto l : closed.values())
                if (!got.contains(l)) ++r.coarse_gaps;
            if (!(fine.lengths(q) == closed)) r.unwitnessed.push_back(to_string(q));
        }
    }
    r.pass = r.unsound.empty() && r.unwitnessed.empty();
    return r;
}

/// One closed-form invariant with the reasoning that produced it.
struct ClosedFormEntry {
    std::string name;
    std::string value;
    std::string derivation;
};

inline std::vector<ClosedFormEntry> puiseux_invariants() {
    return {
        {"atoms", "[1,2)", "any q >= 2 splits as 1 + (q-1); no q in [1,2) is a sum of two elements >= 1"},
        {"length_set", "L(q) = {l : l <= q < 2l}", "l atoms in [1,2) sum into [l,2l); l copies of q/l realise q"},
        {"min_length", "floor(q/2) + 1", "smallest l with q < 2l"},
        {"max_length", "floor(q)", "largest l with l <= q"},
        {"delta", "subset of {1}", "L(q) is an integer interval"},
        {"rho_k", "2k - 1", "max floor(q) over k <= q < 2k"},
        {"elasticity", "2", "(2k-1)/k increases to 2 and never reaches it"},
        {"lambda", "infinite", "min L(q) = floor(q/2)+1 is unbounded"},
        {"m_index", "ceil(q) + 1", "m^n = [n,oo) lies in {q} u [q+1,oo) iff n >= q+1"},
        {"omega_atom", "2 for u = 1, 3 for u in (1,2)", "omega <= M(u); {3/2,3/2} and {1,1,1} are minimal"},
        {"conductor", "{q : q >= 1}", "x + Q>=0 lies in H iff x >= 1"},
        {"complete_integral_closure", "(Q>=0, +), non-discrete valuation monoid", "every q > 0 has c + nq in H for c = 1"},
        {"atom_ideal_intersection_min", "3", "c - u in {0} u [1,oo) for all u in [1,2) iff c >= 3"},
    };
}

} // namespace factorlab::puiseux
