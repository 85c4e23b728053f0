#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"

namespace factorlab {

/// Numerical monoid given by its minimal generating set (gcd 1).
///
/// Membership uses the Apery set with respect to the multiplicity n1:
/// x is in S iff x >= apery[x mod n1].
class Numerical {
public:
    /// Normalizes to the minimal generating set. Throws InputError on gcd != 1 or non-positive input.
    static Numerical from_generators(std::vector<std::int64_t> gens) {
        if (gens.empty()) throw InputError("numerical monoid needs at least one generator");
        for (auto g : gens)
            if (g <= 0) throw InputError("numerical generators must be positive, got " + std::to_string(g));
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::int64_t g = 0;
        for (auto x : gens) g = std::gcd(g, x);
        if (g != 1) throw InputError("numerical generators must have gcd 1, got gcd " + std::to_string(g));

        std::vector<std::int64_t> minimal;
        for (auto x : gens)
            if (!representable(minimal, x)) minimal.push_back(x);
        Numerical s;
        s.gens_ = std::move(minimal);
        s.build_apery();
        return s;
    }

    const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
    std::int64_t multiplicity() const noexcept { return gens_.front(); }
    std::int64_t largest_generator() const noexcept { return gens_.back(); }
    /// Largest integer not in S; -1 when S is all of N0.
    std::int64_t frobenius() const noexcept { return frobenius_; }
    const std::vector<std::int64_t>& apery() const noexcept { return apery_; }

    bool contains(std::int64_t x) const {
        if (x < 0) return false;
        return x >= apery_[static_cast<std::size_t>(x % multiplicity())];
    }

    friend bool operator==(const Numerical& a, const Numerical& b) { return a.gens_ == b.gens_; }

private:
    Numerical() = default;

    static bool representable(const std::vector<std::int64_t>& gens, std::int64_t x) {
        if (gens.empty()) return x == 0;
        std::vector<char> ok(static_cast<std::size_t>(x) + 1, 0);
        ok[0] = 1;
        for (std::int64_t v = 1; v <= x; ++v)
            for (auto g : gens)
                if (g <= v && ok[static_cast<std::size_t>(v - g)]) {
                    ok[static_cast<std::size_t>(v)] = 1;
                    break;
                }
        return ok[static_cast<std::size_t>(x)];
    }

    // Dijkstra over residues mod n1.
    void build_apery() {
        const auto n1 = multiplicity();
        constexpr auto inf = std::numeric_limits<std::int64_t>::max();
        apery_.assign(static_cast<std::size_t>(n1), inf);
        using Item = std::pair<std::int64_t, std::int64_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        apery_[0] = 0;
        pq.push({0, 0});
        while (!pq.empty()) {
            auto [d, r] = pq.top();
            pq.pop();
            if (d != apery_[static_cast<std::size_t>(r)]) continue;
            for (auto g : gens_) {
                auto nr = (r + g) % n1;
                if (d + g < apery_[static_cast<std::size_t>(nr)]) {
                    apery_[static_cast<std::size_t>(nr)] = d + g;
                    pq.push({d + g, nr});
                }
            }
        }
        frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - n1;
    }

    std::vector<std::int64_t> gens_;
    std::vector<std::int64_t> apery_;
    std::int64_t frobenius_ = -1;
};

/// H = {(x,y) in N^2 : y < x*sqrt(m)} with {(0,0)}, N the positive integers; m squarefree >= 2.
class SqrtCone {
public:
    static SqrtCone with_m(std::int64_t m) {
        if (m < 2) throw InputError("sqrt-cone needs m >= 2, got " + std::to_string(m));
        for (std::int64_t p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) throw InputError("sqrt-cone needs squarefree m, got " + std::to_string(m));
        SqrtCone c;
        c.m_ = m;
        return c;
    }
    std::int64_t m() const noexcept { return m_; }

    bool contains(std::int64_t x, std::int64_t y) const {
        if (x == 0 && y == 0) return true;
        if (x < 1 || y < 1) return false;
        return static_cast<__int128>(y) * y < static_cast<__int128>(m_) * x * x;
    }

    friend bool operator==(const SqrtCone& a, const SqrtCone& b) { return a.m_ == b.m_; }

private:
    SqrtCone() = default;
    std::int64_t m_ = 2;
};

/// H = {(a,b,c) in N0^3 : a > 0 or b = c}.
struct HalfSpaceDiagonal {
    static bool contains(std::int64_t a, std::int64_t b, std::int64_t c) {
        if (a < 0 || b < 0 || c < 0) return false;
        return a > 0 || b == c;
    }
    friend bool operator==(const HalfSpaceDiagonal&, const HalfSpaceDiagonal&) { return true; }
};

/// H = {0} u {q in Q : q >= 1}.
struct PuiseuxTail {
    static bool contains(const Rational& q) { return q == Rational(0) || q >= 1; }
    friend bool operator==(const PuiseuxTail&, const PuiseuxTail&) { return true; }
};

/// Submonoid of (N0^d, +) generated by finitely many non-zero vectors, stored minimally.
class FinGenVec {
public:
    static FinGenVec from_generators(std::vector<IntVec> gens) {
        if (gens.empty()) throw InputError("fin-gen-vec needs at least one generator");
        const auto d = gens.front().size();
        if (d == 0) throw InputError("fin-gen-vec generators must have dimension >= 1");
        for (const auto& g : gens) {
            if (g.size() != d) throw InputError("fin-gen-vec generators must share one dimension");
            bool nonzero = false;
            for (auto c : g) {
                if (c < 0)
                    throw InputError("fin-gen-vec generators must be non-negative vectors: " + to_string(g));
                nonzero = nonzero || c != 0;
            }
            // A non-negative non-zero generator has no inverse in N0^d, so H stays reduced.
            if (!nonzero) throw InputError("fin-gen-vec generators must be non-zero");
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        FinGenVec h;
        h.dim_ = d;
        // A generator is redundant iff it is a sum of the others; those others are all
        // componentwise smaller, so testing against the full list is enough.
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<IntVec> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (!generated_by(others, gens[i])) h.gens_.push_back(gens[i]);
        }
        return h;
    }

    const std::vector<IntVec>& generators() const noexcept { return gens_; }
    std::size_t dim() const noexcept { return dim_; }

    bool contains(const IntVec& x) const {
        for (auto c : x)
            if (c < 0) return false;
        return generated_by(gens_, x);
    }

    friend bool operator==(const FinGenVec& a, const FinGenVec& b) { return a.gens_ == b.gens_; }

private:
    FinGenVec() = default;

    static bool generated_by(const std::vector<IntVec>& gens, const IntVec& x) {
        std::map<IntVec, bool> memo;
        std::function<bool(const IntVec&)> rec = [&](const IntVec& v) -> bool {
            bool zero = true;
            for (auto c : v) zero = zero && c == 0;
            if (zero) return true;
            if (auto it = memo.find(v); it != memo.end()) return it->second;
            bool ok = false;
            for (const auto& g : gens) {
                IntVec r(v.size());
                bool nonneg = true;
                for (std::size_t i = 0; i < v.size() && nonneg; ++i) {
                    r[i] = v[i] - g[i];
                    nonneg = r[i] >= 0;
                }
                if (nonneg && rec(r)) {
                    ok = true;
                    break;
                }
            }
            memo.emplace(v, ok);
            return ok;
        };
        return rec(x);
    }

    std::vector<IntVec> gens_;
    std::size_t dim_ = 0;
};

/// Family tag plus parameters. Immutable once built; the only source of membership truth.
using MonoidSpec = std::variant<Numerical, SqrtCone, HalfSpaceDiagonal, PuiseuxTail, FinGenVec>;

inline bool is_numerical(const MonoidSpec& s) { return std::holds_alternative<Numerical>(s); }
inline bool is_puiseux(const MonoidSpec& s) { return std::holds_alternative<PuiseuxTail>(s); }

/// Families whose membership is a predicate on a box of lattice points rather than a generator list.
inline bool is_predicate_family(const MonoidSpec& s) {
    return std::holds_alternative<SqrtCone>(s) || std::holds_alternative<HalfSpaceDiagonal>(s);
}

/// Dimension of integer elements; 0 for rational families.
inline std::size_t dimension(const MonoidSpec& s) {
    return std::visit(
        [](const auto& h) -> std::size_t {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, Numerical>) return 1;
            else if constexpr (std::is_same_v<T, SqrtCone>) return 2;
            else if constexpr (std::is_same_v<T, HalfSpaceDiagonal>) return 3;
            else if constexpr (std::is_same_v<T, PuiseuxTail>) return 0;
            else return h.dim();
        },
        s);
}

inline void check_kind(const MonoidSpec& s, const Point& x) {
    const auto d = dimension(s);
    if (d == 0) {
        if (!std::holds_alternative<Rational>(x)) throw InputError("rational element expected");
        return;
    }
    const auto* v = std::get_if<IntVec>(&x);
    if (!v) throw InputError("integer vector element expected");
    if (v->size() != d)
        throw InputError("dimension mismatch: expected " + std::to_string(d) + ", got " +
                         std::to_string(v->size()));
}

/// Membership of a (possibly signed) point.
inline bool contains(const MonoidSpec& s, const Point& x) {
    check_kind(s, x);
    return std::visit(
        [&](const auto& h) -> bool {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, Numerical>) return h.contains(std::get<IntVec>(x)[0]);
            else if constexpr (std::is_same_v<T, SqrtCone>) {
                const auto& v = std::get<IntVec>(x);
                return h.contains(v[0], v[1]);
            } else if constexpr (std::is_same_v<T, HalfSpaceDiagonal>) {
                const auto& v = std::get<IntVec>(x);
                return h.contains(v[0], v[1], v[2]);
            } else if constexpr (std::is_same_v<T, PuiseuxTail>) return h.contains(std::get<Rational>(x));
            else return h.contains(std::get<IntVec>(x));
        },
        s);
}

inline bool contains(const MonoidSpec& s, const Element& x) { return contains(s, x.point()); }

/// True when every element has exactly one factorization: N0 itself, or a vector
/// monoid whose minimal generators are linearly independent over Q.
inline bool is_factorial(const MonoidSpec& s) {
    if (auto n = std::get_if<Numerical>(&s)) return n->generators() == std::vector<std::int64_t>{1};
    const auto* f = std::get_if<FinGenVec>(&s);
    if (!f) return false;
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : f->generators()) rows.emplace_back(g.begin(), g.end());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < f->dim() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == Rational(0)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == Rational(0)) continue;
            auto factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = 0; c < f->dim(); ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank == rows.size();
}

inline Element zero_of(const MonoidSpec& s) {
    const auto d = dimension(s);
    if (d == 0) return Element::rat(0);
    return Element::vec(IntVec(d, 0));
}

inline void require_member(const MonoidSpec& s, const Element& x) {
    if (!contains(s, x)) throw InputError("element " + to_string(x) + " is not in the monoid");
}

/// a | b, i.e. b - a lies in H. Both arguments must be members.
inline bool divides(const MonoidSpec& s, const Element& a, const Element& b) {
    require_member(s, a);
    require_member(s, b);
    return contains(s, difference(b.point(), a.point()));
}

} // namespace factorlab
