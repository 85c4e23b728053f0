#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/monoid.hpp"

namespace factorlab {

/// The lattice box [0, upper] intersected with an integer-vector monoid.
///
/// Points are indexed in mixed radix with the first coordinate most significant, so the
/// linear order is the lexicographic order, and subtracting a point of the box that is
/// componentwise smaller is plain index subtraction. The box is closed under divisors,
/// which makes every length computed inside it exact.
class Window {
public:
    Window(const MonoidSpec& spec, IntVec upper) : upper_(std::move(upper)) {
        if (is_puiseux(spec)) throw UnsupportedOperation("lattice windows need an integer-vector family");
        if (upper_.size() != dimension(spec)) throw InputError("window dimension mismatch");
        const auto d = upper_.size();
        stride_.assign(d, 1);
        std::size_t total = 1;
        for (std::size_t i = d; i-- > 0;) {
            if (upper_[i] < 0) throw InputError("window bounds must be non-negative");
            stride_[i] = total;
            total *= static_cast<std::size_t>(upper_[i] + 1);
        }
        size_ = total;
        coords_.resize(size_ * d);
        member_.assign(size_, 0);

        IntVec p(d, 0);
        for (std::size_t idx = 0; idx < size_; ++idx) {
            std::copy(p.begin(), p.end(), coords_.begin() + static_cast<std::ptrdiff_t>(idx * d));
            member_[idx] = contains(spec, Point(p)) ? 1 : 0;
            if (member_[idx]) members_.push_back(idx);
            for (std::size_t i = d; i-- > 0;) {
                if (++p[i] <= upper_[i]) break;
                p[i] = 0;
            }
        }

        // e is an atom iff no atom found so far divides it properly.
        for (auto idx : members_) {
            if (idx == 0) continue;
            bool atom = true;
            for (auto u : atom_idx_) {
                if (u != idx && below(u, idx) && member_[idx - u]) {
                    atom = false;
                    break;
                }
            }
            if (atom) atom_idx_.push_back(idx);
        }
    }

    std::size_t dim() const noexcept { return upper_.size(); }
    const IntVec& upper() const noexcept { return upper_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t stride(std::size_t i) const { return stride_[i]; }

    bool in_box(const IntVec& p) const {
        if (p.size() != dim()) return false;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 0 || p[i] > upper_[i]) return false;
        return true;
    }

    std::size_t index(const IntVec& p) const {
        if (!in_box(p)) throw InputError("point " + to_string(p) + " outside the window");
        std::size_t idx = 0;
        for (std::size_t i = 0; i < p.size(); ++i) idx += static_cast<std::size_t>(p[i]) * stride_[i];
        return idx;
    }

    std::int64_t coord(std::size_t idx, std::size_t i) const {
        return coords_[idx * dim() + i];
    }

    IntVec point(std::size_t idx) const {
        return IntVec(coords_.begin() + static_cast<std::ptrdiff_t>(idx * dim()),
                      coords_.begin() + static_cast<std::ptrdiff_t>((idx + 1) * dim()));
    }
    Element element(std::size_t idx) const { return Element::vec(point(idx)); }

    bool member(std::size_t idx) const { return member_[idx] != 0; }
    /// Linear indices of members, ascending (lexicographic).
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    /// Linear indices of atoms, ascending (lexicographic).
    const std::vector<std::size_t>& atom_indices() const noexcept { return atom_idx_; }

    std::vector<Element> atoms() const {
        std::vector<Element> out;
        out.reserve(atom_idx_.size());
        for (auto a : atom_idx_) out.push_back(element(a));
        return out;
    }

    /// Componentwise a <= b.
    bool below(std::size_t a, std::size_t b) const {
        const auto d = dim();
        for (std::size_t i = 0; i < d; ++i)
            if (coords_[a * d + i] > coords_[b * d + i]) return false;
        return true;
    }

    /// a | b inside the box.
    bool divides(std::size_t a, std::size_t b) const { return below(a, b) && member_[b - a]; }

    std::int64_t coord_sum(std::size_t idx) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < dim(); ++i) s += coord(idx, i);
        return s;
    }

private:
    IntVec upper_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 0;
    std::vector<std::int64_t> coords_;
    std::vector<char> member_;
    std::vector<std::size_t> members_;
    std::vector<std::size_t> atom_idx_;
};

/// Upper corner of the box with every coordinate equal to bound.
inline IntVec cube(const MonoidSpec& spec, std::int64_t bound) {
    return IntVec(dimension(spec), bound);
}

/// Sets of lengths of every member of a window, as packed bitsets.
class LengthTable {
public:
    explicit LengthTable(const Window& w) : w_(&w) {
        std::int64_t max_len = 0;
        for (std::size_t i = 0; i < w.dim(); ++i) max_len += w.upper()[i];
        words_ = static_cast<std::size_t>(max_len / 64 + 1);
        bits_.assign(w.size() * words_, 0);
        if (w.member(0)) bits_[0] = 1;
        const auto& atoms = w.atom_indices();
        for (auto idx : w.members()) {
            if (idx == 0) continue;
            auto* dst = &bits_[idx * words_];
            for (auto u : atoms) {
                if (u > idx) break;
                if (!w.below(u, idx) || !w.member(idx - u)) continue;
                const auto* src = &bits_[(idx - u) * words_];
                std::uint64_t carry = 0;
                for (std::size_t k = 0; k < words_; ++k) {
                    dst[k] |= (src[k] << 1) | carry;
                    carry = src[k] >> 63;
                }
            }
        }
    }

    const Window& window() const noexcept { return *w_; }

    bool has(std::size_t idx, std::int64_t len) const {
        if (len < 0 || static_cast<std::size_t>(len) >= words_ * 64) return false;
        return (bits_[idx * words_ + static_cast<std::size_t>(len) / 64] >> (len % 64)) & 1u;
    }

    std::vector<std::int64_t> lengths(std::size_t idx) const {
        std::vector<std::int64_t> out;
        for (std::size_t k = 0; k < words_; ++k) {
            auto word = bits_[idx * words_ + k];
            while (word) {
                auto b = std::countr_zero(word);
                out.push_back(static_cast<std::int64_t>(k * 64) + b);
                word &= word - 1;
            }
        }
        return out;
    }

    /// -1 when the element has no factorization (not a member).
    std::int64_t min_length(std::size_t idx) const {
        for (std::size_t k = 0; k < words_; ++k)
            if (auto word = bits_[idx * words_ + k]) return static_cast<std::int64_t>(k * 64) + std::countr_zero(word);
        return -1;
    }

    std::int64_t max_length(std::size_t idx) const {
        for (std::size_t k = words_; k-- > 0;)
            if (auto word = bits_[idx * words_ + k])
                return static_cast<std::int64_t>(k * 64) + 63 - std::countl_zero(word);
        return -1;
    }

private:
    const Window* w_;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> bits_;
};

/// Atoms with every coordinate at most bound, sorted lexicographically.
inline std::vector<Element> atoms_up_to(const MonoidSpec& spec, std::int64_t bound) {
    if (is_puiseux(spec))
        throw UnsupportedOperation("atoms of puiseux-tail form the interval [1,2); use the closed forms");
    if (bound < 1) throw InputError("atom bound must be >= 1");
    if (auto s = std::get_if<Numerical>(&spec)) {
        std::vector<Element> out;
        for (auto g : s->generators())
            if (g <= bound) out.push_back(Element::scalar(g));
        return out;
    }
    return Window(spec, cube(spec, bound)).atoms();
}

/// x is an atom: a non-unit member with no decomposition into two non-units.
inline bool is_atom(const MonoidSpec& spec, const Element& x) {
    require_member(spec, x);
    if (x.is_zero()) throw InputError("the identity is a unit, not an atom");
    if (is_puiseux(spec)) return x.value() < 2;
    const auto& v = x.coords();
    if (auto s = std::get_if<Numerical>(&spec))
        return std::find(s->generators().begin(), s->generators().end(), v[0]) != s->generators().end();

    // Search over the box dominated by x.
    const auto d = v.size();
    IntVec p(d, 0);
    while (true) {
        for (std::size_t i = d; i-- > 0;) {
            if (++p[i] <= v[i]) break;
            p[i] = 0;
        }
        if (p == v) return true;
        if (contains(spec, Point(p)) && contains(spec, difference(x.point(), Point(p)))) return false;
    }
}

} // namespace factorlab
