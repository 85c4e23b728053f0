#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "factorlab/errors.hpp"

namespace factorlab {

using Rational = boost::rational<std::int64_t>;
using IntVec = std::vector<std::int64_t>;

/// Signed point of the quotient group. Only used transiently (differences in divisibility tests).
using Point = std::variant<IntVec, Rational>;

inline std::int64_t floor_of(const Rational& q) {
    auto n = q.numerator();
    auto d = q.denominator();
    return n >= 0 ? n / d : -((-n + d - 1) / d);
}

inline std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::string to_string(const IntVec& v) {
    if (v.size() == 1) return std::to_string(v[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const Point& p) {
    return std::visit([](const auto& x) { return to_string(x); }, p);
}

/// A point of a monoid: a non-negative integer vector or a non-negative rational in lowest terms.
class Element {
public:
    Element() : p_(IntVec{0}) {}

    static Element vec(IntVec v) {
        for (auto c : v)
            if (c < 0) throw InputError("element coordinates must be non-negative: " + to_string(v));
        if (v.empty()) throw InputError("element must have dimension >= 1");
        return Element(Point(std::move(v)));
    }
    static Element scalar(std::int64_t n) { return vec(IntVec{n}); }
    static Element rat(Rational q) {
        if (q < 0) throw InputError("rational element must be non-negative: " + to_string(q));
        return Element(Point(q));
    }
    static Element rat(std::int64_t num, std::int64_t den) { return rat(Rational(num, den)); }

    /// Converts a signed point, throwing if it has a negative part.
    static Element from_point(const Point& p) {
        if (auto v = std::get_if<IntVec>(&p)) return vec(*v);
        return rat(std::get<Rational>(p));
    }

    bool is_vec() const noexcept { return std::holds_alternative<IntVec>(p_); }
    bool is_rat() const noexcept { return std::holds_alternative<Rational>(p_); }
    const IntVec& coords() const { return std::get<IntVec>(p_); }
    const Rational& value() const { return std::get<Rational>(p_); }
    const Point& point() const noexcept { return p_; }
    std::size_t dim() const { return is_vec() ? coords().size() : 1; }

    bool is_zero() const {
        if (is_rat()) return value() == Rational(0);
        for (auto c : coords())
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    friend bool operator<(const Element& a, const Element& b) {
        if (a.p_.index() != b.p_.index()) return a.p_.index() < b.p_.index();
        if (a.is_vec()) return a.coords() < b.coords();
        return a.value() < b.value();
    }
    friend bool operator>(const Element& a, const Element& b) { return b < a; }

private:
    explicit Element(Point p) : p_(std::move(p)) {}
    Point p_;
};

inline std::string to_string(const Element& e) { return to_string(e.point()); }

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }

namespace detail {

inline void require_same_kind(const Point& a, const Point& b) {
    if (a.index() != b.index()) throw InputError("mixing vector and rational elements");
    if (auto va = std::get_if<IntVec>(&a))
        if (va->size() != std::get<IntVec>(b).size()) throw InputError("dimension mismatch");
}

} // namespace detail

inline Point difference(const Point& b, const Point& a) {
    detail::require_same_kind(a, b);
    if (auto vb = std::get_if<IntVec>(&b)) {
        const auto& va = std::get<IntVec>(a);
        IntVec r(vb->size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*vb)[i] - va[i];
        return r;
    }
    return std::get<Rational>(b) - std::get<Rational>(a);
}

inline Element sum(const Element& a, const Element& b) {
    detail::require_same_kind(a.point(), b.point());
    if (a.is_vec()) {
        IntVec r(a.coords());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.coords()[i];
        return Element::vec(std::move(r));
    }
    return Element::rat(a.value() + b.value());
}

inline Element scaled(const Element& a, std::int64_t k) {
    if (a.is_vec()) {
        IntVec r(a.coords());
        for (auto& c : r) c *= k;
        return Element::vec(std::move(r));
    }
    return Element::rat(a.value() * k);
}

/// Componentwise a <= b for vectors, numeric order for rationals.
inline bool dominated(const Element& a, const Element& b) {
    detail::require_same_kind(a.point(), b.point());
    if (a.is_vec()) {
        for (std::size_t i = 0; i < a.coords().size(); ++i)
            if (a.coords()[i] > b.coords()[i]) return false;
        return true;
    }
    return a.value() <= b.value();
}

} // namespace factorlab
