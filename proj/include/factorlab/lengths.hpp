#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "factorlab/errors.hpp"

namespace factorlab {

/// Finite set of factorization lengths, stored strictly increasing.
class LengthSet {
public:
    LengthSet() = default;
    explicit LengthSet(std::vector<std::int64_t> v) : v_(std::move(v)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    const std::vector<std::int64_t>& values() const noexcept { return v_; }
    bool empty() const noexcept { return v_.empty(); }
    std::size_t size() const noexcept { return v_.size(); }
    bool contains(std::int64_t x) const { return std::binary_search(v_.begin(), v_.end(), x); }

    std::int64_t min() const {
        if (v_.empty()) throw InputError("min of an empty length set");
        return v_.front();
    }
    std::int64_t max() const {
        if (v_.empty()) throw InputError("max of an empty length set");
        return v_.back();
    }

    friend bool operator==(const LengthSet& a, const LengthSet& b) { return a.v_ == b.v_; }

private:
    std::vector<std::int64_t> v_;
};

/// Successive gaps of L, sorted ascending and duplicate-free. Empty iff |L| <= 1.
inline std::vector<std::int64_t> delta_of(const LengthSet& L) {
    std::vector<std::int64_t> out;
    const auto& v = L.values();
    for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// L(a) + L(b).
inline LengthSet sumset(const LengthSet& a, const LengthSet& b) {
    std::vector<std::int64_t> out;
    for (auto x : a.values())
        for (auto y : b.values()) out.push_back(x + y);
    return LengthSet(std::move(out));
}

inline std::string to_string(const LengthSet& L) {
    std::string s = "{";
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(L.values()[i]);
    }
    return s + "}";
}

} // namespace factorlab
