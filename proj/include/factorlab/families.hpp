#pragma once

// Canonical text form, one spec per document, '#' starts a comment:
//
//   numerical: [6, 9, 20]
//   sqrt-cone: m = 2
//   half-space-diagonal
//   puiseux-tail
//   fin-gen-vec: [(1,0), (1,2)]

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorlab/element.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/monoid.hpp"

namespace factorlab {

namespace detail {

class SpecLexer {
public:
    explicit SpecLexer(std::string s) : s_(std::move(s)) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string word() {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }
    std::int64_t integer() {
        skip_ws();
        auto start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        auto tok = s_.substr(start, pos_ - start);
        if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
        try {
            return std::stoll(tok);
        } catch (const std::out_of_range&) {
            fail("integer out of range: " + tok);
        }
        return 0;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in spec text");
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

inline std::string strip_comments(const std::string& text) {
    std::string out;
    bool comment = false;
    for (char c : text) {
        if (c == '#') comment = true;
        if (c == '\n') comment = false;
        if (!comment) out += c;
    }
    return out;
}

} // namespace detail

/// Parses the canonical text form. Syntax and validation problems both raise ParseError.
inline MonoidSpec make(const std::string& text) {
    detail::SpecLexer lx(detail::strip_comments(text));
    auto family = lx.word();
    if (family.empty()) lx.fail("expected a family name");
    try {
        MonoidSpec out = PuiseuxTail{};
        if (family == "numerical") {
            lx.expect(':');
            lx.expect('[');
            std::vector<std::int64_t> gens;
            if (!lx.accept(']')) {
                do gens.push_back(lx.integer());
                while (lx.accept(','));
                lx.expect(']');
            }
            out = Numerical::from_generators(std::move(gens));
        } else if (family == "sqrt-cone") {
            lx.expect(':');
            if (lx.word() != "m") lx.fail("expected 'm'");
            lx.expect('=');
            out = SqrtCone::with_m(lx.integer());
        } else if (family == "half-space-diagonal") {
            out = HalfSpaceDiagonal{};
        } else if (family == "puiseux-tail") {
            out = PuiseuxTail{};
        } else if (family == "fin-gen-vec") {
            lx.expect(':');
            lx.expect('[');
            std::vector<IntVec> gens;
            if (!lx.accept(']')) {
                do {
                    lx.expect('(');
                    IntVec v;
                    do v.push_back(lx.integer());
                    while (lx.accept(','));
                    lx.expect(')');
                    gens.push_back(std::move(v));
                } while (lx.accept(','));
                lx.expect(']');
            }
            out = FinGenVec::from_generators(std::move(gens));
        } else {
            lx.fail("unknown family '" + family + "'");
        }
        if (!lx.at_end()) lx.fail("trailing input");
        return out;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

inline std::string render(const MonoidSpec& spec) {
    return std::visit(
        [](const auto& h) -> std::string {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, Numerical>) {
                std::string s = "numerical: [";
                for (std::size_t i = 0; i < h.generators().size(); ++i) {
                    if (i) s += ", ";
                    s += std::to_string(h.generators()[i]);
                }
                return s + "]";
            } else if constexpr (std::is_same_v<T, SqrtCone>) {
                return "sqrt-cone: m = " + std::to_string(h.m());
            } else if constexpr (std::is_same_v<T, HalfSpaceDiagonal>) {
                return "half-space-diagonal";
            } else if constexpr (std::is_same_v<T, PuiseuxTail>) {
                return "puiseux-tail";
            } else {
                std::string s = "fin-gen-vec: [";
                for (std::size_t i = 0; i < h.generators().size(); ++i) {
                    if (i) s += ", ";
                    const auto& g = h.generators()[i];
                    s += "(";
                    for (std::size_t j = 0; j < g.size(); ++j) {
                        if (j) s += ",";
                        s += std::to_string(g[j]);
                    }
                    s += ")";
                }
                return s + "]";
            }
        },
        spec);
}

/// Family name as used in the canonical text.
inline std::string family_name(const MonoidSpec& spec) {
    auto r = render(spec);
    return r.substr(0, r.find(':'));
}

/// Numerical monoid drawn from mt19937_64(seed): between 2 and max_generators distinct values in
/// [2, max_value], redrawn until their gcd is 1, then reduced to the minimal generating set.
inline MonoidSpec random_numerical(std::uint64_t seed, int max_generators, std::int64_t max_value) {
    if (max_generators < 2 || max_value < 3) throw InputError("random_numerical needs max_generators >= 2 and max_value >= 3");
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(max_value - 1);
    while (true) {
        auto k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_generators - 1));
        k = static_cast<int>(std::min<std::int64_t>(k, max_value - 1));
        std::vector<std::int64_t> gens;
        while (static_cast<int>(gens.size()) < k) {
            auto g = 2 + static_cast<std::int64_t>(rng() % span);
            if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
        }
        std::int64_t d = 0;
        for (auto g : gens) d = std::gcd(d, g);
        if (d == 1) return Numerical::from_generators(std::move(gens));
    }
}

/// Curated facts per family. Nothing here is computed from the monoid.
struct FamilyMetadata {
    std::string family;
    bool is_reduced = true;
    /// Descriptor of the complete integral closure; "unknown" when not recorded.
    std::string complete_integral_closure = "unknown";
    std::optional<bool> closure_is_valuation;
    std::optional<bool> closure_is_primary_valuation;
    /// Descriptor of the conductor (H : H^); "unknown" when not recorded.
    std::string conductor_descriptor = "unknown";
    std::optional<bool> conductor_nonempty;
    std::optional<bool> strongly_primary;
    std::vector<std::string> known_properties;
};

inline FamilyMetadata metadata(const MonoidSpec& spec) {
    FamilyMetadata m;
    m.family = family_name(spec);
    if (auto s = std::get_if<Numerical>(&spec)) {
        m.complete_integral_closure = "(N0,+), a discrete valuation monoid";
        m.closure_is_valuation = true;
        m.closure_is_primary_valuation = true;
        m.conductor_descriptor = "{x : x >= " + std::to_string(s->frobenius() + 1) + "}";
        m.conductor_nonempty = true;
        m.strongly_primary = true;
        m.known_properties = {"finitely generated", "primary", "strongly primary", "finite complement in N0"};
    } else if (std::holds_alternative<SqrtCone>(spec)) {
        m.strongly_primary = false;
        m.known_properties = {"root-closed", "primary", "BF", "not Mori", "not strongly primary", "not locally tame"};
    } else if (std::holds_alternative<HalfSpaceDiagonal>(spec)) {
        m.known_properties = {"Mori", "catenary degree 3", "sets of lengths are arithmetical progressions with difference 1",
                              "not locally tame"};
    } else if (std::holds_alternative<PuiseuxTail>(spec)) {
        m.complete_integral_closure = "(Q>=0,+), a non-discrete valuation monoid";
        m.closure_is_valuation = true;
        m.closure_is_primary_valuation = true;
        m.conductor_descriptor = "{q : q >= 1}";
        m.conductor_nonempty = true;
        m.strongly_primary = true;
        m.known_properties = {"primary", "strongly primary", "Lambda infinite"};
    } else if (auto f = std::get_if<FinGenVec>(&spec)) {
        m.known_properties = {"finitely generated", "BF"};
        if (f->generators().size() == 1) {
            m.complete_integral_closure = "(N0,+), a discrete valuation monoid";
            m.closure_is_valuation = true;
            m.closure_is_primary_valuation = true;
            m.conductor_descriptor = "H";
            m.conductor_nonempty = true;
            m.strongly_primary = true;
            m.known_properties.push_back("factorial");
        }
    }
    return m;
}

/// Instances every suite runs on besides the seeded random ones.
inline std::vector<MonoidSpec> builtin_specs() {
    return {make("numerical: [2, 3]"), make("numerical: [3, 5]"), make("numerical: [6, 9, 20]"),
            make("numerical: [4, 6, 9]"), make("fin-gen-vec: [(1,2)]")};
}

} // namespace factorlab
