#pragma once

#include <cstdint>
#include <string>

namespace factorlab {

/// How much a reported value can be trusted.
enum class Certification { Exact, LowerBound, Evidence, Unknown };

inline std::string to_string(Certification c) {
    switch (c) {
    case Certification::Exact: return "Exact";
    case Certification::LowerBound: return "LowerBound";
    case Certification::Evidence: return "Evidence";
    case Certification::Unknown: return "Unknown";
    }
    return "Unknown";
}

template <class T>
struct Certified {
    T value{};
    Certification certification = Certification::Unknown;
    std::int64_t bound_used = 0;
};

/// Explicit search limits. Hitting one is reported, never silently truncated.
struct Budget {
    /// Largest element (numerical) or box coordinate (vector families) scanned.
    std::int64_t element_bound = 60;
    /// Maximum number of factorizations enumerated for a single element.
    std::size_t max_factorizations = 20000;
    /// Multiples u + s with s up to this bound are scanned for tame degrees.
    std::int64_t radius = 20;
    /// Largest k for rho_k tables.
    std::int64_t k_max = 10;
    /// Largest power of the maximal ideal probed by the strong-primariness search.
    std::int64_t n_max = 8;
    /// Node limit for the omega search on predicate families.
    std::size_t max_nodes = 2'000'000;
};

} // namespace factorlab
