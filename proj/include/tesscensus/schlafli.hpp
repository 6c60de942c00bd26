#ifndef TESSCENSUS_SCHLAFLI_HPP
#define TESSCENSUS_SCHLAFLI_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tesscensus/errors.hpp"

namespace tesscensus {

/// Face degree of the tree tessellations {inf,q}.
struct InfiniteFace {
    friend bool operator==(InfiniteFace, InfiniteFace) = default;
};

using FaceDegree = std::variant<int, InfiniteFace>;

/// Regular tessellation symbol {p,q}: every face has degree p, every vertex degree q.
class Schlafli {
public:
    /// Throws BadSymbol unless p >= 3 (or infinite) and q >= 3.
    Schlafli(FaceDegree p, int q);

    static Schlafli finite(int p, int q) { return Schlafli(p, q); }
    static Schlafli infinite(int q) { return Schlafli(InfiniteFace{}, q); }

    /// Parses "inf" or a decimal integer for p. Throws BadSymbol on malformed text.
    static Schlafli parse(std::string_view p, std::string_view q);

    bool has_finite_faces() const noexcept { return std::holds_alternative<int>(p_); }
    /// Face degree; std::nullopt for the tree case.
    std::optional<int> p() const noexcept;
    int q() const noexcept { return q_; }

    // Exact comparisons of 1/p + 1/q against 1/2, i.e. of 2(p+q) against pq.
    bool admissible() const noexcept;
    bool euclidean() const noexcept;
    bool hyperbolic() const noexcept;

    /// "{4,5}" or "{inf,3}".
    std::string to_string() const;
    /// "4" or "inf".
    std::string p_string() const;

    friend bool operator==(const Schlafli&, const Schlafli&) = default;

private:
    FaceDegree p_;
    int q_;
};

}  // namespace tesscensus

#endif  // TESSCENSUS_SCHLAFLI_HPP
