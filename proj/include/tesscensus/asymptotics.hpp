#ifndef TESSCENSUS_ASYMPTOTICS_HPP
#define TESSCENSUS_ASYMPTOTICS_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "tesscensus/polyarith.hpp"
#include "tesscensus/recurrence.hpp"
#include "tesscensus/schlafli.hpp"

namespace tesscensus {

enum class GrowthClass { Hyperbolic, Euclidean, Tree };

std::string_view to_string(GrowthClass c) noexcept;

/// Exact rational bracket [lo, hi] around a simple root.
struct RootEnclosure {
    BigRational lo;
    BigRational hi;

    double midpoint() const { return BigRational((lo + hi) / 2).get_d(); }
    double width() const { return BigRational(hi - lo).get_d(); }
};

/// v(n) ~ amplitude * lambda^n.
struct GrowthInfo {
    GrowthClass classification = GrowthClass::Euclidean;
    double lambda = 1.0;
    /// Absent for Euclidean symbols, where z = 1 is a multiple root.
    std::optional<double> z0;
    std::optional<RootEnclosure> z0_enclosure;
    std::optional<double> amplitude;
};

/// Certified enclosure width for z0.
inline constexpr double kRootWidth = 1e-12;

/**
 * Growth constants of the census P/Q of symbol s. Hyperbolic z0 is the
 * smallest root of Q in (0,1), isolated by an exact sign-change scan and
 * dyadic bisection; the amplitude is -P(z0) / (z0 Q'(z0)).
 *
 * Throws NoRootFound if Q has no sign change in (0,1) or the root is not
 * certifiably simple.
 */
GrowthInfo growth(const RationalGF& gf, const Schlafli& s);

/// True iff the coefficient sequence reads the same in both directions.
bool palindrome_check(const IntPoly& q);

/// v(n) / v(n-1) rounded to binary64 from the exact quotient.
double ratio_probe(const LinRec& rec, std::size_t n);

}  // namespace tesscensus

#endif  // TESSCENSUS_ASYMPTOTICS_HPP
