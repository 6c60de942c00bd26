#ifndef TESSCENSUS_GENFUNC_HPP
#define TESSCENSUS_GENFUNC_HPP

#include <string_view>

#include "tesscensus/polyarith.hpp"
#include "tesscensus/schlafli.hpp"

namespace tesscensus {

/// Which derivation produced a CensusGF.
enum class CaseTag { Tree, Even, Triangle, Odd };

std::string_view to_string(CaseTag tag) noexcept;

/**
 * Generating functions of the vertex census by generation.
 *
 * v counts all vertices; a, b, c count type-A (one parent), type-B (two
 * parents) and type-C (one parent and one cousin) vertices. For the
 * Triangle case a and b refer to the graph with fraternal edges removed.
 * Always 1 + a + b + c == v.
 */
struct CensusGF {
    Schlafli symbol;
    CaseTag case_tag;
    RationalGF v;
    RationalGF a;
    RationalGF b;
    RationalGF c;
};

/// {inf,q}: the q-regular tree. Throws BadDegree if q < 3.
CensusGF gf_infinite(int q);

/// {2r,q}. Throws BadShape unless p is even and >= 4, SphericalOutOfScope for {4,3}.
CensusGF gf_even(int p, int q);

/// {3,q} through the four-regular-face reduction. Throws SphericalOutOfScope if q <= 5.
CensusGF gf_triangle(int q);

/// {2r+1,q} with r >= 2. Throws BadShape unless p is odd and >= 5, SphericalOutOfScope for {5,3}.
CensusGF gf_odd(int p, int q);

/// Dispatches on p. Throws SphericalOutOfScope for spherical symbols.
CensusGF derive(const Schlafli& s);

}  // namespace tesscensus

#endif  // TESSCENSUS_GENFUNC_HPP
