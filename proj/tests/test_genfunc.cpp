#include <doctest.h>

#include <optional>
#include <vector>

#include "tesscensus/genfunc.hpp"

using namespace tesscensus;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<BigInt> head(const RationalGF& g, std::size_t n) { return series_coeffs(g, n); }

// Every admissible symbol with p in {3..12, inf} and q in {3..12}.
std::vector<Schlafli> grid() {
    std::vector<Schlafli> out;
    for (int q = 3; q <= 12; ++q) {
        for (int p = 3; p <= 12; ++p) {
            const Schlafli s = Schlafli::finite(p, q);
            if (s.admissible()) out.push_back(s);
        }
        out.push_back(Schlafli::infinite(q));
    }
    return out;
}

}  // namespace

TEST_CASE("Schlafli classification is exact") {
    CHECK(Schlafli::finite(4, 4).euclidean());
    CHECK(Schlafli::finite(3, 6).euclidean());
    CHECK(Schlafli::finite(6, 3).euclidean());
    CHECK(Schlafli::finite(4, 5).hyperbolic());
    CHECK_FALSE(Schlafli::finite(3, 5).admissible());
    CHECK_FALSE(Schlafli::finite(5, 3).admissible());
    CHECK(Schlafli::infinite(3).hyperbolic());
    CHECK(Schlafli::infinite(3).p() == std::nullopt);
    CHECK(Schlafli::parse("inf", "3") == Schlafli::infinite(3));
    CHECK(Schlafli::parse("7", "3").to_string() == "{7,3}");
    CHECK(Schlafli::infinite(5).to_string() == "{inf,5}");
    CHECK_THROWS_AS(Schlafli::parse("x", "3"), BadSymbol);
    CHECK_THROWS_AS(Schlafli::parse("4", ""), BadSymbol);
    CHECK_THROWS_AS(Schlafli::finite(2, 5), BadSymbol);
    CHECK_THROWS_AS(Schlafli::finite(5, 2), BadSymbol);
}

TEST_CASE("tree generating functions") {
    const CensusGF t3 = gf_infinite(3);
    CHECK(t3.case_tag == CaseTag::Tree);
    CHECK(t3.v.num() == IntPoly{1, 1});
    CHECK(t3.v.den() == IntPoly{1, -2});
    CHECK(head(t3.v, 4) == big({1, 3, 6, 12, 24}));
    CHECK(head(gf_infinite(4).v, 5)[5] == 324);
    CHECK(t3.b.is_zero());
    CHECK(t3.c.is_zero());
    CHECK_THROWS_AS(gf_infinite(2), BadDegree);
}

TEST_CASE("even face degree") {
    const CensusGF e44 = gf_even(4, 4);
    CHECK(e44.v.num() == IntPoly{1, 2, 1});
    CHECK(e44.v.den() == IntPoly{1, -2, 1});
    CHECK(head(e44.v, 4) == big({1, 4, 8, 12, 16}));

    const CensusGF e45 = gf_even(4, 5);
    CHECK(e45.v.num() == IntPoly{1, 2, 1});
    CHECK(e45.v.den() == IntPoly{1, -3, 1});

    const CensusGF e63 = gf_even(6, 3);
    CHECK(e63.v.num() == IntPoly{1, 1, 1});
    CHECK(e63.v.den() == IntPoly{1, -2, 1});
    CHECK(head(e63.v, 4) == big({1, 3, 6, 9, 12}));

    const CensusGF e64 = gf_even(6, 4);
    CHECK(e64.v.num() == IntPoly{1, 1, 1});
    CHECK(e64.v.den() == IntPoly{1, -3, 1});

    // Values counted on an explicitly built {8,3} disk.
    CHECK(head(gf_even(8, 3).v, 4) == big({1, 3, 6, 12, 21}));

    CHECK_THROWS_AS(gf_even(5, 4), BadShape);
    CHECK_THROWS_AS(gf_even(4, 3), SphericalOutOfScope);
}

TEST_CASE("triangles") {
    const CensusGF t6 = gf_triangle(6);
    CHECK(t6.case_tag == CaseTag::Triangle);
    CHECK(t6.v.num() == IntPoly{1, 4, 1});
    CHECK(t6.v.den() == IntPoly{1, -2, 1});
    CHECK(head(t6.v, 4) == big({1, 6, 12, 18, 24}));

    const CensusGF t7 = gf_triangle(7);
    CHECK(t7.v.num() == IntPoly{1, 4, 1});
    CHECK(t7.v.den() == IntPoly{1, -3, 1});
    CHECK(head(t7.v, 4) == big({1, 7, 21, 56, 147}));

    // Counted on an explicitly built {3,8} disk.
    CHECK(head(gf_triangle(8).v, 2)[2] == 32);
    CHECK_THROWS_AS(gf_triangle(5), SphericalOutOfScope);
}

TEST_CASE("odd face degree") {
    const CensusGF o54 = gf_odd(5, 4);
    CHECK(o54.case_tag == CaseTag::Odd);
    CHECK(o54.v.num() == IntPoly{1, 2, 4, 2, 1});
    CHECK(o54.v.den() == IntPoly{1, -2, 0, -2, 1});
    // Counted on explicitly built disks.
    CHECK(head(o54.v, 5) == big({1, 4, 12, 28, 64, 148}));
    CHECK(head(gf_odd(7, 3).v, 10) == big({1, 3, 6, 12, 18, 30, 45, 72, 111, 174, 270}));
    CHECK(head(o54.c, 2)[2] == 8);

    CHECK_THROWS_AS(gf_odd(6, 4), BadShape);
    CHECK_THROWS_AS(gf_odd(3, 7), BadShape);
    CHECK_THROWS_AS(gf_odd(5, 3), SphericalOutOfScope);
}

TEST_CASE("derive dispatch") {
    CHECK(derive(Schlafli::finite(4, 4)).case_tag == CaseTag::Even);
    CHECK(derive(Schlafli::finite(3, 6)).case_tag == CaseTag::Triangle);
    CHECK(derive(Schlafli::infinite(3)).case_tag == CaseTag::Tree);
    CHECK(derive(Schlafli::finite(9, 3)).case_tag == CaseTag::Odd);
    CHECK(to_string(CaseTag::Triangle) == "TRIANGLE");
    CHECK_THROWS_AS(derive(Schlafli::finite(3, 5)), SphericalOutOfScope);
    CHECK_THROWS_AS(derive(Schlafli::finite(3, 3)), SphericalOutOfScope);
}

TEST_CASE("grid: V = 1 + A + B + C") {
    for (const Schlafli& s : grid()) {
        CAPTURE(s.to_string());
        const CensusGF g = derive(s);
        const RationalGF sum = gf_add(gf_add(gf_add(gf_normalize({1}, {1}), g.a), g.b), g.c);
        CHECK(sum == g.v);
    }
}

TEST_CASE("grid: leading terms and nonnegativity") {
    for (const Schlafli& s : grid()) {
        CAPTURE(s.to_string());
        const CensusGF g = derive(s);
        const int q = s.q();
        const auto v = head(g.v, 40);
        CHECK(v[0] == 1);
        CHECK(v[1] == q);
        CHECK(head(g.a, 1)[1] == q);
        for (const RationalGF* f : {&g.v, &g.a, &g.b, &g.c}) {
            for (const BigInt& x : head(*f, 40)) CHECK(x >= 0);
        }
        if (!s.p()) continue;
        const int p = *s.p();
        const auto b = head(g.b, 2 * p);
        const auto c = head(g.c, 2 * p);
        auto first_nonzero = [](const std::vector<BigInt>& xs) {
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (xs[i] != 0) return std::pair<std::size_t, BigInt>(i, xs[i]);
            }
            return std::pair<std::size_t, BigInt>(xs.size(), 0);
        };
        if (g.case_tag == CaseTag::Even) {
            CHECK(first_nonzero(b) == std::pair<std::size_t, BigInt>(p / 2, q));
        } else if (g.case_tag == CaseTag::Odd) {
            const std::size_t r = static_cast<std::size_t>(p / 2);
            CHECK(first_nonzero(b) == std::pair<std::size_t, BigInt>(2 * r, q));
            CHECK(first_nonzero(c) == std::pair<std::size_t, BigInt>(r, 2 * q));
        }
    }
}

TEST_CASE("{6,q} and {4,q+1} share the V denominator") {
    for (int q = 3; q <= 10; ++q) {
        CAPTURE(q);
        CHECK(derive(Schlafli::finite(6, q)).v.den() == derive(Schlafli::finite(4, q + 1)).v.den());
    }
}

TEST_CASE("Euclidean censuses grow linearly") {
    const std::pair<Schlafli, long> cases[] = {
        {Schlafli::finite(4, 4), 4}, {Schlafli::finite(3, 6), 6}, {Schlafli::finite(6, 3), 3}};
    for (const auto& [s, step] : cases) {
        const auto v = head(derive(s).v, 100);
        for (std::size_t n = 1; n <= 100; ++n) CHECK(v[n] == step * static_cast<long>(n));
    }
}
