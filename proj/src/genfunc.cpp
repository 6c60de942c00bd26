#include "tesscensus/genfunc.hpp"

#include <cstddef>

#include "tesscensus/errors.hpp"

namespace tesscensus {

std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::Tree: return "TREE";
        case CaseTag::Even: return "EVEN";
        case CaseTag::Triangle: return "TRIANGLE";
        case CaseTag::Odd: return "ODD";
    }
    return "UNKNOWN";
}

namespace {

IntPoly term(long c, std::size_t power) { return IntPoly::monomial(BigInt(c), power); }

// Type series share one denominator; V is assembled from the raw numerators
// so that all common factors are removed by a single normalization.
CensusGF assemble(Schlafli symbol, CaseTag tag, const IntPoly& den, const IntPoly& a_num,
                  const IntPoly& b_num, const IntPoly& c_num) {
    const IntPoly v_num = den + a_num + b_num + c_num;
    return CensusGF{symbol,
                    tag,
                    gf_normalize(v_num, den),
                    gf_normalize(a_num, den),
                    gf_normalize(b_num, den),
                    gf_normalize(c_num, den)};
}

}  // namespace

CensusGF gf_infinite(int q) {
    if (q < 3) throw BadDegree("vertex degree q must be >= 3, got " + std::to_string(q));
    // A = qz / (1 - (q-1)z)
    const IntPoly den = term(1, 0) - term(q - 1, 1);
    return assemble(Schlafli::infinite(q), CaseTag::Tree, den, term(q, 1), {}, {});
}

CensusGF gf_even(int p, int q) {
    if (p < 4 || p % 2 != 0) throw BadShape("gf_even needs even p >= 4, got p = " + std::to_string(p));
    const Schlafli s = Schlafli::finite(p, q);
    if (!s.admissible()) throw SphericalOutOfScope(p, q);
    const auto r = static_cast<std::size_t>(p / 2);

    // D = 1 - (q-1)z + (q-1)z^r - z^(r+1)
    const IntPoly den = term(1, 0) - term(q - 1, 1) + term(q - 1, r) - term(1, r + 1);
    // A = qz(1 - 2z^(r-1) + z^r) / D,  B = qz^r(1 - z) / D
    const IntPoly a_num = term(q, 1) * (term(1, 0) - term(2, r - 1) + term(1, r));
    const IntPoly b_num = term(q, r) * (term(1, 0) - term(1, 1));
    return assemble(s, CaseTag::Even, den, a_num, b_num, {});
}

CensusGF gf_triangle(int q) {
    const Schlafli s = Schlafli::finite(3, q);
    if (!s.admissible()) throw SphericalOutOfScope(3, q);
    // Solution of the reduced four-face system:
    //   A + 2B = (q-3)zA + (q-4)zB + qz,  B = (q-4)z^2 A + (q-5)z^2 B + qz^2.
    // D = 1 - (q-4)z + z^2
    const IntPoly den = term(1, 0) - term(q - 4, 1) + term(1, 2);
    const IntPoly a_num = term(q, 1) * (term(1, 0) - term(1, 1));
    const IntPoly b_num = term(q, 2);
    return assemble(s, CaseTag::Triangle, den, a_num, b_num, {});
}

CensusGF gf_odd(int p, int q) {
    if (p < 5 || p % 2 == 0) throw BadShape("gf_odd needs odd p >= 5, got p = " + std::to_string(p));
    const Schlafli s = Schlafli::finite(p, q);
    if (!s.admissible()) throw SphericalOutOfScope(p, q);
    const auto r = static_cast<std::size_t>((p - 1) / 2);

    // D = 1 - (q-1)z + 2z^r - 2z^(r+1) + (q-1)z^(2r) - z^(2r+1)
    const IntPoly den = term(1, 0) - term(q - 1, 1) + term(2, r) - term(2, r + 1) +
                        term(q - 1, 2 * r) - term(1, 2 * r + 1);
    const IntPoly one_minus_z = term(1, 0) - term(1, 1);
    // A = qz(1 + z^r)(1 - 2z^(r-1) + z^r) / D
    const IntPoly a_num = term(q, 1) * (term(1, 0) + term(1, r)) *
                          (term(1, 0) - term(2, r - 1) + term(1, r));
    // B = qz^(2r)(1 - z) / D,  C = 2qz^r(1 - z) / D
    const IntPoly b_num = term(q, 2 * r) * one_minus_z;
    const IntPoly c_num = term(2 * q, r) * one_minus_z;
    return assemble(s, CaseTag::Odd, den, a_num, b_num, c_num);
}

CensusGF derive(const Schlafli& s) {
    const auto p = s.p();
    if (!p) return gf_infinite(s.q());
    if (!s.admissible()) throw SphericalOutOfScope(*p, s.q());
    if (*p == 3) return gf_triangle(s.q());
    if (*p % 2 == 0) return gf_even(*p, s.q());
    return gf_odd(*p, s.q());
}

}  // namespace tesscensus
