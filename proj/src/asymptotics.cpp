#include "tesscensus/asymptotics.hpp"

#include <algorithm>
#include <stdexcept>

#include "tesscensus/errors.hpp"

namespace tesscensus {

std::string_view to_string(GrowthClass c) noexcept {
    switch (c) {
        case GrowthClass::Hyperbolic: return "HYPERBOLIC";
        case GrowthClass::Euclidean: return "EUCLIDEAN";
        case GrowthClass::Tree: return "TREE";
    }
    return "UNKNOWN";
}

namespace {

constexpr unsigned kScanSteps = 4096;

int sign_at(const IntPoly& poly, const BigRational& x) { return sgn(poly.eval(x)); }

// Upper bound for |f'| on [0,1]: sum of |k * f_k|.
BigRational derivative_bound(const IntPoly& f) {
    BigRational bound = 0;
    const auto df = f.derivative();
    for (const auto& c : df.coeffs()) bound += BigRational(abs(c));
    return bound;
}

RootEnclosure isolate_smallest_root(const IntPoly& q) {
    const BigRational step(1, kScanSteps);
    BigRational lo = 0;
    int s_lo = sign_at(q, lo);
    if (s_lo == 0) throw NoRootFound("denominator vanishes at z = 0");
    for (unsigned i = 1; i < kScanSteps; ++i) {
        BigRational x = step * i;
        const int s = sign_at(q, x);
        if (s == 0) return {x, x};
        if (s != s_lo) {
            BigRational hi = x;
            while (BigRational(hi - lo).get_d() > kRootWidth) {
                BigRational mid = (lo + hi) / 2;
                const int sm = sign_at(q, mid);
                if (sm == 0) return {mid, mid};
                (sm == s_lo ? lo : hi) = mid;
            }
            return {lo, hi};
        }
    }
    throw NoRootFound("denominator " + q.to_string() + " has no sign change in (0,1)");
}

}  // namespace

GrowthInfo growth(const RationalGF& gf, const Schlafli& s) {
    if (!s.admissible()) throw std::invalid_argument("growth: " + s.to_string() + " is spherical");
    GrowthInfo info;
    if (s.euclidean()) {
        info.classification = GrowthClass::Euclidean;
        info.lambda = 1.0;
        return info;
    }
    info.classification = s.has_finite_faces() ? GrowthClass::Hyperbolic : GrowthClass::Tree;

    const IntPoly& q = gf.den();
    const IntPoly dq = q.derivative();
    const RootEnclosure root = isolate_smallest_root(q);

    // Simple root: |Q'| on the bracket stays above the drift allowed by |Q''|.
    const BigRational mid = (root.lo + root.hi) / 2;
    const BigRational slope = dq.eval(mid);
    const BigRational drift = derivative_bound(dq) * (root.hi - root.lo);
    if (abs(slope) <= drift) throw NoRootFound("root of " + q.to_string() + " is not certifiably simple");

    info.z0_enclosure = root;
    info.z0 = mid.get_d();
    const BigRational amplitude = -gf.num().eval(mid) / (mid * slope);
    info.amplitude = amplitude.get_d();
    if (info.classification == GrowthClass::Tree) {
        info.lambda = static_cast<double>(s.q() - 1);
    } else {
        info.lambda = BigRational(1 / mid).get_d();
    }
    return info;
}

bool palindrome_check(const IntPoly& q) {
    const auto c = q.coeffs();
    return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

double ratio_probe(const LinRec& rec, std::size_t n) {
    if (n < 1) throw std::invalid_argument("ratio_probe: n must be >= 1");
    const auto v = rec_eval(rec, n);
    if (sgn(v[n - 1]) == 0) throw std::domain_error("ratio_probe: v(n-1) is zero");
    BigRational ratio(v[n], v[n - 1]);
    ratio.canonicalize();
    return ratio.get_d();
}

}  // namespace tesscensus
